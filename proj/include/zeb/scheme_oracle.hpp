#pragma once

#include <algorithm>
#include <optional>
#include <string>
#include <vector>

#include "zeb/graph.hpp"

namespace zeb {

// Message counts per user at a fixed block length.
struct MessageVector {
    std::vector<long long> counts;
    int n = 1;
};

long long tuple_count(const MessageVector& mv);

// Message tuples are ordered lexicographically with the last user fastest;
// digits are 0-based in memory and 1-based in reports.
std::vector<int> tuple_digits(const MessageVector& mv, long long index);
long long tuple_index(const MessageVector& mv, const std::vector<int>& digits);

// Total encoding map: codewords[t] is the word sent for message tuple t.
struct EncodingScheme {
    MessageVector shape;
    std::vector<Word> codewords;
};

// A scheme is valid when every pair of tuples differing in user i's message
// maps to words user i can tell apart.
bool valid_scheme(const std::vector<ConfusionGraph>& graphs, const EncodingScheme& scheme);

struct SchemeBudget {
    long long max_tuples = 64;
    long long max_words = 1ll << 20;            // candidate codewords k^n
    unsigned long long max_nodes = 1ull << 26;  // candidates examined
};

struct SchemeSearchResult {
    std::optional<EncodingScheme> scheme; // empty means exhaustively infeasible
    unsigned long long nodes = 0;         // candidates examined
};

// Exhaustive backtracking over codeword assignments in lexicographic order.
// The first tuple only tries words canonical under the simultaneous
// automorphisms of all graphs, which is sound because relabelling letters by
// an automorphism preserves validity.  Deterministic; reruns return the same
// witness.  Throws BudgetExceeded instead of guessing when a cap is hit.
SchemeSearchResult is_feasible(const std::vector<ConfusionGraph>& graphs,
                               const MessageVector& mv, const SchemeBudget& budget = {});

// Pareto-maximal feasible message vectors for two users at block length n,
// swept with the oracle.  Feasibility is monotone in each count, so maximal
// m2 per m1 is found by bisection.
std::vector<MessageVector> frontier(const std::vector<ConfusionGraph>& graphs, int n,
                                    const SchemeBudget& budget = {});

// Time sharing: run scheme a, then scheme b.  Message counts multiply and
// block lengths add; validity is preserved.
EncodingScheme concatenate(const EncodingScheme& a, const EncodingScheme& b);

// Words with a prescribed letter histogram.
struct TypeClass {
    std::vector<int> composition;  // count per letter, sums to n
    unsigned long long size = 0;   // number of words (multinomial coefficient)

    TypeClass(std::vector<int> comp, unsigned long long size_guard = 10'000'000);
};

// Multinomial coefficient n!/(c1!...ck!), or nullopt when it exceeds cap.
std::optional<unsigned long long> multinomial_capped(const std::vector<int>& composition,
                                                     unsigned long long cap);

// Visits every word of the type class in lexicographic order.
template <typename F>
void for_each_type_class_word(const std::vector<int>& composition, F&& fn) {
    Word w;
    for (std::size_t letter = 0; letter < composition.size(); ++letter)
        w.insert(w.end(), composition[letter], static_cast<int>(letter));
    if (w.empty()) return;
    do {
        fn(static_cast<const Word&>(w));
    } while (std::next_permutation(w.begin(), w.end()));
}

// Number of distinct joint observation strings the users in `users` can see
// across the type class, computed by enumeration with deduplication.
long long type_class_count(const std::vector<CliquePartition>& parts,
                           const std::vector<int>& composition, const std::vector<int>& users,
                           unsigned long long size_guard = 10'000'000);

// Verifies the counting sandwich 2^{Hn}/n^k <= N <= 2^{Hn} for the type
// class, where H is the subset entropy at the empirical distribution.
// The count is exact; the entropy sides get 1e-9 slack in log scale.
bool lemma9_check(const std::vector<CliquePartition>& parts, const std::vector<int>& composition,
                  const std::vector<int>& users, unsigned long long size_guard = 10'000'000);

} // namespace zeb
