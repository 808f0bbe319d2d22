#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "zeb/graph.hpp"

namespace zeb {

// One user's side of a random code: the observation strings that user can
// see across the type class, split into one family per message.  Families
// may be empty; observation strings inside a family are in lexicographic
// order.  Observation letters are clique class ids.
struct FamilyPartition {
    int user = 0;
    std::vector<std::vector<Word>> families;
};

struct RandomCodeResult {
    // One partition per user on success; empty when every retry failed.
    std::optional<std::vector<FamilyPartition>> families;
    int attempts = 0;
    // Per message tuple (lex index): number of failed attempts in which no
    // type-class word served it.  Failure near the region boundary is a
    // legitimate outcome; these counts say where coverage broke down.
    std::vector<long long> tuple_failures;
};

// Draws each user's observation-to-message assignment uniformly at random
// (one mt19937_64 stream seeded once, shared across retries), then checks
// that every message tuple is served by some word of the type class.
// Deterministic for a fixed seed.
RandomCodeResult build_scheme(const std::vector<CliquePartition>& parts,
                              const std::vector<int>& composition,
                              const std::vector<int>& counts, std::uint64_t seed,
                              int max_retries = 50,
                              unsigned long long size_guard = 10'000'000,
                              long long max_tuples = 10'000);

struct ValidationResult {
    bool ok = false;
    std::vector<int> unservable_tuple; // first failing tuple (lex order) when !ok
};

// Re-checks a family assignment against the type class: every message tuple
// needs a word whose per-user observations land in the selected families.
ValidationResult validate_scheme(const std::vector<CliquePartition>& parts,
                                 const std::vector<int>& composition,
                                 const std::vector<FamilyPartition>& families,
                                 unsigned long long size_guard = 10'000'000);

// Message index recovered from an observation string, or UnknownObservation.
int decode(const FamilyPartition& fp, const Word& observation);

// First type-class word (lexicographic order) serving the tuple; the
// encoder's deterministic choice.  Throws when the tuple is unservable.
Word encode(const std::vector<CliquePartition>& parts, const std::vector<int>& composition,
            const std::vector<FamilyPartition>& families, const std::vector<int>& tuple,
            unsigned long long size_guard = 10'000'000);

} // namespace zeb
