#pragma once

#include <cstdint>
#include <set>
#include <vector>

#include "zeb/entropy_region.hpp"
#include "zeb/graph.hpp"

namespace zeb {

// Binary entropy in bits; H(0) = H(1) = 0.
double binary_entropy(double x);

// Entropy of (p_1..p_m, q) where q = 1 - sum(p) is the implicit remainder.
double entropy_of(const std::vector<double>& probs);

// Inverse of binary entropy on the branch x in [1/2, 2/3], so y must lie in
// [H(2/3), 1].  Bisection to 1e-12.
double entropy_inverse_upper(double y);

// a^(log_b x) with the convention a^(log_b 0) = 0.
double pow_log(int a, int b, double x);

// Mixing-parameter boundary points for clique-minus-clique setups with
// alpha in [0,1]: user 1 behind the complete-minus-clique graph, user 2
// behind an arbitrary graph (thm7) or one inside the complementary clique
// family (thm8, which additionally needs d <= (k+1)/2).
RateVector thm7_boundary(double alpha, int d, int k);
RateVector thm8_boundary(double alpha, int d, int k);

// Exact two-user regions on three letters.  Letters are named 0-based here
// to match the conventional presentation: user 1 confuses {s0,s1}; user 2
// confuses {s0,s2} (prop16) or nothing (prop17).  prop15 fixes user 1
// behind both edges at s0 ({s0,s1} and {s0,s2}) and takes any user-2 graph.
double prop16_max_r2(double r1); // r1 in [0,1]
double prop17_max_r2(double r1); // r1 in [0,1]
double prop15_max_r2(const ConfusionGraph& g2, double r1);

bool prop16_feasible(double r1, double r2);
bool prop17_feasible(double r1, double r2);
bool prop15_feasible(const ConfusionGraph& g2, double r1, double r2);

enum class ThreeLetterCase { prop15, prop16, prop17 };
bool region_2user_3letter(ThreeLetterCase which, const RateVector& rates,
                          const ConfusionGraph* g2 = nullptr);

// Weighted power-sum inequality behind the collapse bounds: for
// 2 <= b <= a and x_1 >= ... >= x_b >= 0,
//   (a-b+1)*a^(log_b x_b) + sum_{i<b} a^(log_b x_i) <= a^(log_b sum x_i).
bool lemma10_check(int a, int b, const std::vector<double>& xs);

// Set of equal-length words over k letters closed under replacing any
// occurrence of a letter above d (0-based: index >= d) by any letter.
// Closure is verified at construction, never assumed.
struct ClosedWordSet {
    int k = 0;
    int d = 0; // first d letters are the protected block
    std::set<Word> words;

    ClosedWordSet(int k, int d, std::set<Word> words);
};

// Saturates the seed words under the replacement rule.
ClosedWordSet close_set(const std::vector<Word>& seed, int d, int k,
                        unsigned long long size_guard = 10'000'000);

// Words using only the first d letters.
std::set<Word> restrict_prime(const ClosedWordSet& cs);

// Image under collapsing the first d letters to letter d-1 (0-based) and
// keeping the rest.
std::set<Word> collapse_doubleprime(const ClosedWordSet& cs);

// log_k |G| <= log_d |G'|; vacuous when the set is empty.
bool lemma11_check(const ClosedWordSet& cs);

// log_{k-d+1} |G''| <= log_d |G'|.  Guaranteed only for d <= (k+1)/2;
// outside that range this evaluates and reports, nothing more.
bool lemma12_check(const ClosedWordSet& cs);
bool lemma12_applicable(int k, int d);

// Randomized inequality suites backing `verify-lemmas`.
struct SuiteReport {
    long long trials = 0;
    long long violations = 0;
};

SuiteReport lemma10_suite(long long trials, std::uint64_t seed);
SuiteReport lemma11_suite(long long trials, std::uint64_t seed);
SuiteReport lemma12_suite(long long trials, std::uint64_t seed); // d <= (k+1)/2 only

// The collapse bound genuinely fails beyond d <= (k+1)/2: the closure of
// {(s1,sk),(sk,s1)} witnesses it.  Returns the measured set sizes and which
// inequalities held.
struct CollapseCounterexample {
    int k = 0;
    int d = 0;
    long long closed_size = 0;
    long long prime_size = 0;
    long long doubleprime_size = 0;
    bool lemma11_holds = false;
    bool lemma12_holds = false;
};

CollapseCounterexample lemma12_counterexample(int k = 4, int d = 3);

} // namespace zeb
