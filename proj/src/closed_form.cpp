#include "zeb/closed_form.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <random>
#include <string>

#include "zeb/capacity.hpp"

namespace zeb {
namespace {

constexpr double kTol = 1e-9;
const double kLog2Of3 = std::log2(3.0);

double plog2p(double m) { return m > 0.0 ? -m * std::log2(m) : 0.0; }

double clamp01(double x, const char* what) {
    if (x < -kTol || x > 1.0 + kTol)
        throw Error(std::string(what) + " must lie in [0,1], got " + std::to_string(x));
    return std::min(1.0, std::max(0.0, x));
}

void check_cmc_params(int d, int k) {
    if (k < 2 || d < 2 || d > k) throw Error("need 2 <= d <= k");
}

void check_rate_pair(const RateVector& rates) {
    if (rates.size() != 2) throw DimensionMismatch("expected a two-user rate vector");
}

void validate_closed_args(int k, int d) {
    if (k < 1) throw Error("alphabet must be nonempty");
    if (d < 1 || d > k) throw Error("need 1 <= d <= k");
}

Word collapse_word(const Word& w, int d) {
    Word out = w;
    for (int& a : out) a = std::max(a, d - 1);
    return out;
}

} // namespace

double binary_entropy(double x) {
    x = clamp01(x, "binary entropy argument");
    return plog2p(x) + plog2p(1.0 - x);
}

double entropy_of(const std::vector<double>& probs) {
    double total = 0.0, h = 0.0;
    for (double p : probs) {
        if (p < -kTol || p > 1.0 + kTol) throw Error("probability outside [0,1]");
        total += p;
        h += plog2p(std::max(0.0, p));
    }
    if (total > 1.0 + 1e-6) throw Error("probabilities sum beyond 1");
    return h + plog2p(std::max(0.0, 1.0 - total));
}

double entropy_inverse_upper(double y) {
    const double y_min = binary_entropy(2.0 / 3.0);
    if (y < y_min - kTol || y > 1.0 + kTol)
        throw Error("inverse entropy argument outside [H(2/3), 1]");
    y = std::min(1.0, std::max(y_min, y));
    double lo = 0.5, hi = 2.0 / 3.0; // H decreases on this branch
    while (hi - lo > 1e-12) {
        double mid = 0.5 * (lo + hi);
        (binary_entropy(mid) >= y ? lo : hi) = mid;
    }
    return 0.5 * (lo + hi);
}

double pow_log(int a, int b, double x) {
    if (a < 1 || b < 2) throw Error("pow_log needs a >= 1 and b >= 2");
    if (x < 0.0) throw Error("pow_log needs x >= 0");
    if (x == 0.0) return 0.0;
    return std::pow(x, std::log(static_cast<double>(a)) / std::log(static_cast<double>(b)));
}

RateVector thm7_boundary(double alpha, int d, int k) {
    check_cmc_params(d, k);
    alpha = clamp01(alpha, "alpha");
    return {alpha * std::log2(static_cast<double>(d)),
            (1.0 - alpha) * std::log2(static_cast<double>(k))};
}

RateVector thm8_boundary(double alpha, int d, int k) {
    check_cmc_params(d, k);
    if (2 * d > k + 1)
        throw Error("boundary only established for d <= (k+1)/2");
    alpha = clamp01(alpha, "alpha");
    return {alpha * std::log2(static_cast<double>(d)),
            (1.0 - alpha) * std::log2(static_cast<double>(k - d + 1))};
}

double prop16_max_r2(double r1) {
    if (r1 < -kTol || r1 > 1.0 + kTol) return std::numeric_limits<double>::quiet_NaN();
    r1 = std::min(1.0, std::max(0.0, r1));
    const double junction = kLog2Of3 - 2.0 / 3.0; // = H(2/3)
    if (r1 <= 0.5) return 1.0;
    if (r1 <= 2.0 / 3.0) return binary_entropy(r1);
    if (r1 <= junction) return kLog2Of3 - r1;
    return entropy_inverse_upper(r1);
}

double prop17_max_r2(double r1) {
    if (r1 < -kTol || r1 > 1.0 + kTol) return std::numeric_limits<double>::quiet_NaN();
    r1 = std::min(1.0, std::max(0.0, r1));
    const double junction = kLog2Of3 - 2.0 / 3.0;
    if (r1 <= junction) return kLog2Of3 - r1;
    return entropy_inverse_upper(r1);
}

double prop15_max_r2(const ConfusionGraph& g2, double r1) {
    if (g2.letters() != 3) throw Error("user-2 graph must have three letters");
    if (r1 < -kTol || r1 > 1.0 + kTol) return std::numeric_limits<double>::quiet_NaN();
    r1 = std::min(1.0, std::max(0.0, r1));

    // Classify user 2 by how its edges relate to user 1's pair at s0.  On
    // three letters this is exhaustive; anything else would be unclassifiable
    // and rejected.
    const bool complete = g2.adjacent(0, 1) && g2.adjacent(0, 2) && g2.adjacent(1, 2);
    const bool shares_edge = g2.adjacent(0, 1) || g2.adjacent(0, 2);
    const bool empty = g2.edge_count() == 0;
    const bool complement_of_g1 = !g2.adjacent(0, 1) && !g2.adjacent(0, 2) && g2.adjacent(1, 2);
    if (!(complete || shares_edge || empty || complement_of_g1))
        throw Error("user-2 graph does not match any analyzed case");

    const int c2 = independence_number(g2);
    if (c2 == 1) return 0.0;
    return (1.0 - r1) * std::log2(static_cast<double>(c2));
}

bool prop16_feasible(double r1, double r2) {
    if (r1 < -kTol || r2 < -kTol || r1 > 1.0 + kTol) return false;
    return r2 <= prop16_max_r2(r1) + kTol;
}

bool prop17_feasible(double r1, double r2) {
    if (r1 < -kTol || r2 < -kTol || r1 > 1.0 + kTol) return false;
    return r2 <= prop17_max_r2(r1) + kTol;
}

bool prop15_feasible(const ConfusionGraph& g2, double r1, double r2) {
    if (r1 < -kTol || r2 < -kTol || r1 > 1.0 + kTol) return false;
    return r2 <= prop15_max_r2(g2, r1) + kTol;
}

bool region_2user_3letter(ThreeLetterCase which, const RateVector& rates,
                          const ConfusionGraph* g2) {
    check_rate_pair(rates);
    switch (which) {
        case ThreeLetterCase::prop16: return prop16_feasible(rates[0], rates[1]);
        case ThreeLetterCase::prop17: return prop17_feasible(rates[0], rates[1]);
        case ThreeLetterCase::prop15:
            if (!g2) throw Error("this case needs the user-2 graph");
            return prop15_feasible(*g2, rates[0], rates[1]);
    }
    throw Error("unknown case");
}

bool lemma10_check(int a, int b, const std::vector<double>& xs) {
    if (b < 2 || b > a) throw Error("need 2 <= b <= a");
    if (xs.size() != static_cast<std::size_t>(b))
        throw DimensionMismatch("need exactly b values");
    for (std::size_t i = 0; i < xs.size(); ++i) {
        if (xs[i] < 0.0) throw Error("values must be nonnegative");
        if (i + 1 < xs.size() && xs[i] < xs[i + 1])
            throw Error("values must be sorted nonincreasing");
    }
    double sum = 0.0;
    for (double x : xs) sum += x;
    double lhs = (a - b + 1) * pow_log(a, b, xs.back());
    for (std::size_t i = 0; i + 1 < xs.size(); ++i) lhs += pow_log(a, b, xs[i]);
    return lhs <= pow_log(a, b, sum) + kTol;
}

ClosedWordSet::ClosedWordSet(int k_in, int d_in, std::set<Word> words_in)
    : k(k_in), d(d_in), words(std::move(words_in)) {
    validate_closed_args(k, d);
    std::size_t len = words.empty() ? 0 : words.begin()->size();
    for (const auto& w : words) {
        if (w.size() != len) throw DimensionMismatch("words of unequal length");
        for (int a : w)
            if (a < 0 || a >= k) throw AlphabetMismatch("word letter outside alphabet");
    }
    // Verify closure: replacing any letter of the unprotected block (index
    // >= d is 1-based letter > d) by anything must stay inside.
    for (const auto& w : words)
        for (std::size_t pos = 0; pos < w.size(); ++pos) {
            if (w[pos] < d) continue;
            Word probe = w;
            for (int j = 0; j < k; ++j) {
                probe[pos] = j;
                if (!words.count(probe)) throw Error("word set is not closed under replacement");
            }
        }
}

ClosedWordSet close_set(const std::vector<Word>& seed, int d, int k,
                        unsigned long long size_guard) {
    validate_closed_args(k, d);
    std::set<Word> out;
    std::vector<Word> queue;
    for (const auto& w : seed)
        if (out.insert(w).second) queue.push_back(w);
    while (!queue.empty()) {
        Word w = std::move(queue.back());
        queue.pop_back();
        for (std::size_t pos = 0; pos < w.size(); ++pos) {
            if (w[pos] < d) continue;
            Word probe = w;
            for (int j = 0; j < k; ++j) {
                probe[pos] = j;
                if (out.insert(probe).second) {
                    if (out.size() > size_guard)
                        throw SizeLimitExceeded("closure exceeded the size guard");
                    queue.push_back(probe);
                }
            }
        }
    }
    return ClosedWordSet(k, d, std::move(out));
}

std::set<Word> restrict_prime(const ClosedWordSet& cs) {
    std::set<Word> out;
    for (const auto& w : cs.words)
        if (std::all_of(w.begin(), w.end(), [&](int a) { return a < cs.d; })) out.insert(w);
    return out;
}

std::set<Word> collapse_doubleprime(const ClosedWordSet& cs) {
    std::set<Word> out;
    for (const auto& w : cs.words) out.insert(collapse_word(w, cs.d));
    return out;
}

bool lemma11_check(const ClosedWordSet& cs) {
    if (cs.d < 2) throw Error("inequality needs d >= 2");
    const auto g = static_cast<double>(cs.words.size());
    if (cs.words.empty()) return true;
    const auto gp = static_cast<double>(restrict_prime(cs).size());
    if (gp == 0.0) return false; // cannot happen for a verified closed set
    return std::log(g) / std::log(static_cast<double>(cs.k)) <=
           std::log(gp) / std::log(static_cast<double>(cs.d)) + kTol;
}

bool lemma12_check(const ClosedWordSet& cs) {
    if (cs.d < 2) throw Error("inequality needs d >= 2");
    if (cs.k - cs.d + 1 < 2) throw Error("collapse log base needs d <= k-1");
    const auto gp = static_cast<double>(restrict_prime(cs).size());
    const auto gpp = static_cast<double>(collapse_doubleprime(cs).size());
    if (gp == 0.0 && gpp == 0.0) return true;
    if (gp == 0.0 || gpp == 0.0) return false; // cannot happen for closed sets
    return std::log(gpp) / std::log(static_cast<double>(cs.k - cs.d + 1)) <=
           std::log(gp) / std::log(static_cast<double>(cs.d)) + kTol;
}

bool lemma12_applicable(int k, int d) { return 2 * d <= k + 1; }

SuiteReport lemma10_suite(long long trials, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<int> pick_a(2, 10);
    std::uniform_real_distribution<double> pick_x(0.0, 4.0);
    SuiteReport report{trials, 0};
    for (long long t = 0; t < trials; ++t) {
        int a = pick_a(rng);
        int b = std::uniform_int_distribution<int>(2, a)(rng);
        std::vector<double> xs(b);
        for (double& x : xs) x = pick_x(rng);
        if (t % 7 == 0) std::fill(xs.begin(), xs.end(), xs.front()); // exact ties
        if (t % 10 == 0) xs[b - 1] = 0.0;                            // zero smallest value
        std::sort(xs.rbegin(), xs.rend());
        if (!lemma10_check(a, b, xs)) ++report.violations;
    }
    return report;
}

namespace {

ClosedWordSet random_closed_set(std::mt19937_64& rng, int k, int d) {
    int n = std::uniform_int_distribution<int>(1, 4)(rng);
    int seeds = std::uniform_int_distribution<int>(1, 4)(rng);
    std::vector<Word> seed_words(seeds, Word(n));
    for (auto& w : seed_words)
        for (int& a : w) a = std::uniform_int_distribution<int>(0, k - 1)(rng);
    return close_set(seed_words, d, k);
}

} // namespace

SuiteReport lemma11_suite(long long trials, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    SuiteReport report{trials, 0};
    for (long long t = 0; t < trials; ++t) {
        int k = std::uniform_int_distribution<int>(2, 5)(rng);
        int d = std::uniform_int_distribution<int>(2, k)(rng);
        if (!lemma11_check(random_closed_set(rng, k, d))) ++report.violations;
    }
    return report;
}

SuiteReport lemma12_suite(long long trials, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    SuiteReport report{trials, 0};
    for (long long t = 0; t < trials; ++t) {
        // d <= (k+1)/2 is where the inequality is guaranteed; the collapse
        // base also needs d <= k-1, leaving k >= 3.
        int k = std::uniform_int_distribution<int>(3, 5)(rng);
        int d_max = std::min((k + 1) / 2, k - 1);
        int d = std::uniform_int_distribution<int>(2, d_max)(rng);
        if (!lemma12_check(random_closed_set(rng, k, d))) ++report.violations;
    }
    return report;
}

CollapseCounterexample lemma12_counterexample(int k, int d) {
    if (d < 2 || d > k - 1) throw Error("need 2 <= d <= k-1");
    ClosedWordSet cs = close_set({{0, k - 1}, {k - 1, 0}}, d, k);
    CollapseCounterexample out;
    out.k = k;
    out.d = d;
    out.closed_size = static_cast<long long>(cs.words.size());
    out.prime_size = static_cast<long long>(restrict_prime(cs).size());
    out.doubleprime_size = static_cast<long long>(collapse_doubleprime(cs).size());
    out.lemma11_holds = lemma11_check(cs);
    out.lemma12_holds = lemma12_check(cs);
    return out;
}

} // namespace zeb
