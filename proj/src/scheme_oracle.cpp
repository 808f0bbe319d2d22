#include "zeb/scheme_oracle.hpp"

#include <algorithm>
#include <cmath>
#include <unordered_set>

#include "zeb/entropy_region.hpp"

namespace zeb {
namespace {

void validate_instance(const std::vector<ConfusionGraph>& graphs, const MessageVector& mv) {
    if (graphs.empty()) throw Error("no confusion graphs given");
    const int k = graphs.front().letters();
    for (const auto& g : graphs)
        if (g.letters() != k) throw AlphabetMismatch("graphs on different alphabets");
    if (mv.counts.size() != graphs.size())
        throw DimensionMismatch("message vector length does not match user count");
    if (mv.n < 1) throw Error("block length must be at least 1");
    for (long long m : mv.counts)
        if (m < 1) throw Error("message counts must be at least 1");
}

Word word_from_index(long long index, int k, int n) {
    Word w(n);
    for (int pos = n - 1; pos >= 0; --pos) {
        w[pos] = static_cast<int>(index % k);
        index /= k;
    }
    return w;
}

// Backtracking state shared across the recursion.
struct Search {
    const std::vector<ConfusionGraph>& graphs;
    const MessageVector& mv;
    int k;
    long long tuples;
    long long words;
    unsigned long long max_nodes;
    unsigned long long nodes = 0;
    std::vector<std::vector<int>> digits;   // tuple -> per-user message digits
    std::vector<Word> assigned;
    std::vector<std::vector<int>> automorphisms;

    bool canonical(const Word& w) const {
        Word image(w.size());
        for (const auto& perm : automorphisms) {
            for (std::size_t i = 0; i < w.size(); ++i) image[i] = perm[w[i]];
            if (std::lexicographical_compare(image.begin(), image.end(), w.begin(), w.end()))
                return false;
        }
        return true;
    }

    bool compatible(long long t, const Word& w) const {
        for (long long prev = 0; prev < t; ++prev) {
            for (std::size_t i = 0; i < graphs.size(); ++i) {
                if (digits[prev][i] == digits[t][i]) continue;
                if (!distinguishable(graphs[i], assigned[prev], w)) return false;
            }
        }
        return true;
    }

    bool dfs(long long t) {
        if (t == tuples) return true;
        for (long long wi = 0; wi < words; ++wi) {
            if (++nodes > max_nodes)
                throw BudgetExceeded("scheme search exceeded node budget", nodes);
            Word w = word_from_index(wi, k, mv.n);
            if (t == 0 && !canonical(w)) continue;
            if (!compatible(t, w)) continue;
            assigned.push_back(std::move(w));
            if (dfs(t + 1)) return true;
            assigned.pop_back();
        }
        return false;
    }
};

} // namespace

long long tuple_count(const MessageVector& mv) {
    long long t = 1;
    for (long long m : mv.counts) {
        if (m < 1) throw Error("message counts must be at least 1");
        if (t > (1ll << 62) / m) throw SizeLimitExceeded("tuple count overflow");
        t *= m;
    }
    return t;
}

std::vector<int> tuple_digits(const MessageVector& mv, long long index) {
    if (index < 0 || index >= tuple_count(mv)) throw Error("tuple index out of range");
    std::vector<int> d(mv.counts.size());
    for (int i = static_cast<int>(mv.counts.size()) - 1; i >= 0; --i) {
        d[i] = static_cast<int>(index % mv.counts[i]);
        index /= mv.counts[i];
    }
    return d;
}

long long tuple_index(const MessageVector& mv, const std::vector<int>& digits) {
    if (digits.size() != mv.counts.size())
        throw DimensionMismatch("tuple digit count does not match user count");
    long long idx = 0;
    for (std::size_t i = 0; i < digits.size(); ++i) {
        if (digits[i] < 0 || digits[i] >= mv.counts[i]) throw Error("tuple digit out of range");
        idx = idx * mv.counts[i] + digits[i];
    }
    return idx;
}

bool valid_scheme(const std::vector<ConfusionGraph>& graphs, const EncodingScheme& scheme) {
    validate_instance(graphs, scheme.shape);
    const long long tuples = tuple_count(scheme.shape);
    if (static_cast<long long>(scheme.codewords.size()) != tuples) return false;
    const int k = graphs.front().letters();
    for (const auto& w : scheme.codewords) {
        if (static_cast<int>(w.size()) != scheme.shape.n) return false;
        for (int letter : w)
            if (letter < 0 || letter >= k) return false;
    }
    std::vector<std::vector<int>> digits(tuples);
    for (long long t = 0; t < tuples; ++t) digits[t] = tuple_digits(scheme.shape, t);
    for (long long a = 0; a < tuples; ++a)
        for (long long b = a + 1; b < tuples; ++b)
            for (std::size_t i = 0; i < graphs.size(); ++i) {
                if (digits[a][i] == digits[b][i]) continue;
                if (!distinguishable(graphs[i], scheme.codewords[a], scheme.codewords[b]))
                    return false;
            }
    return true;
}

SchemeSearchResult is_feasible(const std::vector<ConfusionGraph>& graphs,
                               const MessageVector& mv, const SchemeBudget& budget) {
    validate_instance(graphs, mv);
    const long long tuples = tuple_count(mv);
    if (tuples > budget.max_tuples)
        throw BudgetExceeded("message tuple count " + std::to_string(tuples) +
                             " exceeds budget " + std::to_string(budget.max_tuples));
    const int k = graphs.front().letters();
    long long words = 1;
    for (int i = 0; i < mv.n; ++i) {
        if (words > budget.max_words / k)
            throw BudgetExceeded("candidate codeword count exceeds budget");
        words *= k;
    }
    if (words > budget.max_words)
        throw BudgetExceeded("candidate codeword count exceeds budget");

    Search search{graphs, mv, k, tuples, words,
                  budget.max_nodes, 0,  {},     {},    simultaneous_automorphisms(graphs)};
    search.digits.resize(tuples);
    for (long long t = 0; t < tuples; ++t) search.digits[t] = tuple_digits(mv, t);
    search.assigned.reserve(tuples);

    SchemeSearchResult result;
    if (search.dfs(0)) result.scheme = EncodingScheme{mv, std::move(search.assigned)};
    result.nodes = search.nodes;
    return result;
}

std::vector<MessageVector> frontier(const std::vector<ConfusionGraph>& graphs, int n,
                                    const SchemeBudget& budget) {
    if (graphs.size() != 2) throw DimensionMismatch("frontier is for exactly two users");
    auto feasible = [&](long long m1, long long m2) {
        return is_feasible(graphs, MessageVector{{m1, m2}, n}, budget).scheme.has_value();
    };

    std::vector<std::pair<long long, long long>> points;
    for (long long m1 = 1;; ++m1) {
        if (m1 > budget.max_tuples)
            throw BudgetExceeded("frontier: user-1 count exceeded the tuple budget");
        if (!feasible(m1, 1)) break;
        long long cap = budget.max_tuples / m1;
        long long lo = 1, hi = cap;
        if (feasible(m1, cap)) {
            if (m1 * (cap + 1) > budget.max_tuples)
                throw BudgetExceeded("frontier: maximal user-2 count exceeds the tuple budget");
            lo = cap;
        } else {
            while (hi - lo > 1) {
                long long mid = lo + (hi - lo) / 2;
                (feasible(m1, mid) ? lo : hi) = mid;
            }
        }
        points.emplace_back(m1, lo);
    }

    std::vector<MessageVector> out;
    for (std::size_t i = 0; i < points.size(); ++i) {
        bool dominated = i + 1 < points.size() && points[i + 1].second >= points[i].second;
        if (!dominated) out.push_back(MessageVector{{points[i].first, points[i].second}, n});
    }
    return out;
}

EncodingScheme concatenate(const EncodingScheme& a, const EncodingScheme& b) {
    if (a.shape.counts.size() != b.shape.counts.size())
        throw DimensionMismatch("concatenate: schemes serve different user counts");
    MessageVector shape;
    shape.n = a.shape.n + b.shape.n;
    for (std::size_t i = 0; i < a.shape.counts.size(); ++i)
        shape.counts.push_back(a.shape.counts[i] * b.shape.counts[i]);

    const long long tuples = tuple_count(shape);
    EncodingScheme out{shape, std::vector<Word>(tuples)};
    for (long long t = 0; t < tuples; ++t) {
        auto digits = tuple_digits(shape, t);
        std::vector<int> da(digits.size()), db(digits.size());
        for (std::size_t i = 0; i < digits.size(); ++i) {
            da[i] = static_cast<int>(digits[i] / b.shape.counts[i]);
            db[i] = static_cast<int>(digits[i] % b.shape.counts[i]);
        }
        Word w = a.codewords[tuple_index(a.shape, da)];
        const Word& tail = b.codewords[tuple_index(b.shape, db)];
        w.insert(w.end(), tail.begin(), tail.end());
        out.codewords[t] = std::move(w);
    }
    return out;
}

std::optional<unsigned long long> multinomial_capped(const std::vector<int>& composition,
                                                     unsigned long long cap) {
    // Incremental binomial products; bails out as soon as the running value
    // would pass the cap.
    unsigned long long total = 1;
    long long placed = 0;
    for (int c : composition) {
        if (c < 0) throw Error("composition entries must be nonnegative");
        for (int i = 1; i <= c; ++i) {
            ++placed;
            // total = total * placed / i, exact because prefix products of
            // binomials are integers
            unsigned long long scaled = total * static_cast<unsigned long long>(placed);
            if (placed != 0 && scaled / static_cast<unsigned long long>(placed) != total)
                return std::nullopt; // overflow
            total = scaled / static_cast<unsigned long long>(i);
            if (total > cap) return std::nullopt;
        }
    }
    return total;
}

TypeClass::TypeClass(std::vector<int> comp, unsigned long long size_guard)
    : composition(std::move(comp)) {
    long long n = 0;
    for (int c : composition) n += std::max(c, 0);
    if (composition.empty() || n == 0) throw Error("composition must place at least one letter");
    auto s = multinomial_capped(composition, size_guard);
    if (!s)
        throw SizeLimitExceeded("type class larger than guard " + std::to_string(size_guard));
    size = *s;
}

long long type_class_count(const std::vector<CliquePartition>& parts,
                           const std::vector<int>& composition, const std::vector<int>& users,
                           unsigned long long size_guard) {
    if (parts.empty()) throw Error("no clique partitions given");
    if (composition.size() != static_cast<std::size_t>(parts.front().letters()))
        throw DimensionMismatch("composition length does not match alphabet");
    TypeClass tc(composition, size_guard);
    auto jp = joint_partition(parts, users);

    std::unordered_set<std::string> seen;
    for_each_type_class_word(composition, [&](const Word& w) {
        std::string obs(w.size(), '\0');
        for (std::size_t i = 0; i < w.size(); ++i)
            obs[i] = static_cast<char>(jp.cell_of[w[i]]);
        seen.insert(obs);
    });
    return static_cast<long long>(seen.size());
}

bool lemma9_check(const std::vector<CliquePartition>& parts, const std::vector<int>& composition,
                  const std::vector<int>& users, unsigned long long size_guard) {
    if (parts.empty()) throw Error("no clique partitions given");
    long long n = 0;
    for (int c : composition) n += c;
    if (n < 1) throw Error("composition must sum to a positive block length");
    const int k = parts.front().letters();

    std::vector<double> probs(composition.size());
    for (std::size_t i = 0; i < composition.size(); ++i)
        probs[i] = static_cast<double>(composition[i]) / static_cast<double>(n);
    double h = subset_entropy(LetterDistribution(std::move(probs)), joint_partition(parts, users));

    double log_count =
        std::log2(static_cast<double>(type_class_count(parts, composition, users, size_guard)));
    double upper = h * static_cast<double>(n);
    double lower = upper - k * std::log2(static_cast<double>(n));
    return log_count <= upper + 1e-9 && log_count >= lower - 1e-9;
}

} // namespace zeb
