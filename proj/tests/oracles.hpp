#pragma once

// Independent reference implementations used only by tests.  Deliberately
// naive: no pruning heuristics, no symmetry breaking, no shared code with
// the algorithms under test beyond the graph data structure itself.

#include <cmath>
#include <map>
#include <optional>
#include <vector>

#include "zeb/graph.hpp"

namespace oracle {

// alpha(G) by plain include/exclude recursion on the highest-numbered vertex.
inline int independence(const zeb::ConfusionGraph& g, std::vector<int>& live) {
    if (live.empty()) return 0;
    int v = live.back();
    live.pop_back();
    int without_v = independence(g, live);
    std::vector<int> kept;
    for (int u : live)
        if (!g.adjacent(u, v)) kept.push_back(u);
    int with_v = 1 + independence(g, kept);
    live.push_back(v);
    return std::max(without_v, with_v);
}

inline int independence(const zeb::ConfusionGraph& g) {
    std::vector<int> live;
    for (int v = 0; v < g.letters(); ++v) live.push_back(v);
    return independence(g, live);
}

// Can user behind g tell u from v apart?  Straight from the definition.
inline bool words_distinct(const zeb::ConfusionGraph& g, const zeb::Word& u, const zeb::Word& v) {
    for (std::size_t t = 0; t < u.size(); ++t)
        if (u[t] != v[t] && !g.adjacent(u[t], v[t])) return true;
    return false;
}

struct SchemeSearch {
    const std::vector<zeb::ConfusionGraph>& graphs;
    std::vector<std::vector<int>> digits; // tuple index -> per-user message
    int n = 1;
    long long word_count = 0;
    std::vector<zeb::Word> assigned;

    zeb::Word word_at(long long idx) const {
        int k = graphs.front().letters();
        zeb::Word w(n);
        for (int t = n - 1; t >= 0; --t) {
            w[t] = static_cast<int>(idx % k);
            idx /= k;
        }
        return w;
    }

    bool compatible(const zeb::Word& w) const {
        std::size_t t = assigned.size();
        for (std::size_t s = 0; s < t; ++s)
            for (std::size_t i = 0; i < graphs.size(); ++i)
                if (digits[s][i] != digits[t][i] && !words_distinct(graphs[i], assigned[s], w))
                    return false;
        return true;
    }

    bool dfs() {
        if (assigned.size() == digits.size()) return true;
        for (long long idx = 0; idx < word_count; ++idx) {
            zeb::Word w = word_at(idx);
            if (!compatible(w)) continue;
            assigned.push_back(w);
            if (dfs()) return true;
            assigned.pop_back();
        }
        return false;
    }
};

// Exhaustive feasibility for small instances: every tuple tries every word.
inline std::optional<std::vector<zeb::Word>> scheme_search(
    const std::vector<zeb::ConfusionGraph>& graphs, const std::vector<long long>& counts, int n) {
    SchemeSearch s{graphs, {}, n, 1, {}};
    long long tuples = 1;
    for (long long m : counts) tuples *= m;
    for (long long t = 0; t < tuples; ++t) {
        long long rem = t;
        std::vector<int> d(counts.size());
        for (int i = static_cast<int>(counts.size()) - 1; i >= 0; --i) {
            d[i] = static_cast<int>(rem % counts[i]);
            rem /= counts[i];
        }
        s.digits.push_back(d);
    }
    for (int t = 0; t < n; ++t) s.word_count *= graphs.front().letters();
    if (s.dfs()) return s.assigned;
    return std::nullopt;
}

// Joint observation cell masses of a composition: letters sharing every
// listed user's clique class pool their counts.
inline std::vector<long long> cell_masses(const std::vector<zeb::CliquePartition>& parts,
                                          const std::vector<int>& composition,
                                          const std::vector<int>& users) {
    std::map<std::vector<int>, long long> mass;
    for (std::size_t a = 0; a < composition.size(); ++a) {
        std::vector<int> sig;
        for (int u : users) sig.push_back(parts[u].class_of[a]);
        mass[sig] += composition[a];
    }
    std::vector<long long> out;
    for (const auto& [sig, m] : mass) out.push_back(m);
    return out;
}

// The observation strings over a type class are exactly the words with the
// induced cell histogram, so their number is a multinomial coefficient.
inline unsigned long long observation_count(const std::vector<zeb::CliquePartition>& parts,
                                            const std::vector<int>& composition,
                                            const std::vector<int>& users) {
    long long n = 0;
    for (int c : composition) n += c;
    std::vector<unsigned long long> fact(n + 1, 1);
    for (long long i = 1; i <= n; ++i) fact[i] = fact[i - 1] * static_cast<unsigned long long>(i);
    unsigned long long out = fact[n];
    for (long long m : cell_masses(parts, composition, users)) out /= fact[m];
    return out;
}

// Entropy (bits) of the joint observation at the empirical distribution.
inline double observation_entropy(const std::vector<zeb::CliquePartition>& parts,
                                  const std::vector<int>& composition,
                                  const std::vector<int>& users) {
    long long n = 0;
    for (int c : composition) n += c;
    double h = 0.0;
    for (long long m : cell_masses(parts, composition, users))
        if (m > 0) {
            double p = static_cast<double>(m) / static_cast<double>(n);
            h -= p * std::log2(p);
        }
    return h;
}

} // namespace oracle
