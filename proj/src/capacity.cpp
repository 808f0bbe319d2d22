#include "zeb/capacity.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace zeb {
namespace {

// Maximum clique search in the style of Tomita: candidates are greedily
// coloured at every node and branched in reverse colour order, so the colour
// number doubles as an upper bound on how much the current clique can grow.
class MaxCliqueSolver {
public:
    MaxCliqueSolver(const ConfusionGraph& g, unsigned long long node_budget)
        : n_(g.letters()), words_((n_ + 63) / 64), budget_(node_budget),
          adj_(static_cast<std::size_t>(n_) * words_, 0) {
        for (int a = 0; a < n_; ++a)
            for (int b = 0; b < n_; ++b)
                if (a != b && g.adjacent(a, b))
                    adj_[static_cast<std::size_t>(a) * words_ + b / 64] |= std::uint64_t{1}
                                                                          << (b % 64);
    }

    int solve() {
        std::vector<int> order(n_);
        for (int i = 0; i < n_; ++i) order[i] = i;
        std::sort(order.begin(), order.end(), [&](int a, int b) {
            int da = degree(a), db = degree(b);
            if (da != db) return da > db;
            return a < b;
        });
        // Greedy clique along the ordering seeds the incumbent.
        std::vector<int> greedy;
        for (int v : order) {
            bool ok = true;
            for (int u : greedy) ok = ok && edge(u, v);
            if (ok) greedy.push_back(v);
        }
        best_ = static_cast<int>(greedy.size());
        expand(order, 0);
        return best_;
    }

    unsigned long long nodes() const { return nodes_; }

private:
    bool edge(int a, int b) const {
        return (adj_[static_cast<std::size_t>(a) * words_ + b / 64] >> (b % 64)) & 1u;
    }

    int degree(int a) const {
        int d = 0;
        for (int w = 0; w < words_; ++w)
            d += __builtin_popcountll(adj_[static_cast<std::size_t>(a) * words_ + w]);
        return d;
    }

    // Assigns greedy colours to P and rewrites it ordered by colour
    // ascending; colours[i] is the colour of P[i].
    void colour(std::vector<int>& P, std::vector<int>& colours) {
        std::vector<std::vector<int>> classes;
        for (int v : P) {
            std::size_t c = 0;
            for (; c < classes.size(); ++c) {
                bool clash = false;
                for (int u : classes[c])
                    if (edge(u, v)) {
                        clash = true;
                        break;
                    }
                if (!clash) break;
            }
            if (c == classes.size()) classes.emplace_back();
            classes[c].push_back(v);
        }
        P.clear();
        colours.clear();
        for (std::size_t c = 0; c < classes.size(); ++c)
            for (int v : classes[c]) {
                P.push_back(v);
                colours.push_back(static_cast<int>(c) + 1);
            }
    }

    void expand(std::vector<int> P, int depth) {
        if (++nodes_ > budget_)
            throw SizeLimitExceeded("independence search exceeded " + std::to_string(budget_) +
                                    " nodes");
        std::vector<int> colours;
        colour(P, colours);
        while (!P.empty()) {
            int v = P.back();
            int bound = colours.back();
            if (depth + bound <= best_) return; // nothing left can beat the incumbent
            P.pop_back();
            colours.pop_back();
            std::vector<int> next;
            for (int u : P)
                if (edge(u, v)) next.push_back(u);
            if (next.empty()) {
                best_ = std::max(best_, depth + 1);
            } else {
                expand(std::move(next), depth + 1);
            }
        }
    }

    int n_;
    int words_;
    unsigned long long budget_;
    unsigned long long nodes_ = 0;
    int best_ = 0;
    std::vector<std::uint64_t> adj_;
};

int independence_unchecked(const ConfusionGraph& g, unsigned long long node_budget) {
    return MaxCliqueSolver(complement(g), node_budget).solve();
}

} // namespace

int independence_number(const ConfusionGraph& g, const CapacityLimits& limits) {
    if (g.letters() > limits.max_letters)
        throw SizeLimitExceeded("independence_number: " + std::to_string(g.letters()) +
                                " letters exceeds limit " + std::to_string(limits.max_letters));
    return independence_unchecked(g, limits.max_nodes);
}

std::optional<CliqueMinusClique> match_clique_minus_clique(const ConfusionGraph& g) {
    auto cp = try_clique_partition(complement(g));
    if (!cp) return std::nullopt;
    int big = 0, singletons = 0;
    for (const auto& cls : cp->classes()) {
        if (cls.size() >= 2) {
            if (big) return std::nullopt; // at most one non-singleton clique
            big = static_cast<int>(cls.size());
        } else {
            ++singletons;
        }
    }
    if (!big) return std::nullopt;
    return CliqueMinusClique{g.letters(), big};
}

CapacityBound capacity_lower_bound(const ConfusionGraph& g, int power,
                                   const CapacityLimits& limits) {
    if (power < 1) throw Error("capacity bound needs power >= 1");
    if (g.letters() > limits.max_letters)
        throw SizeLimitExceeded("capacity_lower_bound: base alphabet exceeds limit");
    double vertices = std::pow(static_cast<double>(g.letters()), power);
    if (vertices > static_cast<double>(limits.max_power_vertices))
        throw SizeLimitExceeded("capacity_lower_bound: product graph would have " +
                                std::to_string(vertices) + " vertices");

    CapacityBound out{g, power, 0, 0.0, false, 0.0};
    // Powers may exceed the base-alphabet cap; the node budget still applies.
    out.alpha_n = independence_unchecked(power == 1 ? g : strong_power(g, power),
                                         limits.max_nodes);
    out.lower_bound = std::pow(static_cast<double>(out.alpha_n), 1.0 / power);
    out.capacity = out.lower_bound;

    if (auto cp = try_clique_partition(g)) {
        out.exact = true;
        out.capacity = cp->ell;
    } else if (g.letters() <= 3) {
        // Every graph on at most three letters has capacity equal to its
        // independence number.
        out.exact = true;
        out.capacity = independence_unchecked(g, limits.max_nodes);
    } else if (auto cmc = match_clique_minus_clique(g)) {
        out.exact = true;
        out.capacity = cmc->d;
    }
    return out;
}

} // namespace zeb
