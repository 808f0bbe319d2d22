#pragma once

#include <optional>

#include "zeb/graph.hpp"

namespace zeb {

struct CapacityLimits {
    int max_letters = 64;                        // base alphabet cap
    int max_power_vertices = 4096;               // cap on built product graphs
    unsigned long long max_nodes = 1ull << 26;   // branch-and-bound node budget
};

// Size of a largest independent set, by branch and bound over the complement
// with a greedy colouring bound.  Exact.  Throws SizeLimitExceeded when the
// alphabet or the node budget is out of range.
int independence_number(const ConfusionGraph& g, const CapacityLimits& limits = {});

// Parameters (k, d) of a complete graph minus a clique on the first d letters.
struct CliqueMinusClique {
    int k = 0;
    int d = 0;
};

// Recognizes graphs isomorphic to the clique-minus-clique family: the
// complement must be one clique of size >= 2 plus isolated letters.
std::optional<CliqueMinusClique> match_clique_minus_clique(const ConfusionGraph& g);

struct CapacityBound {
    ConfusionGraph graph;       // analyzed base graph
    int power = 1;              // product power used for the bound
    long long alpha_n = 0;      // independence number of the power
    double lower_bound = 0.0;   // alpha_n^(1/power)
    bool exact = false;         // capacity known exactly for this graph
    double capacity = 0.0;      // the exact value when exact, else lower_bound
};

// Lower-bounds the zero-error capacity via alpha(g^n)^(1/n), and detects the
// families whose capacity is known exactly: disjoint unions of cliques
// (number of cliques), any graph on at most three letters (independence
// number), and clique-minus-clique graphs (d).
CapacityBound capacity_lower_bound(const ConfusionGraph& g, int power = 1,
                                   const CapacityLimits& limits = {});

} // namespace zeb
