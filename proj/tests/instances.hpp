#pragma once

// Shared test fixtures: the recurring two-user three-letter setups and the
// symmetric k-user instance.

#include <vector>

#include "zeb/graph.hpp"

namespace fixtures {

// User 1 confuses {s0,s1}; user 2 confuses {s0,s2}.
inline std::vector<zeb::ConfusionGraph> prop16_graphs() {
    return {zeb::ConfusionGraph(3, {{0, 1}}), zeb::ConfusionGraph(3, {{0, 2}})};
}

// User 1 confuses {s0,s1}; user 2 distinguishes everything.
inline std::vector<zeb::ConfusionGraph> prop17_graphs() {
    return {zeb::ConfusionGraph(3, {{0, 1}}), zeb::empty_graph(3)};
}

// k users on k letters; user i singles out letter i and confuses the rest.
inline std::vector<zeb::ConfusionGraph> symmetric_graphs(int k) {
    std::vector<zeb::ConfusionGraph> out;
    for (int i = 0; i < k; ++i) {
        zeb::ConfusionGraph g(k);
        for (int a = 0; a < k; ++a)
            for (int b = a + 1; b < k; ++b)
                if (a != i && b != i) g.add_edge(a, b);
        out.push_back(g);
    }
    return out;
}

inline std::vector<zeb::CliquePartition> partitions_of(const std::vector<zeb::ConfusionGraph>& gs) {
    std::vector<zeb::CliquePartition> out;
    for (const auto& g : gs) out.push_back(zeb::clique_partition(g));
    return out;
}

} // namespace fixtures
