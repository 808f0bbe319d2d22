#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "zeb/errors.hpp"

namespace zeb {

// A word is a string over the letter alphabet.  Letters are 0-based indices
// in memory; file formats and reports use 1-based names by default.
using Word = std::vector<int>;

// Undirected confusion graph on k letters.  An edge {a,b} means the receiver
// cannot tell a and b apart; absence of an edge means it can.  No self loops.
// Safe to share between threads once built.
class ConfusionGraph {
public:
    explicit ConfusionGraph(int letters);
    ConfusionGraph(int letters, const std::vector<std::pair<int, int>>& edges);

    int letters() const { return k_; }
    bool adjacent(int a, int b) const {
        check_letter(a);
        check_letter(b);
        if (a == b) return false;
        return (bits_[static_cast<std::size_t>(a) * words_ + b / 64] >> (b % 64)) & 1u;
    }
    void add_edge(int a, int b);

    // Edges as (a,b) pairs with a < b, ordered lexicographically.
    std::vector<std::pair<int, int>> edges() const;
    std::size_t edge_count() const;

    bool operator==(const ConfusionGraph& other) const = default;

private:
    void check_letter(int a) const;

    int k_;
    int words_;
    std::vector<std::uint64_t> bits_; // k rows of ceil(k/64) words each
};

ConfusionGraph empty_graph(int letters);
ConfusionGraph complete_graph(int letters);
ConfusionGraph cycle_graph(int letters);

// Complete graph on k letters minus a clique on the first d letters
// (2 <= d <= k): the first d letters are pairwise distinguishable, every
// other pair is confusable.
ConfusionGraph clique_minus_clique_graph(int k, int d);

// Edge-complement on the same letter set.
ConfusionGraph complement(const ConfusionGraph& g);

// Edge-set intersection of graphs sharing one alphabet.
ConfusionGraph intersect(const std::vector<ConfusionGraph>& graphs);

// Partition of the alphabet into cliques, for graphs that are disjoint
// unions of cliques.  Class ids are assigned in order of each class's
// smallest letter, so the labelling is canonical.
struct CliquePartition {
    ConfusionGraph graph;
    std::vector<int> class_of; // letter -> class id in [0, ell)
    int ell = 0;               // number of classes

    std::vector<std::vector<int>> classes() const;
    int letters() const { return graph.letters(); }
};

std::optional<CliquePartition> try_clique_partition(const ConfusionGraph& g);
CliquePartition clique_partition(const ConfusionGraph& g); // throws NotCliquePartition

// Two equal-length words can be told apart by the receiver iff some
// coordinate carries distinct, non-confusable letters.
bool distinguishable(const ConfusionGraph& g, const Word& u, const Word& v);

// Strong product: vertices are pairs (a,b) indexed a*h.letters()+b; distinct
// pairs are adjacent iff both coordinates are equal or adjacent.
ConfusionGraph strong_product(const ConfusionGraph& g, const ConfusionGraph& h);

// n-fold strong product of g with itself (n >= 1).  Vertex indices read
// words most-significant-letter first, so word (w1..wn) maps to
// ((w1*k + w2)*k + ...).
ConfusionGraph strong_power(const ConfusionGraph& g, int n);
long long word_to_vertex(const Word& w, int k);

// Letter permutations preserving adjacency in every graph at once.
// Enumerated naively, so alphabets above max_letters fall back to the
// identity permutation alone.
std::vector<std::vector<int>> simultaneous_automorphisms(const std::vector<ConfusionGraph>& graphs,
                                                         int max_letters = 8);

} // namespace zeb
