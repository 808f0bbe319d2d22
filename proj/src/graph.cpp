#include "zeb/graph.hpp"

#include <algorithm>
#include <numeric>
#include <string>

namespace zeb {

ConfusionGraph::ConfusionGraph(int letters) : k_(letters) {
    if (letters < 1) throw Error("confusion graph needs at least one letter");
    words_ = (letters + 63) / 64;
    bits_.assign(static_cast<std::size_t>(k_) * words_, 0);
}

ConfusionGraph::ConfusionGraph(int letters, const std::vector<std::pair<int, int>>& edges)
    : ConfusionGraph(letters) {
    for (const auto& [a, b] : edges) add_edge(a, b);
}

void ConfusionGraph::check_letter(int a) const {
    if (a < 0 || a >= k_)
        throw AlphabetMismatch("letter " + std::to_string(a) + " outside alphabet of size " +
                               std::to_string(k_));
}

void ConfusionGraph::add_edge(int a, int b) {
    check_letter(a);
    check_letter(b);
    if (a == b) throw Error("self loop on letter " + std::to_string(a));
    bits_[static_cast<std::size_t>(a) * words_ + b / 64] |= std::uint64_t{1} << (b % 64);
    bits_[static_cast<std::size_t>(b) * words_ + a / 64] |= std::uint64_t{1} << (a % 64);
}

std::vector<std::pair<int, int>> ConfusionGraph::edges() const {
    std::vector<std::pair<int, int>> out;
    for (int a = 0; a < k_; ++a)
        for (int b = a + 1; b < k_; ++b)
            if (adjacent(a, b)) out.emplace_back(a, b);
    return out;
}

std::size_t ConfusionGraph::edge_count() const { return edges().size(); }

ConfusionGraph empty_graph(int letters) { return ConfusionGraph(letters); }

ConfusionGraph complete_graph(int letters) {
    ConfusionGraph g(letters);
    for (int a = 0; a < letters; ++a)
        for (int b = a + 1; b < letters; ++b) g.add_edge(a, b);
    return g;
}

ConfusionGraph cycle_graph(int letters) {
    if (letters < 3) throw Error("cycle needs at least three letters");
    ConfusionGraph g(letters);
    for (int a = 0; a < letters; ++a) g.add_edge(a, (a + 1) % letters);
    return g;
}

ConfusionGraph clique_minus_clique_graph(int k, int d) {
    if (d < 2 || d > k) throw Error("clique-minus-clique needs 2 <= d <= k");
    ConfusionGraph g(k);
    for (int a = 0; a < k; ++a)
        for (int b = a + 1; b < k; ++b)
            if (a >= d || b >= d) g.add_edge(a, b);
    return g;
}

ConfusionGraph complement(const ConfusionGraph& g) {
    const int k = g.letters();
    ConfusionGraph out(k);
    for (int a = 0; a < k; ++a)
        for (int b = a + 1; b < k; ++b)
            if (!g.adjacent(a, b)) out.add_edge(a, b);
    return out;
}

ConfusionGraph intersect(const std::vector<ConfusionGraph>& graphs) {
    if (graphs.empty()) throw Error("intersect needs at least one graph");
    const int k = graphs.front().letters();
    for (const auto& g : graphs)
        if (g.letters() != k) throw AlphabetMismatch("intersect: graphs on different alphabets");
    ConfusionGraph out(k);
    for (int a = 0; a < k; ++a)
        for (int b = a + 1; b < k; ++b) {
            bool all = true;
            for (const auto& g : graphs) all = all && g.adjacent(a, b);
            if (all) out.add_edge(a, b);
        }
    return out;
}

std::vector<std::vector<int>> CliquePartition::classes() const {
    std::vector<std::vector<int>> out(ell);
    for (int a = 0; a < letters(); ++a) out[class_of[a]].push_back(a);
    return out;
}

std::optional<CliquePartition> try_clique_partition(const ConfusionGraph& g) {
    const int k = g.letters();
    std::vector<int> comp(k, -1);
    int next = 0;
    for (int start = 0; start < k; ++start) {
        if (comp[start] >= 0) continue;
        // Flood the connected component of `start`.
        std::vector<int> stack{start};
        comp[start] = next;
        std::vector<int> members;
        while (!stack.empty()) {
            int a = stack.back();
            stack.pop_back();
            members.push_back(a);
            for (int b = 0; b < k; ++b)
                if (g.adjacent(a, b) && comp[b] < 0) {
                    comp[b] = next;
                    stack.push_back(b);
                }
        }
        // A component that is not a clique disqualifies the whole graph.
        for (std::size_t i = 0; i < members.size(); ++i)
            for (std::size_t j = i + 1; j < members.size(); ++j)
                if (!g.adjacent(members[i], members[j])) return std::nullopt;
        ++next;
    }
    // Components were discovered in order of smallest member, so `comp`
    // already carries the canonical class ids.
    return CliquePartition{g, std::move(comp), next};
}

CliquePartition clique_partition(const ConfusionGraph& g) {
    auto cp = try_clique_partition(g);
    if (!cp) throw NotCliquePartition("graph is not a disjoint union of cliques");
    return *std::move(cp);
}

bool distinguishable(const ConfusionGraph& g, const Word& u, const Word& v) {
    if (u.size() != v.size())
        throw DimensionMismatch("distinguishable: words of lengths " + std::to_string(u.size()) +
                                " and " + std::to_string(v.size()));
    for (std::size_t i = 0; i < u.size(); ++i)
        if (u[i] != v[i] && !g.adjacent(u[i], v[i])) return true;
    return false;
}

ConfusionGraph strong_product(const ConfusionGraph& g, const ConfusionGraph& h) {
    const int kg = g.letters(), kh = h.letters();
    ConfusionGraph out(kg * kh);
    for (int a = 0; a < kg; ++a)
        for (int b = 0; b < kh; ++b)
            for (int c = 0; c < kg; ++c)
                for (int d = 0; d < kh; ++d) {
                    if (a == c && b == d) continue;
                    bool first = (a == c) || g.adjacent(a, c);
                    bool second = (b == d) || h.adjacent(b, d);
                    if (first && second) {
                        int u = a * kh + b, v = c * kh + d;
                        if (u < v) out.add_edge(u, v);
                    }
                }
    return out;
}

ConfusionGraph strong_power(const ConfusionGraph& g, int n) {
    if (n < 1) throw Error("strong power needs n >= 1");
    ConfusionGraph out = g;
    for (int i = 1; i < n; ++i) out = strong_product(out, g);
    return out;
}

long long word_to_vertex(const Word& w, int k) {
    long long v = 0;
    for (int letter : w) {
        if (letter < 0 || letter >= k) throw AlphabetMismatch("word letter outside alphabet");
        v = v * k + letter;
    }
    return v;
}

std::vector<std::vector<int>> simultaneous_automorphisms(const std::vector<ConfusionGraph>& graphs,
                                                         int max_letters) {
    if (graphs.empty()) throw Error("automorphisms of an empty graph list");
    const int k = graphs.front().letters();
    for (const auto& g : graphs)
        if (g.letters() != k) throw AlphabetMismatch("automorphisms: graphs on different alphabets");

    std::vector<int> perm(k);
    std::iota(perm.begin(), perm.end(), 0);
    if (k > max_letters) return {perm}; // too many to enumerate; identity only

    std::vector<std::vector<int>> out;
    do {
        bool ok = true;
        for (const auto& g : graphs) {
            for (int a = 0; a < k && ok; ++a)
                for (int b = a + 1; b < k && ok; ++b)
                    if (g.adjacent(a, b) != g.adjacent(perm[a], perm[b])) ok = false;
            if (!ok) break;
        }
        if (ok) out.push_back(perm);
    } while (std::next_permutation(perm.begin(), perm.end()));
    // next_permutation cycles back to sorted order, so the identity is included.
    std::sort(out.begin(), out.end());
    return out;
}

} // namespace zeb
