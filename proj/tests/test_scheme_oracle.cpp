#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "instances.hpp"
#include "oracles.hpp"
#include "zeb/capacity.hpp"
#include "zeb/scheme_oracle.hpp"

using namespace zeb;
using fixtures::prop16_graphs;

TEST_CASE("tuple indexing round trip") {
    MessageVector mv{{3, 2, 4}, 1};
    CHECK(tuple_count(mv) == 24);
    for (long long t = 0; t < 24; ++t) CHECK(tuple_index(mv, tuple_digits(mv, t)) == t);
    CHECK(tuple_digits(mv, 0) == std::vector<int>{0, 0, 0});
    CHECK(tuple_digits(mv, 1) == std::vector<int>{0, 0, 1}); // last user fastest
    CHECK(tuple_digits(mv, 23) == std::vector<int>{2, 1, 3});
    CHECK_THROWS_AS(tuple_digits(mv, 24), Error);
    CHECK_THROWS_AS(tuple_index(mv, {0, 0}), DimensionMismatch);
}

TEST_CASE("scheme validity from the definition") {
    auto graphs = prop16_graphs();
    // two messages for user 1, one for user 2: words 0 and 2 work (user 1
    // tells 0 and 2 apart), words 0 and 1 do not.
    EncodingScheme good{{{2, 1}, 1}, {{0}, {2}}};
    CHECK(valid_scheme(graphs, good));
    EncodingScheme bad{{{2, 1}, 1}, {{0}, {1}}};
    CHECK_FALSE(valid_scheme(graphs, bad));
    // repeated codeword across tuples differing for some user is invalid
    EncodingScheme dup{{{2, 1}, 1}, {{0}, {0}}};
    CHECK_FALSE(valid_scheme(graphs, dup));
    // wrong word length
    EncodingScheme wrong{{{2, 1}, 1}, {{0, 0}, {2, 2}}};
    CHECK_FALSE(valid_scheme(graphs, wrong));
}

TEST_CASE("fixed ground truths on the three-letter pair") {
    auto graphs = prop16_graphs();

    SchemeSearchResult r1 = is_feasible(graphs, {{2, 2}, 1});
    CHECK_FALSE(r1.scheme.has_value());
    CHECK_FALSE(oracle::scheme_search(graphs, {2, 2}, 1).has_value());

    SchemeSearchResult r2 = is_feasible(graphs, {{2, 2}, 2});
    REQUIRE(r2.scheme.has_value());
    CHECK(valid_scheme(graphs, *r2.scheme));
    CHECK(oracle::scheme_search(graphs, {2, 2}, 2).has_value());

    SchemeSearchResult r3 = is_feasible(graphs, {{4, 2}, 2});
    CHECK_FALSE(r3.scheme.has_value());

    // single-user columns specialize to independence numbers of the powers
    CHECK(is_feasible(graphs, {{4, 1}, 2}).scheme.has_value());
    CHECK_FALSE(is_feasible(graphs, {{5, 1}, 2}).scheme.has_value());
    CHECK(is_feasible(graphs, {{1, 4}, 2}).scheme.has_value());
    CHECK_FALSE(is_feasible(graphs, {{1, 5}, 2}).scheme.has_value());
}

TEST_CASE("search result is deterministic") {
    auto graphs = prop16_graphs();
    SchemeSearchResult a = is_feasible(graphs, {{2, 2}, 2});
    SchemeSearchResult b = is_feasible(graphs, {{2, 2}, 2});
    REQUIRE(a.scheme.has_value());
    REQUIRE(b.scheme.has_value());
    CHECK(a.scheme->codewords == b.scheme->codewords);
    CHECK(a.nodes == b.nodes);
}

TEST_CASE("feasibility agrees with the naive enumerator on random instances") {
    std::mt19937_64 rng(23);
    for (int trial = 0; trial < 120; ++trial) {
        int k = std::uniform_int_distribution<int>(2, 3)(rng);
        int users = std::uniform_int_distribution<int>(2, 3)(rng);
        std::vector<ConfusionGraph> graphs;
        for (int i = 0; i < users; ++i) {
            ConfusionGraph g(k);
            for (int a = 0; a < k; ++a)
                for (int b = a + 1; b < k; ++b)
                    if (std::uniform_int_distribution<int>(0, 2)(rng) == 0) g.add_edge(a, b);
            graphs.push_back(g);
        }
        std::vector<long long> counts(users);
        long long tuples = 1;
        for (long long& m : counts) tuples *= m = std::uniform_int_distribution<int>(1, 2)(rng);
        if (tuples > 8) continue;
        bool fast = is_feasible(graphs, {counts, 1}).scheme.has_value();
        bool slow = oracle::scheme_search(graphs, counts, 1).has_value();
        CHECK(fast == slow);
    }
}

TEST_CASE("feasibility is monotone in message counts") {
    auto graphs = prop16_graphs();
    for (long long m1 = 1; m1 <= 4; ++m1)
        for (long long m2 = 1; m2 <= 4; ++m2) {
            if (!is_feasible(graphs, {{m1, m2}, 2}).scheme.has_value()) continue;
            if (m1 > 1) CHECK(is_feasible(graphs, {{m1 - 1, m2}, 2}).scheme.has_value());
            if (m2 > 1) CHECK(is_feasible(graphs, {{m1, m2 - 1}, 2}).scheme.has_value());
        }
}

TEST_CASE("removing an edge keeps every feasible scheme feasible") {
    // user 2 loses the confusion {0,2}: anything feasible before stays so.
    auto graphs = prop16_graphs();
    std::vector<ConfusionGraph> relaxed{graphs[0], empty_graph(3)};
    for (long long m1 = 1; m1 <= 3; ++m1)
        for (long long m2 = 1; m2 <= 3; ++m2)
            if (is_feasible(graphs, {{m1, m2}, 1}).scheme.has_value())
                CHECK(is_feasible(relaxed, {{m1, m2}, 1}).scheme.has_value());
}

TEST_CASE("frontier on fixed instances") {
    auto pts16 = frontier(prop16_graphs(), 1);
    REQUIRE(pts16.size() == 2);
    CHECK(pts16[0].counts == std::vector<long long>{1, 2});
    CHECK(pts16[1].counts == std::vector<long long>{2, 1});

    std::vector<ConfusionGraph> sharp{empty_graph(3), empty_graph(3)};
    auto pts = frontier(sharp, 1);
    REQUIRE(pts.size() == 2);
    CHECK(pts[0].counts == std::vector<long long>{1, 3});
    CHECK(pts[1].counts == std::vector<long long>{3, 1});

    CHECK_THROWS_AS(frontier({prop16_graphs()[0]}, 1), Error); // needs two users
}

TEST_CASE("frontier points are feasible and successors are not") {
    auto graphs = prop16_graphs();
    for (const MessageVector& mv : frontier(graphs, 2)) {
        CHECK(is_feasible(graphs, mv).scheme.has_value());
        MessageVector up1{{mv.counts[0] + 1, mv.counts[1]}, mv.n};
        MessageVector up2{{mv.counts[0], mv.counts[1] + 1}, mv.n};
        CHECK_FALSE(is_feasible(graphs, up1).scheme.has_value());
        CHECK_FALSE(is_feasible(graphs, up2).scheme.has_value());
    }
}

TEST_CASE("concatenation time-shares two schemes") {
    auto graphs = prop16_graphs();
    EncodingScheme s1 = *is_feasible(graphs, {{2, 1}, 1}).scheme;
    EncodingScheme s2 = *is_feasible(graphs, {{1, 2}, 1}).scheme;
    EncodingScheme both = concatenate(s1, s2);
    CHECK(both.shape.counts == std::vector<long long>{2, 2});
    CHECK(both.shape.n == 2);
    CHECK(valid_scheme(graphs, both));

    EncodingScheme big = concatenate(both, both);
    CHECK(big.shape.counts == std::vector<long long>{4, 4});
    CHECK(big.shape.n == 4);
    CHECK(valid_scheme(graphs, big));

    CHECK_THROWS_AS(concatenate(s1, EncodingScheme{{{2}, 1}, {{0}, {2}}}), DimensionMismatch);
}

TEST_CASE("budgets turn into errors, not answers") {
    auto graphs = prop16_graphs();
    SchemeBudget tiny_nodes;
    tiny_nodes.max_nodes = 1;
    CHECK_THROWS_AS(is_feasible(graphs, {{2, 2}, 2}, tiny_nodes), BudgetExceeded);
    SchemeBudget tiny_tuples;
    tiny_tuples.max_tuples = 3;
    CHECK_THROWS_AS(is_feasible(graphs, {{2, 2}, 1}, tiny_tuples), BudgetExceeded);
    // 3^20 candidate words exceed the default word cap
    CHECK_THROWS_AS(is_feasible(graphs, {{2, 2}, 20}), BudgetExceeded);
}

TEST_CASE("type classes enumerate in lexicographic order") {
    TypeClass tc({2, 1});
    CHECK(tc.size == 3);
    std::vector<Word> seen;
    for_each_type_class_word(tc.composition, [&](const Word& w) { seen.push_back(w); });
    CHECK(seen == std::vector<Word>{{0, 0, 1}, {0, 1, 0}, {1, 0, 0}});

    CHECK(TypeClass({3, 3, 3}).size == 1680);
    CHECK_THROWS_AS(TypeClass({0, 0}), Error); // no letters placed
    CHECK_THROWS_AS(TypeClass({20, 20, 20}), SizeLimitExceeded);
    CHECK_THROWS_AS(TypeClass({-1, 2}), Error);
}

TEST_CASE("multinomial with a cap") {
    CHECK(multinomial_capped({2, 2}, 100).value() == 6);
    CHECK(multinomial_capped({3, 3, 3}, 1'000'000).value() == 1680);
    CHECK(multinomial_capped({0, 5}, 100).value() == 1);
    CHECK_FALSE(multinomial_capped({30, 30}, 1'000'000).has_value());
}

TEST_CASE("observation counts match the multinomial oracle") {
    auto parts = fixtures::partitions_of(prop16_graphs());
    std::vector<std::vector<int>> subsets{{0}, {1}, {0, 1}};
    for (int n = 1; n <= 5; ++n)
        for (int c0 = 0; c0 <= n; ++c0)
            for (int c1 = 0; c0 + c1 <= n; ++c1) {
                std::vector<int> comp{c0, c1, n - c0 - c1};
                for (const auto& users : subsets) {
                    long long got = type_class_count(parts, comp, users);
                    CHECK(got == static_cast<long long>(
                                     oracle::observation_count(parts, comp, users)));
                }
            }
}

TEST_CASE("counting sandwich holds across small compositions") {
    auto parts = fixtures::partitions_of(prop16_graphs());
    std::vector<std::vector<int>> subsets{{0}, {1}, {0, 1}};
    for (int n = 1; n <= 6; ++n)
        for (int c0 = 0; c0 <= n; ++c0)
            for (int c1 = 0; c0 + c1 <= n; ++c1)
                for (const auto& users : subsets)
                    CHECK(lemma9_check(parts, {c0, c1, n - c0 - c1}, users));
}
