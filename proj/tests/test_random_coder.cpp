#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>

#include "instances.hpp"
#include "zeb/random_coder.hpp"
#include "zeb/scheme_oracle.hpp"

using namespace zeb;
using fixtures::partitions_of;
using fixtures::symmetric_graphs;

namespace {

Word observe(const CliquePartition& part, const Word& w) {
    Word obs;
    for (int a : w) obs.push_back(part.class_of[a]);
    return obs;
}

} // namespace

TEST_CASE("round trip on the symmetric three-letter instance") {
    auto parts = partitions_of(symmetric_graphs(3));
    std::vector<int> comp{3, 3, 3};
    std::vector<int> counts{2, 2, 2};
    RandomCodeResult r = build_scheme(parts, comp, counts, 1);
    REQUIRE(r.families.has_value());
    CHECK(r.attempts >= 1);
    CHECK(r.attempts <= 50);
    REQUIRE(r.families->size() == 3);
    for (int i = 0; i < 3; ++i) {
        CHECK((*r.families)[i].user == i);
        CHECK((*r.families)[i].families.size() == 2);
    }
    CHECK(validate_scheme(parts, comp, *r.families).ok);

    // encode then decode every message tuple
    MessageVector mv{{2, 2, 2}, 9};
    for (long long t = 0; t < tuple_count(mv); ++t) {
        std::vector<int> tuple = tuple_digits(mv, t);
        Word w = encode(parts, comp, *r.families, tuple);
        REQUIRE(w.size() == 9);
        for (int i = 0; i < 3; ++i)
            CHECK(decode((*r.families)[i], observe(parts[i], w)) == tuple[i]);
    }
}

TEST_CASE("same seed reproduces the same scheme") {
    auto parts = partitions_of(symmetric_graphs(3));
    std::vector<int> comp{3, 3, 3};
    std::vector<int> counts{2, 2, 2};
    RandomCodeResult a = build_scheme(parts, comp, counts, 7);
    RandomCodeResult b = build_scheme(parts, comp, counts, 7);
    REQUIRE(a.families.has_value());
    REQUIRE(b.families.has_value());
    CHECK(a.attempts == b.attempts);
    for (std::size_t i = 0; i < a.families->size(); ++i)
        CHECK((*a.families)[i].families == (*b.families)[i].families);
}

TEST_CASE("single message per user is trivially valid") {
    auto parts = partitions_of(symmetric_graphs(3));
    RandomCodeResult r = build_scheme(parts, {1, 1, 1}, {1, 1, 1}, 0);
    REQUIRE(r.families.has_value());
    CHECK(r.attempts == 1);
    CHECK(validate_scheme(parts, {1, 1, 1}, *r.families).ok);
}

TEST_CASE("more messages than observations cannot succeed") {
    auto parts = partitions_of(symmetric_graphs(3));
    // composition (1,1,1): each user sees only 3 distinct strings
    RandomCodeResult r = build_scheme(parts, {1, 1, 1}, {4, 1, 1}, 3, 10);
    CHECK_FALSE(r.families.has_value());
    CHECK(r.attempts == 10);
    REQUIRE(r.tuple_failures.size() == 4);
    long long failures = 0;
    for (long long f : r.tuple_failures) failures += f;
    CHECK(failures >= 10); // every attempt leaves at least one tuple unserved
}

TEST_CASE("validation rejects starved families") {
    auto parts = partitions_of(symmetric_graphs(3));
    std::vector<int> comp{1, 1, 1};
    // one family per user holding that user's whole image
    std::vector<FamilyPartition> fps(3);
    for (int i = 0; i < 3; ++i) {
        std::set<Word> img;
        for_each_type_class_word(comp, [&](const Word& w) { img.insert(observe(parts[i], w)); });
        fps[i].user = i;
        fps[i].families = {std::vector<Word>(img.begin(), img.end())};
    }
    CHECK(validate_scheme(parts, comp, fps).ok);

    // user 0's image: a 0-cell marks the position of letter 0
    std::vector<Word> image{{0, 1, 1}, {1, 0, 1}, {1, 1, 0}};
    CHECK(fps[0].families.front() == image);

    // starve user 0: two families, one empty
    fps[0].families = {{}, image};
    ValidationResult bad = validate_scheme(parts, comp, fps);
    CHECK_FALSE(bad.ok);
    CHECK(bad.unservable_tuple == std::vector<int>{0, 0, 0});

    // duplicated observation across families is rejected outright
    fps[0].families = {image, {image.front()}};
    CHECK_THROWS_AS(validate_scheme(parts, comp, fps), Error);

    // a string outside the image is rejected
    fps[0].families = {{{0, 0, 0}}, image};
    CHECK_THROWS_AS(validate_scheme(parts, comp, fps), UnknownObservation);
}

TEST_CASE("decode looks up the family index") {
    FamilyPartition fp;
    fp.user = 0;
    fp.families = {{{0, 1}}, {{1, 0}, {1, 1}}};
    CHECK(decode(fp, {0, 1}) == 0);
    CHECK(decode(fp, {1, 1}) == 1);
    CHECK_THROWS_AS(decode(fp, {0, 0}), UnknownObservation);
}

TEST_CASE("encode picks the first serving word and rejects unservable tuples") {
    auto parts = partitions_of(symmetric_graphs(3));
    std::vector<int> comp{1, 1, 1};
    std::vector<FamilyPartition> fps(3);
    for (int i = 0; i < 3; ++i) {
        std::set<Word> img;
        for_each_type_class_word(comp, [&](const Word& w) { img.insert(observe(parts[i], w)); });
        fps[i].user = i;
        fps[i].families = {std::vector<Word>(img.begin(), img.end())};
    }
    Word w = encode(parts, comp, fps, {0, 0, 0});
    CHECK(w == Word{0, 1, 2}); // lexicographically first word of the class

    fps[0].families = {{}, fps[0].families.front()}; // message 0 unservable now
    CHECK_THROWS_AS(encode(parts, comp, fps, {0, 0, 0}), Error);
}
