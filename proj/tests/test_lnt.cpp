#include <doctest.h>

#include "multiseg/lnt.hpp"

using namespace multiseg;

namespace {
Multisegment ms(std::initializer_list<std::pair<int, int>> segs) {
    std::vector<Segment> v;
    for (auto [b, e] : segs) v.emplace_back(b, e);
    return Multisegment(std::move(v));
}
}  // namespace

TEST_CASE("partition validation") {
    CHECK_THROWS_AS(Partition({}), std::invalid_argument);
    CHECK_THROWS_AS(Partition({1, 2}), std::invalid_argument);  // increasing
    CHECK_THROWS_AS(Partition({2, 0}), std::invalid_argument);  // nonpositive part
    CHECK(Partition({3, 3, 1}).rows() == 3);
}

TEST_CASE("ladder construction") {
    CHECK(ladder_multisegment(Partition({2, 2, 2}), 2) == ms({{0, 1}, {1, 2}, {2, 3}}));
    CHECK(ladder_multisegment(Partition({3}), 0) == ms({{0, 2}}));
    CHECK(ladder_multisegment(Partition({3, 1}), 1) == ms({{0, 0}, {1, 3}}));
}

TEST_CASE("rayset normalization") {
    // an extra adjacent to the ray is absorbed, repeatedly
    RaySet s(0, {1, 2, 5});
    CHECK(s.ray_max == 2);
    CHECK(s.extra == std::set<int>{5});
    // extras at or below the ray are dropped
    RaySet t(3, {1, 3, 6});
    CHECK(t.ray_max == 3);
    CHECK(t.extra == std::set<int>{6});
    CHECK(s.contains(-100));
    CHECK(s.contains(5));
    CHECK_FALSE(s.contains(4));
}

TEST_CASE("interval sets") {
    CHECK(i_set(Partition({2, 2, 2}), 2) == RaySet(-1, {2, 3, 4}));
    CHECK(i_set(Partition({1}), 0) == RaySet(-1, {1}));
    CHECK(i_set(Partition({2, 1}), 1) == RaySet(-1, {1, 3}));

    CHECK(i_set_speh(SpehParams(0, 1, 2, 3)) == RaySet(-1, {2, 3, 4}));
    CHECK(i_set_speh(SpehParams(0, 0, 0, 0)) == RaySet(-1, {1}));
    CHECK(i_set_speh(SpehParams(0, 2, 1, 3)) == RaySet(-1, {3, 4}));
}

TEST_CASE("rayset difference and hull") {
    RaySet s1(-1, {2, 3, 4});
    RaySet s2(0, {3, 4, 5});
    CHECK(rayset_diff(s1, s2) == std::vector<int>{2});
    CHECK(rayset_diff(s2, s1) == std::vector<int>{0, 5});
    CHECK(hull({0, 5}) == std::pair<int, int>{0, 5});
    CHECK_FALSE(hull({}).has_value());
}

TEST_CASE("ladder reducibility") {
    CHECK(lnt_reducible(Partition({2, 2, 2}), 2, Partition({2, 2, 2}), 3).status ==
          Status::Reducible);
    CHECK(lnt_reducible(Partition({2, 2, 2}), 2, Partition({2, 2, 2}), 2).status ==
          Status::Irreducible);
    CHECK(lnt_reducible(Partition({4, 4}), 1, Partition({2, 2}), 2).status ==
          Status::Irreducible);
    // different lines short-circuit
    CHECK(lnt_reducible(Partition({2, 2, 2}), 2, Partition({2, 2, 2}), 3, false).status ==
          Status::Irreducible);
    // symmetry ("commutativity of R")
    for (int x = -2; x <= 3; ++x)
        for (int y = -2; y <= 3; ++y) {
            Partition alpha({3, 2}), beta({2, 2, 1});
            CHECK(lnt_reducible(alpha, x, beta, y).status ==
                  lnt_reducible(beta, y, alpha, x).status);
            CHECK(lnt_reducible(alpha, x, beta, y).status ==
                  lnt_reducible_footnote(alpha, x, beta, y).status);
        }
}

TEST_CASE("non-constant partitions get a verdict too") {
    Verdict v = lnt_reducible(Partition({3, 1}), 0, Partition({2, 2}), 1);
    CHECK(v.status != Status::Unknown);
    CHECK(lnt_reducible_footnote(Partition({3, 1}), 0, Partition({2, 2}), 1).status == v.status);
}
