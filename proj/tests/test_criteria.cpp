#include <doctest.h>

#include <json.hpp>

#include "multiseg/criteria.hpp"
#include "multiseg/involution.hpp"

using namespace multiseg;

namespace {
Multisegment ms(std::initializer_list<std::pair<int, int>> segs) {
    std::vector<Segment> v;
    for (auto [b, e] : segs) v.emplace_back(b, e);
    return Multisegment(std::move(v));
}
Multisegment sp(int a, int b, int c, int d) { return speh_multisegment(SpehParams(a, b, c, d)); }
}  // namespace

TEST_CASE("contact") {
    CHECK(is_contact(ms({{0, 1}}), ms({{2, 3}})));
    CHECK_FALSE(is_contact(ms({{0, 1}}), ms({{1, 2}})));  // overlap, not disjoint
    CHECK_FALSE(is_contact(ms({{0, 1}}), ms({{3, 4}})));  // gap
    CHECK(is_contact(ms({{2, 3}}), ms({{0, 1}})));        // symmetric
}

TEST_CASE("crossed") {
    CHECK(is_crossed(sp(0, 1, 2, 3), sp(1, 2, 3, 4)));
    // containment configuration: B2 < B1 and C1 < C2 breaks the first
    // crossing condition (C2+1 <= C1 or B1+1 <= B2), so not crossed
    CHECK_FALSE(is_crossed(sp(0, 3, 1, 4), sp(1, 2, 2, 3)));
    CHECK_FALSE(is_crossed(ms({{0, 1}}), ms({{5, 6}})));
}

TEST_CASE("contact closed form") {
    CHECK(contact_speh(SpehParams(0, 1, 2, 3), SpehParams(1, 2, 3, 4)));
    CHECK_FALSE(contact_speh(SpehParams(0, 1, 2, 3), SpehParams(5, 6, 7, 8)));
    CHECK(contact_speh(SpehParams(0, 0, 0, 0), SpehParams(1, 1, 1, 1)));
    CHECK_FALSE(contact_speh(SpehParams(0, 1, 2, 3),
                             SpehParams(Line{"mu"}, 0, 1, 2, 3)));  // different lines
}

TEST_CASE("rc certificate") {
    Verdict v = rc_check(sp(0, 1, 2, 3), sp(1, 2, 3, 4));
    CHECK(v.status == Status::Reducible);
    CHECK(v.criterion == "t-nonadditive");
    CHECK(!v.evidence.empty());
    CHECK(rc_check(sp(0, 3, 1, 4), sp(1, 2, 2, 3)).status == Status::Unknown);
    CHECK(rc_check(ms({{0, 0}}), ms({{5, 5}})).status == Status::Unknown);
}

TEST_CASE("badulescu certificate") {
    CHECK(badulescu_check(sp(0, 3, 1, 4), sp(1, 2, 2, 3)).status == Status::Irreducible);
    CHECK(badulescu_check(sp(0, 1, 2, 3), sp(1, 2, 3, 4)).status == Status::Reducible);
    CHECK(badulescu_check(sp(0, 1, 2, 3), sp(0, 1, 2, 3)).status == Status::Irreducible);
    // budget exhaustion degrades to Unknown
    Verdict v = badulescu_check(a_nd(5, 5), a_nd(5, 5), 10);
    CHECK(v.status == Status::Unknown);
    CHECK(v.criterion == "budget");
}

TEST_CASE("strong dominance") {
    CHECK(strong_less(SpehParams(0, 1, 2, 3), SpehParams(1, 2, 3, 4)));
    CHECK_FALSE(strong_less(SpehParams(0, 1, 2, 3), SpehParams(0, 1, 2, 3)));
    CHECK_FALSE(strong_less(SpehParams(0, 1, 2, 3), SpehParams(1, 2, 2, 3)));
}

TEST_CASE("speh pair theorems") {
    CHECK(speh_reducible_thm72(SpehParams(0, 1, 2, 3), SpehParams(1, 2, 3, 4)).status ==
          Status::Reducible);
    CHECK(speh_reducible_thm72(SpehParams(0, 3, 1, 4), SpehParams(1, 2, 2, 3)).status ==
          Status::Irreducible);
    CHECK(speh_reducible_thm72(SpehParams(0, 1, 2, 3), SpehParams(5, 6, 7, 8)).status ==
          Status::Irreducible);
    CHECK(speh_reducible_thm72(SpehParams(0, 1, 2, 3), SpehParams(Line{"mu"}, 0, 1, 2, 3))
              .criterion == "different-lines");

    CHECK(speh_reducible_thm71(SpehParams(0, 1, 2, 3), SpehParams(1, 2, 3, 4)).status ==
          Status::Reducible);
    CHECK(speh_reducible_thm71(SpehParams(0, 3, 1, 4), SpehParams(1, 2, 2, 3)).status ==
          Status::Irreducible);
    CHECK(speh_reducible_thm71(SpehParams(0, 1, 2, 3), SpehParams(0, 1, 2, 3)).status ==
          Status::Irreducible);
}

TEST_CASE("verdict symmetry and contragredient invariance") {
    std::vector<SpehParams> quads = {SpehParams(0, 1, 2, 3), SpehParams(1, 2, 3, 4),
                                     SpehParams(0, 3, 1, 4), SpehParams(1, 2, 2, 3),
                                     SpehParams(0, 0, 3, 3), SpehParams(2, 4, 2, 4)};
    for (const auto& p : quads)
        for (const auto& q : quads) {
            CHECK(speh_reducible_thm72(p, q).status == speh_reducible_thm72(q, p).status);
            CHECK(speh_reducible_thm71(p, q).status == speh_reducible_thm71(q, p).status);
            // contragredient of speh(A,B,C,D) is speh(-D,-C,-B,-A) on the dual line
            SpehParams pc(dual(p.line), -p.D, -p.C, -p.B, -p.A);
            SpehParams qc(dual(q.line), -q.D, -q.C, -q.B, -q.A);
            CHECK(contragredient(speh_multisegment(p)) == speh_multisegment(pc));
            CHECK(speh_reducible_thm72(p, q).status == speh_reducible_thm72(pc, qc).status);
            // rc on the pair matches rc on contragredients
            CHECK(rc_check(speh_multisegment(p), speh_multisegment(q)).status ==
                  rc_check(speh_multisegment(pc), speh_multisegment(qc)).status);
        }
}

TEST_CASE("product of speh reps") {
    CHECK(product_irreducible({SpehParams(0, 1, 2, 3)}).status == Status::Irreducible);
    Verdict v = product_irreducible(
        {SpehParams(0, 1, 2, 3), SpehParams(1, 2, 3, 4), SpehParams(9, 10, 11, 12)});
    CHECK(v.status == Status::Reducible);
    CHECK(v.evidence.find("1") != std::string::npos);
    CHECK(v.evidence.find("2") != std::string::npos);
    CHECK(product_irreducible({SpehParams(0, 1, 2, 3), SpehParams(0, 1, 2, 3),
                               SpehParams(0, 1, 2, 3)})
              .status == Status::Irreducible);
    CHECK_THROWS_AS(product_irreducible({}), std::invalid_argument);
}

TEST_CASE("mw parameters") {
    CHECK_THROWS_AS(MWParams(1, 3, 1), std::invalid_argument);   // b < a
    CHECK_THROWS_AS(MWParams(0, 0, 3), std::invalid_argument);   // b-a odd
    CHECK_THROWS_AS(MWParams(-1, 0, 2), std::invalid_argument);  // t < 0

    auto p = mw_to_speh(MWParams(1, 1, 5));
    REQUIRE(p.has_value());
    CHECK((p->A == 0 && p->B == 1 && p->C == 2 && p->D == 3));
    auto q = mw_to_speh(MWParams(0, 0, 4));
    REQUIRE(q.has_value());
    CHECK((q->A == 0 && q->B == 0 && q->C == 2 && q->D == 2));
    CHECK_FALSE(mw_to_speh(MWParams(2, 1, 3)).has_value());  // half-shifted lattice
}

TEST_CASE("mw linking") {
    CHECK(mw_linked(MWParams(1, 1, 5), MWParams(1, 3, 7)));
    CHECK_FALSE(mw_linked(MWParams(1, 1, 5), MWParams(0, 2, 6)));
    CHECK_FALSE(mw_linked(MWParams(Line{"a"}, 1, 1, 5), MWParams(Line{"b"}, 1, 3, 7)));
    // half-integral pair aligned jointly onto the integer lattice
    auto pair = mw_aligned_speh_pair(MWParams(2, 1, 3), MWParams(2, 3, 5));
    REQUIRE(pair.has_value());
    CHECK(mw_linked(MWParams(2, 1, 3), MWParams(2, 3, 5)) ==
          (speh_reducible_thm72(pair->first, pair->second).status == Status::Reducible));
    // non-integral exponent difference: never linked, no alignment
    CHECK_FALSE(mw_linked(MWParams(0, 0, 2), MWParams(0, 1, 3)));
    CHECK_FALSE(mw_aligned_speh_pair(MWParams(0, 0, 2), MWParams(0, 1, 3)).has_value());
}

TEST_CASE("verdict json") {
    Verdict v = speh_reducible_thm72(SpehParams(0, 1, 2, 3), SpehParams(1, 2, 3, 4));
    auto j = nlohmann::json::parse(v.to_json());
    CHECK(j["status"] == "Reducible");
    CHECK(j.contains("criterion"));
    CHECK(j.contains("evidence"));
}
