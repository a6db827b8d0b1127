#include "multiseg/criteria.hpp"

#include <algorithm>
#include <array>
#include <sstream>

#include <json.hpp>

#include "multiseg/involution.hpp"

namespace multiseg {

std::string to_string(Status s) {
    switch (s) {
        case Status::Reducible: return "Reducible";
        case Status::Irreducible: return "Irreducible";
        case Status::Unknown: return "Unknown";
    }
    return "?";
}

std::string Verdict::to_json() const {
    return nlohmann::json{
        {"status", to_string(status)}, {"criterion", criterion}, {"evidence", evidence}}
        .dump();
}

namespace {

std::string seg_str(const Segment& s) {
    std::ostringstream os;
    os << '[' << s.b << ',' << s.e << "]@" << s.line.label;
    return os.str();
}

bool juxtaposed(const Segment& s1, const Segment& s2) {
    if (s1.line != s2.line) return false;
    return s2.b == s1.e + 1 || s1.b == s2.e + 1;
}

bool intervals_meet(int a, int b, int c, int d) { return std::max(a, c) <= std::min(b, d); }

// first segment present in x but not in y (as multisets); both canonical
std::optional<Segment> first_difference(const Multisegment& x, const Multisegment& y) {
    std::vector<Segment> diff;
    std::set_difference(x.begin(), x.end(), y.begin(), y.end(), std::back_inserter(diff));
    if (diff.empty()) return std::nullopt;
    return diff.front();
}

}  // namespace

bool is_contact(const Multisegment& a, const Multisegment& b) {
    for (const auto& s1 : a)
        for (const auto& s2 : b)
            if (juxtaposed(s1, s2)) return true;
    return false;
}

bool is_crossed(const Multisegment& a, const Multisegment& b) {
    return is_contact(a, mwa_left(b)) && is_contact(mwa_left(a), b);
}

bool contact_speh(const SpehParams& p1, const SpehParams& p2) {
    if (p1.line != p2.line) return false;
    return intervals_meet(p1.A, p1.C, p2.B + 1, p2.D + 1) ||
           intervals_meet(p1.B + 1, p1.D + 1, p2.A, p2.C);
}

Verdict rc_check(const Multisegment& a, const Multisegment& b) {
    Multisegment lhs = mwa_left(a + b);
    Multisegment rhs = mwa_left(a) + mwa_left(b);
    if (lhs == rhs)
        return {Status::Unknown, "t-additive", "(a+b)^t = a^t + b^t; criterion says nothing"};
    std::ostringstream ev;
    if (auto w = first_difference(lhs, rhs))
        ev << "(a+b)^t contains " << seg_str(*w) << " not in a^t + b^t";
    else if (auto w2 = first_difference(rhs, lhs))
        ev << "a^t + b^t contains " << seg_str(*w2) << " not in (a+b)^t";
    return {Status::Reducible, "t-nonadditive", ev.str()};
}

Verdict badulescu_check(const Multisegment& a, const Multisegment& b, std::size_t limit) {
    Verdict rc = rc_check(a, b);
    if (rc.status == Status::Reducible) return rc;
    Multisegment sum = a + b;
    try {
        std::set<Multisegment> down = strict_downset(sum, limit);
        std::set<Multisegment> down_dual = strict_downset(mwa_left(sum), limit);
        for (const auto& c : down) {
            if (down_dual.count(mwa_left(c))) {
                std::ostringstream ev;
                ev << "witness c = " << format_multisegment(c)
                   << " has c < a+b and c^t < (a+b)^t; criterion inconclusive";
                return {Status::Unknown, "downset-witness", ev.str()};
            }
        }
        std::ostringstream ev;
        ev << "all " << down.size() << " elements c < a+b satisfy c^t not< (a+b)^t";
        return {Status::Irreducible, "downset-clean", ev.str()};
    } catch (const DownsetBudgetExceeded& ex) {
        std::ostringstream ev;
        ev << "budget exceeded after " << ex.partial_count << " states";
        return {Status::Unknown, "budget", ev.str()};
    }
}

bool strong_less(const SpehParams& p1, const SpehParams& p2) {
    return p1.A < p2.A && p1.B < p2.B && p1.C < p2.C && p1.D < p2.D;
}

Verdict speh_reducible_thm72(const SpehParams& p1, const SpehParams& p2) {
    if (p1.line != p2.line)
        return {Status::Irreducible, "different-lines", "supports lie on distinct cuspidal lines"};
    if (std::max(p1.A, p2.A) > std::min(p1.D, p2.D) + 1)
        return {Status::Irreducible, "union-not-segment",
                "[A1,D1] u [A2,D2] is not a Z-segment"};
    if (strong_less(p1, p2))
        return {Status::Reducible, "strong-dominance-12",
                "first quadruple strongly below second, support union a segment"};
    if (strong_less(p2, p1))
        return {Status::Reducible, "strong-dominance-21",
                "second quadruple strongly below first, support union a segment"};
    return {Status::Irreducible, "no-strong-dominance",
            "neither quadruple strongly dominates the other"};
}

Verdict speh_reducible_thm71(const SpehParams& p1, const SpehParams& p2) {
    if (p1.line != p2.line)
        return {Status::Irreducible, "different-lines", "supports lie on distinct cuspidal lines"};
    const SpehParams* lo = &p1;
    const SpehParams* hi = &p2;
    if (lo->A > hi->A) std::swap(lo, hi);
    bool linked_supports = lo->A < hi->A && lo->D < hi->D && hi->A <= lo->D + 1;
    if (!linked_supports)
        return {Status::Irreducible, "supports-not-linked",
                "underlying support segments are not linked"};
    if (!is_crossed(speh_multisegment(p1), speh_multisegment(p2)))
        return {Status::Irreducible, "not-crossed", "multisegments are not crossed"};
    return {Status::Reducible, "linked-and-crossed",
            "support segments linked and multisegments crossed"};
}

Verdict product_irreducible(const std::vector<SpehParams>& ps) {
    if (ps.empty()) throw std::invalid_argument("product of zero Speh factors");
    for (std::size_t i = 0; i < ps.size(); ++i) {
        for (std::size_t j = i + 1; j < ps.size(); ++j) {
            Verdict v = speh_reducible_thm72(ps[i], ps[j]);
            if (v.status == Status::Reducible) {
                std::ostringstream ev;
                ev << "pair (" << i + 1 << "," << j + 1 << ") reduces: " << v.criterion;
                return {Status::Reducible, "reducible-pair", ev.str()};
            }
        }
    }
    return {Status::Irreducible, "all-pairs-irreducible",
            "every pair of factors is irreducible"};
}

MWParams::MWParams(Line l, int t2_, int a2_, int b2_)
    : line(std::move(l)), t2(t2_), a2(a2_), b2(b2_) {
    validate_line(line);
    if (t2 < 0) throw std::invalid_argument("t must be >= 0");
    if (b2 < a2 || (b2 - a2) % 2 != 0)
        throw std::invalid_argument("b - a must be a nonnegative integer");
}

std::array<int, 4> mw_doubled_quad(const MWParams& j) {
    return {j.a2 - j.t2, j.a2 + j.t2, j.b2 - j.t2, j.b2 + j.t2};
}

std::optional<SpehParams> mw_to_speh(const MWParams& j) {
    auto q = mw_doubled_quad(j);
    for (int v : q)
        if (v % 2 != 0) return std::nullopt;  // half-shifted lattice
    return SpehParams(j.line, q[0] / 2, q[1] / 2, q[2] / 2, q[3] / 2);
}

bool mw_linked(const MWParams& j1, const MWParams& j2) {
    if (j1.line != j2.line) return false;
    if (((j1.a2 - j1.t2) - (j2.a2 - j2.t2)) % 2 != 0) return false;  // non-integral difference
    int dt = std::abs(j1.t2 - j2.t2);
    bool fwd = j1.b2 > j2.b2 + dt && j1.a2 > j2.a2 + dt && j1.a2 - j2.b2 <= 2 + j1.t2 + j2.t2;
    bool bwd = j2.b2 > j1.b2 + dt && j2.a2 > j1.a2 + dt && j2.a2 - j1.b2 <= 2 + j1.t2 + j2.t2;
    return fwd || bwd;
}

std::optional<std::pair<SpehParams, SpehParams>> mw_aligned_speh_pair(const MWParams& j1,
                                                                      const MWParams& j2) {
    auto q1 = mw_doubled_quad(j1);
    auto q2 = mw_doubled_quad(j2);
    if ((q1[0] - q2[0]) % 2 != 0) return std::nullopt;
    // shift both by the same half-integer so entries land on Z
    int sh = ((q1[0] % 2) + 2) % 2;
    auto halve = [sh](std::array<int, 4> q) {
        std::array<int, 4> r;
        for (int i = 0; i < 4; ++i) {
            int v = q[i] + sh;
            r[i] = (v >= 0 ? v / 2 : -((-v + 1) / 2));  // floor division
        }
        return r;
    };
    auto h1 = halve(q1);
    auto h2 = halve(q2);
    return std::pair{SpehParams(j1.line, h1[0], h1[1], h1[2], h1[3]),
                     SpehParams(j2.line, h2[0], h2[1], h2[2], h2[3])};
}

}  // namespace multiseg
