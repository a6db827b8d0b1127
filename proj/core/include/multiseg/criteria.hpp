#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "multiseg/order.hpp"
#include "multiseg/speh.hpp"

namespace multiseg {

enum class Status { Reducible, Irreducible, Unknown };

std::string to_string(Status s);

/// Outcome of a reducibility test plus structured evidence: which clause
/// fired and its witnesses. Unknown is legal only for the one-directional
/// general-multisegment certificates (rc_check, badulescu_check).
struct Verdict {
    Status status = Status::Unknown;
    std::string criterion;  // clause identifier, e.g. "strong-dominance-12"
    std::string evidence;   // human-readable witness

    std::string to_json() const;
};

/// Some segment of a and some segment of b on the same line are juxtaposed
/// (disjoint with union a segment).
bool is_contact(const Multisegment& a, const Multisegment& b);

/// a contacts b^t and a^t contacts b.
bool is_crossed(const Multisegment& a, const Multisegment& b);

/// Closed-form contact test for two Speh quadruples on the same line:
/// [A1,C1] meets [B2+1,D2+1] or [B1+1,D1+1] meets [A2,C2]. Equals
/// is_contact on the instantiated multisegments.
bool contact_speh(const SpehParams& p1, const SpehParams& p2);

/// Reducible when (a+b)^t != a^t + b^t, with the differing dual segment as
/// witness; otherwise Unknown (additivity alone does not decide).
Verdict rc_check(const Multisegment& a, const Multisegment& b);

/// When dual additivity holds, scans the strict downset of a+b: if no c
/// there satisfies c^t < (a+b)^t, the product is irreducible. Budget
/// exhaustion degrades to Unknown, never a wrong verdict.
Verdict badulescu_check(const Multisegment& a, const Multisegment& b,
                        std::size_t limit = kDefaultDownsetBudget);

/// Componentwise strict inequality of the quadruples.
bool strong_less(const SpehParams& p1, const SpehParams& p2);

/// The quadruple form of the Speh-pair criterion: reducible iff
/// [A1,D1] u [A2,D2] is a segment and one quadruple strongly dominates
/// the other. Never Unknown.
Verdict speh_reducible_thm72(const SpehParams& p1, const SpehParams& p2);

/// The support form: reducible iff the underlying support segments are
/// linked and the instantiated multisegments are crossed. Never Unknown.
Verdict speh_reducible_thm71(const SpehParams& p1, const SpehParams& p2);

/// A product of Speh representations is irreducible iff every pair is.
Verdict product_irreducible(const std::vector<SpehParams>& ps);

/// J(delta,a,b) parameters in doubled-integer encoding: t = t2/2,
/// a = a2/2, b = b2/2 with b - a a nonnegative integer.
struct MWParams {
    Line line;
    int t2 = 0;
    int a2 = 0;
    int b2 = 0;

    MWParams() = default;
    MWParams(Line l, int t2_, int a2_, int b2_);
    MWParams(int t2_, int a2_, int b2_) : MWParams(Line{}, t2_, a2_, b2_) {}
};

/// (a-t, a+t, b-t, b+t) halved when integral; nullopt when the quadruple
/// lives on the half-shifted lattice.
std::optional<SpehParams> mw_to_speh(const MWParams& j);

/// The doubled quadruple before halving, as {A2,B2,C2,D2}.
std::array<int, 4> mw_doubled_quad(const MWParams& j);

/// The linking condition on J-parameters, evaluated in doubled integer
/// arithmetic: same line, integral exponent difference, and the
/// window/dominance inequalities in one direction or the other.
bool mw_linked(const MWParams& j1, const MWParams& j2);

/// Joint shift onto the integer lattice, when the exponent difference is
/// integral: both quadruples shifted by the same half-integer. nullopt
/// when the difference is non-integral.
std::optional<std::pair<SpehParams, SpehParams>> mw_aligned_speh_pair(const MWParams& j1,
                                                                      const MWParams& j2);

}  // namespace multiseg
