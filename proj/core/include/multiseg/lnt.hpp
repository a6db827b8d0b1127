#pragma once

#include <set>
#include <vector>

#include "multiseg/criteria.hpp"

namespace multiseg {

/// Weakly decreasing positive parts, nonempty.
struct Partition {
    std::vector<int> parts;

    explicit Partition(std::vector<int> p);
    int rows() const { return static_cast<int>(parts.size()); }
};

/// A set of integers of the form <-inf, ray_max] union a finite set of
/// larger integers. Canonical: ray-adjacent extras are absorbed into the
/// ray, so set equality is structural equality.
struct RaySet {
    int ray_max = 0;
    std::set<int> extra;

    RaySet(int ray, std::set<int> ex);
    bool contains(int x) const { return x <= ray_max || extra.count(x) > 0; }
    bool operator==(const RaySet&) const = default;
};

/// Ladder rows [x-i+1, x-i+alpha_i] for i = 1..r.
Multisegment ladder_multisegment(const Partition& alpha, int x, const Line& line = Line{});

/// <-inf, x-r] union { x-i+alpha_i+1 : i = 1..r }, normalized.
RaySet i_set(const Partition& alpha, int x);

/// <-inf, A-1] union [B+1, D+1]; the constant-partition special case.
RaySet i_set_speh(const SpehParams& p);

/// Exact set difference s1 \ s2 (finite for two ray sets), sorted.
std::vector<int> rayset_diff(const RaySet& s1, const RaySet& s2);

/// Smallest segment containing a finite set; nullopt for the empty set.
std::optional<std::pair<int, int>> hull(const std::vector<int>& xs);

/// The three-case ladder reducibility test, interval-hull form. Never
/// Unknown. `same_line` false short-circuits to Irreducible.
Verdict lnt_reducible(const Partition& alpha, int x, const Partition& beta, int y,
                      bool same_line = true);

/// The footnote form of the same test (exists i<j<k, resp. the interleaved
/// quadruple for x == y). Must agree with lnt_reducible.
Verdict lnt_reducible_footnote(const Partition& alpha, int x, const Partition& beta, int y,
                               bool same_line = true);

}  // namespace multiseg
