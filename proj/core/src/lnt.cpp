#include "multiseg/lnt.hpp"

#include <algorithm>
#include <sstream>

namespace multiseg {

Partition::Partition(std::vector<int> p) : parts(std::move(p)) {
    if (parts.empty()) throw std::invalid_argument("partition must be nonempty");
    for (std::size_t i = 0; i < parts.size(); ++i) {
        if (parts[i] < 1) throw std::invalid_argument("partition parts must be >= 1");
        if (i > 0 && parts[i] > parts[i - 1])
            throw std::invalid_argument("partition parts must be weakly decreasing");
    }
}

RaySet::RaySet(int ray, std::set<int> ex) : ray_max(ray), extra(std::move(ex)) {
    for (auto it = extra.begin(); it != extra.end();) {
        if (*it <= ray_max) {
            it = extra.erase(it);
        } else if (*it == ray_max + 1) {
            ray_max = *it;
            it = extra.erase(it);
        } else {
            ++it;
        }
    }
}

Multisegment ladder_multisegment(const Partition& alpha, int x, const Line& line) {
    std::vector<Segment> segs;
    for (int i = 1; i <= alpha.rows(); ++i)
        segs.emplace_back(line, x - i + 1, x - i + alpha.parts[i - 1]);
    return Multisegment(std::move(segs));
}

RaySet i_set(const Partition& alpha, int x) {
    std::set<int> extra;
    for (int i = 1; i <= alpha.rows(); ++i) extra.insert(x - i + alpha.parts[i - 1] + 1);
    return RaySet(x - alpha.rows(), std::move(extra));
}

RaySet i_set_speh(const SpehParams& p) {
    std::set<int> extra;
    for (int v = p.B + 1; v <= p.D + 1; ++v) extra.insert(v);
    return RaySet(p.A - 1, std::move(extra));
}

std::vector<int> rayset_diff(const RaySet& s1, const RaySet& s2) {
    // everything at or below min(ray_max) lies in both sets
    int lo = std::min(s1.ray_max, s2.ray_max) + 1;
    int hi = std::max(s1.ray_max, s2.ray_max);
    for (int v : s1.extra) hi = std::max(hi, v);
    for (int v : s2.extra) hi = std::max(hi, v);
    std::vector<int> out;
    for (int x = lo; x <= hi; ++x)
        if (s1.contains(x) && !s2.contains(x)) out.push_back(x);
    return out;
}

std::optional<std::pair<int, int>> hull(const std::vector<int>& xs) {
    if (xs.empty()) return std::nullopt;
    auto [mn, mx] = std::minmax_element(xs.begin(), xs.end());
    return std::pair{*mn, *mx};
}

namespace {

bool hull_meets(const std::vector<int>& hull_side, const std::vector<int>& point_side) {
    auto h = hull(hull_side);
    if (!h) return false;
    return std::any_of(point_side.begin(), point_side.end(),
                       [&](int j) { return h->first <= j && j <= h->second; });
}

Verdict verdict_of(bool reducible, const std::string& clause, const std::vector<int>& d1,
                   const std::vector<int>& d2) {
    std::ostringstream ev;
    auto dump = [&ev](const char* name, const std::vector<int>& v) {
        ev << name << "={";
        for (std::size_t i = 0; i < v.size(); ++i) ev << (i ? "," : "") << v[i];
        ev << "}";
    };
    dump("I1\\I2", d1);
    ev << " ";
    dump("I2\\I1", d2);
    return {reducible ? Status::Reducible : Status::Irreducible, clause, ev.str()};
}

}  // namespace

Verdict lnt_reducible(const Partition& alpha, int x, const Partition& beta, int y,
                      bool same_line) {
    if (!same_line)
        return {Status::Irreducible, "different-lines", "factors on distinct cuspidal lines"};
    RaySet i1 = i_set(alpha, x), i2 = i_set(beta, y);
    std::vector<int> d1 = rayset_diff(i1, i2), d2 = rayset_diff(i2, i1);
    if (y < x) return verdict_of(hull_meets(d1, d2), "hull-case-y<x", d1, d2);
    if (x < y) return verdict_of(hull_meets(d2, d1), "hull-case-x<y", d1, d2);
    return verdict_of(hull_meets(d1, d2) && hull_meets(d2, d1), "hull-case-x=y", d1, d2);
}

Verdict lnt_reducible_footnote(const Partition& alpha, int x, const Partition& beta, int y,
                               bool same_line) {
    if (!same_line)
        return {Status::Irreducible, "different-lines", "factors on distinct cuspidal lines"};
    RaySet i1 = i_set(alpha, x), i2 = i_set(beta, y);
    std::vector<int> d1 = rayset_diff(i1, i2), d2 = rayset_diff(i2, i1);
    auto exists_ijk = [](const std::vector<int>& outer, const std::vector<int>& inner) {
        // i < j < k with i,k in outer, j in inner
        for (int i : outer)
            for (int k : outer)
                for (int j : inner)
                    if (i < j && j < k) return true;
        return false;
    };
    bool red;
    const char* clause;
    if (y < x) {
        red = exists_ijk(d1, d2);
        clause = "footnote-case-y<x";
    } else if (x < y) {
        red = exists_ijk(d2, d1);
        clause = "footnote-case-x<y";
    } else {
        red = false;
        for (int i : d1)
            for (int k : d1)
                for (int j : d2)
                    for (int l : d2)
                        if ((i < j && j < k && k < l) || (j < i && i < l && l < k)) red = true;
        clause = "footnote-case-x=y";
    }
    return verdict_of(red, clause, d1, d2);
}

}  // namespace multiseg
