#include "multiseg/speh.hpp"

namespace multiseg {

SpehParams::SpehParams(Line l, int a, int b, int c, int d)
    : line(std::move(l)), A(a), B(b), C(c), D(d) {
    validate_line(line);
    if (A > B || A > C || A + D != B + C)
        throw std::invalid_argument("invalid Speh quadruple");
}

Multisegment speh_multisegment(const SpehParams& p) {
    std::vector<Segment> segs;
    segs.reserve(p.segment_count());
    for (int i = 0; i <= p.C - p.A; ++i) segs.emplace_back(p.line, p.A + i, p.B + i);
    return Multisegment(std::move(segs));
}

Multisegment a_nd(int n, int d, const Line& line) {
    if (n < 1 || d < 1) throw std::invalid_argument("a(n,d) requires n,d >= 1");
    return speh_multisegment(SpehParams(line, 0, d - 1, n - 1, n + d - 2));
}

}  // namespace multiseg
