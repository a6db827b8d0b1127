#pragma once

#include "multiseg/multisegment.hpp"

namespace multiseg {

/// Parameters of an essentially Speh representation: the staircase
/// multisegment ([A,B],[A+1,B+1],...,[C,D]) with A+D = B+C. It has
/// n = C-A+1 segments of length d = B-A+1.
struct SpehParams {
    Line line;
    int A = 0, B = 0, C = 0, D = 0;

    SpehParams() = default;
    SpehParams(Line l, int a, int b, int c, int d);
    SpehParams(int a, int b, int c, int d) : SpehParams(Line{}, a, b, c, d) {}

    int segment_count() const { return C - A + 1; }
    int segment_length() const { return B - A + 1; }
};

/// The staircase instantiation [A+i, B+i] for i = 0..C-A.
Multisegment speh_multisegment(const SpehParams& p);

/// a(n,d): n segments of length d, shift-normalized so the minimal
/// beginning is 0. Equals speh_multisegment({0, d-1, n-1, n+d-2}).
Multisegment a_nd(int n, int d, const Line& line = Line{});

}  // namespace multiseg
