#pragma once

#include <cstdint>

namespace torelli {

// Exact rational point on the unit circle, stored homogeneously (X/W, Y/W)
// with W > 0.  Slot ranks map to strictly counterclockwise points, so every
// incidence question about chords of the disc has an integer answer.
struct CirclePt {
  long long X, Y, W;
};

inline constexpr int kMaxCirclePoints = 500;  // keeps all predicates inside __int128

CirclePt circle_point(int rank, int npoints);

// sign of the affine orientation of the triangle (p, q, r); +1 when ccw
int orient(const CirclePt& p, const CirclePt& q, const CirclePt& r);

// integer direction vector of the segment from -> to
struct Dir {
  long long dx, dy;
};
Dir direction(const CirclePt& from, const CirclePt& to);

// strict counterclockwise order of directions starting at the positive x-axis
bool dir_less(const Dir& a, const Dir& b);
bool dir_equal(const Dir& a, const Dir& b);

// Position of the intersection of chord P-Q with the directed chord A->B,
// as the exact parameter num/den (den > 0) along A->B.
struct ChordParam {
  __int128 num, den;
};
ChordParam cross_param(const CirclePt& a, const CirclePt& b, const CirclePt& p, const CirclePt& q);
bool param_less(const ChordParam& s, const ChordParam& t);
bool param_equal(const ChordParam& s, const ChordParam& t);

}  // namespace torelli
