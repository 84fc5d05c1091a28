#include "torelli/geom.hpp"

#include <cassert>
#include <stdexcept>

namespace torelli {

namespace {

using i128 = __int128;

i128 det3(const CirclePt& p, const CirclePt& q, const CirclePt& r) {
  i128 a = p.X, b = p.Y, c = p.W;
  i128 d = q.X, e = q.Y, f = q.W;
  i128 g = r.X, h = r.Y, i = r.W;
  return a * (e * i - f * h) - b * (d * i - f * g) + c * (d * h - e * g);
}

int sgn(i128 v) { return v > 0 ? 1 : v < 0 ? -1 : 0; }

}  // namespace

CirclePt circle_point(int rank, int npoints) {
  if (rank < 0 || rank >= npoints || npoints > kMaxCirclePoints)
    throw std::invalid_argument("circle_point: rank/npoints out of range");
  long long t = rank - npoints / 2;  // tan(theta/2); increasing t sweeps ccw
  return {1 - t * t, 2 * t, 1 + t * t};
}

int orient(const CirclePt& p, const CirclePt& q, const CirclePt& r) {
  // weights are positive, so the homogeneous determinant has the affine sign
  return sgn(det3(p, q, r));
}

Dir direction(const CirclePt& from, const CirclePt& to) {
  return {to.X * from.W - from.X * to.W, to.Y * from.W - from.Y * to.W};
}

namespace {
int half_of(const Dir& d) {
  assert(d.dx != 0 || d.dy != 0);
  return (d.dy > 0 || (d.dy == 0 && d.dx > 0)) ? 0 : 1;
}
}  // namespace

bool dir_less(const Dir& a, const Dir& b) {
  int ha = half_of(a), hb = half_of(b);
  if (ha != hb) return ha < hb;
  return (i128)a.dx * b.dy - (i128)a.dy * b.dx > 0;
}

bool dir_equal(const Dir& a, const Dir& b) {
  return (i128)a.dx * b.dy - (i128)a.dy * b.dx == 0 && (i128)a.dx * b.dx + (i128)a.dy * b.dy > 0;
}

ChordParam cross_param(const CirclePt& a, const CirclePt& b, const CirclePt& p, const CirclePt& q) {
  i128 num = (i128)b.W * det3(a, p, q);
  i128 den = det3(a, b, q) * (i128)p.W - det3(a, b, p) * (i128)q.W;
  if (den == 0) throw std::logic_error("cross_param: parallel chords");
  if (den < 0) {
    num = -num;
    den = -den;
  }
  return {num, den};
}

bool param_less(const ChordParam& s, const ChordParam& t) { return s.num * t.den < t.num * s.den; }

bool param_equal(const ChordParam& s, const ChordParam& t) { return s.num * t.den == t.num * s.den; }

}  // namespace torelli
