#pragma once

#include <array>
#include <string>
#include <vector>

#include "torelli/surface.hpp"

namespace torelli {

// Finite CW model of a surface (or of any small complex used by the tame-set
// fixtures).  Faces are stored as cyclic lists of signed 1-based edge ids:
// +e traverses edge e-1 tail->head with the face on its left, -e the reverse.
// `boundary` lists the signed edges of the surface boundary (bordered case);
// those directions are exactly the ones no face covers.
struct CellComplex {
  int nverts = 0;
  std::vector<std::array<int, 2>> edges;  // tail, head
  std::vector<std::vector<int>> faces;
  std::vector<int> boundary;

  int nedges() const { return static_cast<int>(edges.size()); }
  int nfaces() const { return static_cast<int>(faces.size()); }
  long long chi() const { return (long long)nverts - nedges() + nfaces(); }

  int dir_tail(int s) const { int e = std::abs(s) - 1; return s > 0 ? edges[e][0] : edges[e][1]; }
  int dir_head(int s) const { int e = std::abs(s) - 1; return s > 0 ? edges[e][1] : edges[e][0]; }

  std::vector<char> boundary_edge_flags() const;
  std::vector<char> boundary_vertex_flags() const;

  // Face cycles close up; every edge is covered twice by faces, or once by a
  // face and once by the boundary list, each direction at most once.
  void validate() const;
  void validate_surface(const SurfaceSpec& spec) const;  // plus the chi count
};

// A union of open cells of a fixed complex.
struct TameSet {
  std::vector<char> v, e, f;

  static TameSet empty_for(const CellComplex& cx);
  static TameSet all_of(const CellComplex& cx);
  static TameSet interior_of(const CellComplex& cx);  // drop boundary-listed cells

  TameSet unite(const TameSet& o) const;
  TameSet intersect(const TameSet& o) const;
  TameSet complement_in(const CellComplex& cx) const;
  bool disjoint_from(const TameSet& o) const;
  long long cell_count() const;
};

// Integer-valued function constant on open cells (absent = 0).
struct ConstructibleFunction {
  std::vector<long long> v, e, f;

  static ConstructibleFunction zero_for(const CellComplex& cx);
  static ConstructibleFunction indicator(const TameSet& u);

  ConstructibleFunction& operator+=(const ConstructibleFunction& o);
  ConstructibleFunction& operator*=(long long k);
  bool is_zero() const;
};

ConstructibleFunction operator+(ConstructibleFunction a, const ConstructibleFunction& b);
ConstructibleFunction operator*(long long k, ConstructibleFunction a);

// Compactly-supported Euler characteristic: alternating count of open cells.
long long euler_char(const TameSet& u);
// Integral against d(chi): sum over cells of value * (-1)^dim.
long long euler_integral(const ConstructibleFunction& ff);
// -1/2 of the integral; rejects odd integrals (malformed pre-image data).
long long signed_genus(const ConstructibleFunction& ff);

// One round of subdivision: every edge gains a midpoint, every face is
// starred from an interior point.  Parent maps say which open cell of the
// original each refined cell sits inside.
struct Refined {
  CellComplex cx;
  // parent of each refined cell, encoded as (dim, index) of the original
  std::vector<std::array<int, 2>> vparent, eparent, fparent;
};
Refined refine(const CellComplex& cx);
ConstructibleFunction transfer(const Refined& r, const ConstructibleFunction& ff);
TameSet transfer(const Refined& r, const TameSet& u);

// Canonical one-face model: a 4g-gon, plus a boundary loop when bordered.
CellComplex canonical_surface_complex(const SurfaceSpec& spec);
// Tiny fixture complexes.
CellComplex point_complex();
CellComplex interval_complex();
// Compact genus-1 piece with two boundary circles, plus its open interior.
struct PieceFixture { CellComplex cx; TameSet interior; };
PieceFixture genus1_two_boundary_piece();

}  // namespace torelli
