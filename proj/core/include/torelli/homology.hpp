#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "torelli/surface.hpp"

namespace torelli {

// Element of H_1 of the surface in the ordered basis (a_1..a_g, b_1..b_g).
// The intersection form is fixed once and for all by i(a_k, b_k) = +1 and
// all other basis pairings zero.
struct HomologyClass {
  std::vector<long long> c;

  HomologyClass() = default;
  explicit HomologyClass(std::vector<long long> v) : c(std::move(v)) {}

  int genus() const { return static_cast<int>(c.size()) / 2; }
  int rank() const { return static_cast<int>(c.size()); }
  bool is_zero() const;

  long long& operator[](int i) { return c[i]; }
  long long operator[](int i) const { return c[i]; }
  bool operator==(const HomologyClass&) const = default;

  HomologyClass& operator+=(const HomologyClass& o);
  HomologyClass& operator-=(const HomologyClass& o);
  HomologyClass& operator*=(long long k);
};

HomologyClass operator+(HomologyClass a, const HomologyClass& b);
HomologyClass operator-(HomologyClass a, const HomologyClass& b);
HomologyClass operator*(long long k, HomologyClass a);
HomologyClass operator-(HomologyClass a);

HomologyClass zero_class(int g);
HomologyClass basis_class(int g, int i);  // 0-based: 0..g-1 -> a_{i+1}, g..2g-1 -> b_{i-g+1}
std::string basis_name(int g, int i);     // "a1".."ag","b1".."bg"
std::string class_str(const HomologyClass& h);

long long intersection_pairing(const HomologyClass& x, const HomologyClass& y);
bool is_primitive(const HomologyClass& h);

// ---- third exterior power -------------------------------------------------

struct Tri {
  int i, j, k;  // strictly increasing, 0-based basis indices
  auto operator<=>(const Tri&) const = default;
};

// Integer element of the third exterior power of H_1.  Triples are kept
// sorted; assembling from an unsorted triple applies the permutation sign,
// and a repeated index contributes nothing.
struct TriWedge {
  std::map<Tri, long long> coeff;

  void add(int i, int j, int k, long long v);
  bool is_zero() const { return coeff.empty(); }
  TriWedge& operator+=(const TriWedge& o);
  TriWedge& operator*=(long long k);
  bool operator==(const TriWedge&) const = default;
};

TriWedge operator+(TriWedge a, const TriWedge& b);
TriWedge operator*(long long k, TriWedge a);

TriWedge wedge3(const HomologyClass& u, const HomologyClass& v, const HomologyClass& w);

// Value of the Johnson homomorphism on a bounding-pair map T_a T_b^{-1}
// whose pair cuts off a genus-k piece spanned by the symplectic family
// (x_1,y_1)..(x_k,y_k): the wedge [a] ^ sum x_i ^ y_i.
TriWedge johnson_bp(const HomologyClass& a,
                    const std::vector<std::pair<HomologyClass, HomologyClass>>& span);

// Contraction of a 3-wedge back into H_1:
//   C(a^b^c) = 2[ i(a,b) c + i(b,c) a + i(c,a) b ]
// extended linearly.  The factor 2 and the cyclic signs are pinned by the
// three-route equality suite on the generator values.
HomologyClass contract(const TriWedge& w, int g);

// ---- cohomology ------------------------------------------------------------

// A class in H^1 stored by its values on the basis (dual coordinates).
// modulus = 0 means exact integers; otherwise coefficients live mod modulus.
struct CohomologyClass {
  std::vector<long long> dual;
  long long modulus = 0;

  long long eval(const HomologyClass& h) const;
  CohomologyClass reduced() const;  // canonical representative coords in [0, m)
  bool equal_mod(const CohomologyClass& o) const;
};

CohomologyClass zero_cohomology(int g, long long modulus = 0);
// Duality H_1 -> H^1 by c |-> i(c, .).
CohomologyClass dual_of(const HomologyClass& c, long long modulus = 0);
// Same class viewed mod 2g-2 (closed-surface winding ambiguity).
CohomologyClass closed_surface_reduce(const CohomologyClass& e, int g);

// One bounding-pair factor of a Torelli word, with its exponent.
struct BoundingPairDatum {
  int sign;  // +1 or -1
  HomologyClass a_class;
  std::vector<std::pair<HomologyClass, HomologyClass>> span;
};

// Chillingworth class of a product of bounding-pair maps, computed by
// contracting the Johnson value and dualising via the intersection form.
CohomologyClass chillingworth_from_johnson(const std::vector<BoundingPairDatum>& factors,
                                           const SurfaceSpec& spec);

// ---- small integer matrices (abelianized actions) --------------------------

using IntMat = std::vector<std::vector<long long>>;

IntMat identity_mat(int n);
bool is_identity_mat(const IntMat& m);
IntMat mat_mul(const IntMat& a, const IntMat& b);
HomologyClass mat_apply(const IntMat& m, const HomologyClass& h);
bool is_symplectic(const IntMat& m);  // preserves the fixed intersection form

long long mod_reduce(long long v, long long m);  // canonical residue, m = 0 passes through

}  // namespace torelli
