#include <random>

#include "doctest.h"
#include "torelli/homology.hpp"

using namespace torelli;

namespace {

HomologyClass random_class(int g, std::mt19937& rng) {
  std::vector<long long> c(2 * g);
  for (auto& x : c) x = static_cast<long long>(rng() % 11) - 5;
  return HomologyClass(std::move(c));
}

// coefficient of e_i ^ e_j ^ e_k in u ^ v ^ w, straight 3x3 determinant
long long wedge_det(const HomologyClass& u, const HomologyClass& v, const HomologyClass& w,
                    int i, int j, int k) {
  long long m[3][3] = {{u[i], v[i], w[i]}, {u[j], v[j], w[j]}, {u[k], v[k], w[k]}};
  return m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1]) -
         m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0]) +
         m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0]);
}

}  // namespace

TEST_CASE("intersection pairing on the symplectic basis") {
  int g = 3;
  for (int i = 0; i < g; ++i)
    for (int j = 0; j < g; ++j) {
      CHECK(intersection_pairing(basis_class(g, i), basis_class(g, g + j)) == (i == j ? 1 : 0));
      CHECK(intersection_pairing(basis_class(g, i), basis_class(g, j)) == 0);
      CHECK(intersection_pairing(basis_class(g, g + i), basis_class(g, g + j)) == 0);
    }
  CHECK(intersection_pairing(HomologyClass({1, 0, 1, 0, 0, 0}), HomologyClass({0, 0, 0, 1, 0, 1})) ==
        2);
}

TEST_CASE("intersection pairing is bilinear and antisymmetric") {
  std::mt19937 rng(11);
  for (int t = 0; t < 40; ++t) {
    HomologyClass x = random_class(3, rng), y = random_class(3, rng), z = random_class(3, rng);
    CHECK(intersection_pairing(x, y) == -intersection_pairing(y, x));
    CHECK(intersection_pairing(x + z, y) == intersection_pairing(x, y) + intersection_pairing(z, y));
    CHECK(intersection_pairing(3 * x, y) == 3 * intersection_pairing(x, y));
  }
}

TEST_CASE("wedge assembly is alternating") {
  TriWedge w;
  w.add(0, 1, 4, 1);
  TriWedge swapped;
  swapped.add(1, 0, 4, -1);
  CHECK(w == swapped);
  TriWedge cyc;
  cyc.add(4, 0, 1, 1);  // even permutation
  CHECK(w == cyc);
  TriWedge degenerate;
  degenerate.add(2, 2, 5, 7);
  CHECK(degenerate.is_zero());
  w.add(0, 1, 4, -1);
  CHECK(w.is_zero());
}

TEST_CASE("triple wedge agrees with the determinant expansion") {
  std::mt19937 rng(23);
  for (int t = 0; t < 25; ++t) {
    HomologyClass u = random_class(3, rng), v = random_class(3, rng), w = random_class(3, rng);
    TriWedge ww = wedge3(u, v, w);
    for (int i = 0; i < 6; ++i)
      for (int j = i + 1; j < 6; ++j)
        for (int k = j + 1; k < 6; ++k) {
          auto it = ww.coeff.find(Tri{i, j, k});
          long long got = it == ww.coeff.end() ? 0 : it->second;
          CHECK(got == wedge_det(u, v, w, i, j, k));
        }
  }
}

TEST_CASE("contraction on pinned wedges") {
  int g = 3;
  // a1 ^ b1 ^ a2 -> 2 a2
  TriWedge w1 = wedge3(basis_class(g, 0), basis_class(g, 3), basis_class(g, 1));
  CHECK(contract(w1, g) == 2 * basis_class(g, 1));
  // a2 ^ a3 ^ b3 -> 2 a2
  TriWedge w2 = wedge3(basis_class(g, 1), basis_class(g, 2), basis_class(g, 5));
  CHECK(contract(w2, g) == 2 * basis_class(g, 1));
}

TEST_CASE("contraction is linear") {
  std::mt19937 rng(37);
  for (int t = 0; t < 20; ++t) {
    HomologyClass u = random_class(3, rng), v = random_class(3, rng), w = random_class(3, rng);
    HomologyClass p = random_class(3, rng), q = random_class(3, rng), r = random_class(3, rng);
    TriWedge a = wedge3(u, v, w), b = wedge3(p, q, r);
    CHECK(contract(a + b, 3) == contract(a, 3) + contract(b, 3));
    CHECK(contract(5 * a, 3) == 5 * contract(a, 3));
  }
}

TEST_CASE("bounding-pair wedge for one handle") {
  int g = 3;
  std::vector<std::pair<HomologyClass, HomologyClass>> span = {
      {basis_class(g, 1), basis_class(g, 4)}};  // (a2, b2)
  TriWedge t = johnson_bp(basis_class(g, 0), span);
  TriWedge expect;
  expect.add(0, 1, 4, 1);  // a1 ^ a2 ^ b2
  CHECK(t == expect);
}

TEST_CASE("duality pairs like the intersection form") {
  std::mt19937 rng(41);
  for (int t = 0; t < 30; ++t) {
    HomologyClass c = random_class(3, rng), h = random_class(3, rng);
    CHECK(dual_of(c).eval(h) == intersection_pairing(c, h));
  }
}

TEST_CASE("johnson route matches the closed form off the spanned handles") {
  int g = 4;
  for (int k = 1; k <= 3; ++k) {
    std::vector<int> handles;
    for (int h = 2; h <= 1 + k; ++h) handles.push_back(h);
    std::vector<std::pair<HomologyClass, HomologyClass>> span;
    for (int h : handles) span.emplace_back(basis_class(g, h - 1), basis_class(g, g + h - 1));
    BoundingPairDatum d{+1, basis_class(g, 0), span};
    CohomologyClass e = chillingworth_from_johnson({d}, SurfaceSpec{g, true});
    for (int j = 0; j < 2 * g; ++j)
      CHECK(e.dual[j] == 2 * k * intersection_pairing(basis_class(g, 0), basis_class(g, j)));
  }
}

TEST_CASE("modular reduction gives canonical residues") {
  CHECK(mod_reduce(7, 4) == 3);
  CHECK(mod_reduce(-1, 4) == 3);
  CHECK(mod_reduce(-8, 4) == 0);
  CHECK(mod_reduce(5, 0) == 5);  // exact case passes through
  CohomologyClass a{{3, -1}, 4}, b{{7, 7}, 4};
  CHECK(a.equal_mod(b));
  CHECK(a.reduced().dual == std::vector<long long>{3, 3});
}

TEST_CASE("closed-surface reduction folds the modulus in") {
  CohomologyClass e{{5, -3, 2, 0, 0, 0}, 0};
  CohomologyClass r = closed_surface_reduce(e, 3);
  CHECK(r.modulus == 4);
  CHECK(r.dual == std::vector<long long>{1, 1, 2, 0, 0, 0});
}
