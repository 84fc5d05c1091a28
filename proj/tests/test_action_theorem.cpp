#include <random>

#include "doctest.h"
#include "torelli/action.hpp"
#include "torelli/theorem.hpp"

using namespace torelli;

namespace {

HomologyClass random_class(int g, std::mt19937& rng) {
  std::uniform_int_distribution<long long> d(-3, 3);
  HomologyClass h = zero_class(g);
  for (int i = 0; i < 2 * g; ++i) h[i] = d(rng);
  return h;
}

TorelliWord random_torelli_word(const Catalog& cat, int len, std::mt19937& rng) {
  std::uniform_int_distribution<size_t> pick(0, cat.entries.size() - 1);
  std::bernoulli_distribution flip(0.5);
  TorelliWord w;
  for (int i = 0; i < len; ++i)
    w.push_back({cat.entries[pick(rng)].name, flip(rng) ? 1 : -1});
  return w;
}

}  // namespace

TEST_CASE("pinned pairing value for a genus-two pair") {
  FatGraph fg = FatGraph::canonical(3);
  Catalog cat = build_catalog(SurfaceSpec{3, true}, fg);
  HomologyClass h = 3 * basis_class(3, 3);  // 3 b_1
  CHECK(phi_eval(cat, {{"bp_x1_h23", 1}}, h) == 6);  // k=2, i(a_1, b_1)=1, coeff 3
  CHECK(phi_eval(cat, {{"bp_x1_h2", 1}}, h) == 3);
  CHECK(phi_eval(cat, {{"bp_x1_h2", -1}}, h) == -3);
}

TEST_CASE("separating twists never move the pairing") {
  FatGraph fg = FatGraph::canonical(3);
  Catalog cat = build_catalog(SurfaceSpec{3, true}, fg);
  std::mt19937 rng(2u);
  for (int t = 0; t < 20; ++t) {
    HomologyClass h = random_class(3, rng);
    if (h.is_zero()) continue;
    CHECK(phi_eval(cat, {{"sep_h1", 1}, {"sep_h12", -1}}, h) == 0);
    TorelliWord w = random_torelli_word(cat, 3, rng);
    TorelliWord padded = w;
    padded.push_back({"sep_h1", 1});
    CHECK(phi_eval(cat, padded, h) == phi_eval(cat, w, h));
  }
}

TEST_CASE("pairing is additive in the word and linear in the class") {
  FatGraph fg = FatGraph::canonical(3);
  Catalog cat = build_catalog(SurfaceSpec{3, true}, fg);
  std::mt19937 rng(4u);
  for (int t = 0; t < 50; ++t) {
    TorelliWord u = random_torelli_word(cat, 2, rng);
    TorelliWord v = random_torelli_word(cat, 3, rng);
    TorelliWord uv = u;
    uv.insert(uv.end(), v.begin(), v.end());
    HomologyClass h = random_class(3, rng), k = random_class(3, rng);
    if (h.is_zero() || k.is_zero() || (h + k).is_zero()) continue;
    CHECK(phi_eval(cat, uv, h) == phi_eval(cat, u, h) + phi_eval(cat, v, h));
    CHECK(phi_eval(cat, u, h + k) == phi_eval(cat, u, h) + phi_eval(cat, u, k));
    CHECK(phi_eval(cat, u, 5 * h) == 5 * phi_eval(cat, u, h));
    // inverse word negates
    TorelliWord ui;
    for (auto it = u.rbegin(); it != u.rend(); ++it) ui.push_back({it->gen, -it->exp});
    CHECK(phi_eval(cat, ui, h) == -phi_eval(cat, u, h));
  }
}

TEST_CASE("the cohomology form of the pairing evaluates pointwise") {
  FatGraph fg = FatGraph::canonical(3);
  Catalog cat = build_catalog(SurfaceSpec{3, true}, fg);
  std::mt19937 rng(6u);
  for (int t = 0; t < 20; ++t) {
    TorelliWord w = random_torelli_word(cat, 3, rng);
    CohomologyClass c = phi_cohomology(cat, w);
    CHECK(c.modulus == 0);
    for (int tries = 0; tries < 5; ++tries) {
      HomologyClass h = random_class(3, rng);
      if (h.is_zero()) continue;
      CHECK(c.eval(h) == phi_eval(cat, w, h));
    }
  }
}

TEST_CASE("closed surfaces only see the pairing mod g-1") {
  FatGraph fg = FatGraph::canonical(4);
  Catalog cat = build_catalog(SurfaceSpec{4, false}, fg);
  HomologyClass h = basis_class(4, 4);  // b_1
  long long v = phi_eval(cat, {{"bp_x1_h23", 1}}, h);  // k=2 pair, raw value 2
  CHECK(v == mod_reduce(2, 3));
  CohomologyClass c = phi_cohomology(cat, {{"bp_x1_h23", 1}});
  CHECK(c.modulus == 3);
  CHECK(mod_reduce(c.eval(h) - 2, 3) == 0);
}

TEST_CASE("pairing against the zero class is rejected") {
  FatGraph fg = FatGraph::canonical(3);
  Catalog cat = build_catalog(SurfaceSpec{3, true}, fg);
  CHECK_THROWS(phi_eval(cat, {{"bp_x1_h2", 1}}, zero_class(3)));
}

TEST_CASE("short exhaustive sweeps reproduce their frozen counts") {
  SweepOptions opt;
  opt.max_len = 1;
  SweepResult r = verify_theorem_sweep(SurfaceSpec{3, true}, opt);
  INFO(r.first_failure);
  CHECK(r.ok);
  CHECK(r.words == 13);  // identity + 6 generators +-1
  CHECK(r.automorphisms == 13);
  CHECK(r.cases == 77);
  CHECK(r.excluded == 1);

  opt.max_len = 2;
  r = verify_theorem_sweep(SurfaceSpec{3, true}, opt);
  INFO(r.first_failure);
  CHECK(r.ok);
  CHECK(r.words == 157);
  CHECK(r.automorphisms == 129);  // inverse pairs collapse
  CHECK(r.cases == 773);
  CHECK(r.excluded == 1);
}

TEST_CASE("the closed sweep scores every basis class mod 2g-2") {
  SweepOptions opt;
  opt.max_len = 2;
  SweepResult r = verify_theorem_sweep(SurfaceSpec{4, false}, opt);
  INFO(r.first_failure);
  CHECK(r.ok);
  CHECK(r.words == 157);
  CHECK(r.automorphisms == 129);
  CHECK(r.cases == 1031);  // 8 basis classes per scored map
  CHECK(r.excluded == 1);
}
