// Acceptance gate: one line per criterion, nonzero exit when any fails.
// Each check is self-contained and enforces its own wall-clock budget.

#include <sys/wait.h>

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <functional>
#include <random>
#include <string>
#include <vector>

#include "torelli/action.hpp"
#include "torelli/instance.hpp"
#include "torelli/json_io.hpp"
#include "torelli/theorem.hpp"
#include "torelli/twist.hpp"

using namespace torelli;

#ifndef FIXTURE_DIR
#define FIXTURE_DIR "."
#endif

namespace {

std::string g_torelli_bin;  // CLI under test, from argv[1]

struct Checker {
  std::string detail;
  bool ok = true;
  void require(bool cond, const std::string& what) {
    if (!cond && ok) {
      ok = false;
      detail = what;
    }
  }
};

int run_criterion(int number, const std::string& title, double budget_sec,
                  const std::function<void(Checker&)>& body) {
  Checker c;
  auto t0 = std::chrono::steady_clock::now();
  try {
    body(c);
  } catch (const std::exception& e) {
    c.require(false, std::string("exception: ") + e.what());
  }
  double dt = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  if (budget_sec > 0 && dt > budget_sec)
    c.require(false, "over budget: " + std::to_string(dt) + "s > " + std::to_string(budget_sec) + "s");
  std::printf("[%s] %d. %s (%.2fs)%s%s\n", c.ok ? "PASS" : "FAIL", number, title.c_str(), dt,
              c.ok ? "" : " -- ", c.ok ? "" : c.detail.c_str());
  std::fflush(stdout);
  return c.ok ? 0 : 1;
}

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
  for (int i = 0; i < len; ++i) w.push_back({cat.entries[pick(rng)].name, flip(rng) ? 1 : -1});
  return w;
}

// 1. exact generator values on every catalog, every basis class
void crit_generator_values(Checker& c) {
  for (int g : {3, 4, 5}) {
    FatGraph fg = FatGraph::canonical(g);
    Catalog cat = build_catalog(SurfaceSpec{g, true}, fg);
    for (const CatalogEntry& e : cat.entries) {
      long long k = static_cast<long long>(e.handles.size());
      for (int j = 0; j < 2 * g; ++j) {
        HomologyClass h = basis_class(g, j);
        long long got = phi_eval(cat, {{e.name, 1}}, h);
        long long want = e.separating ? 0 : k * intersection_pairing(e.a_class, h);
        c.require(got == want, "g=" + std::to_string(g) + " " + e.name + " against " +
                                   basis_name(g, j) + ": " + std::to_string(got) +
                                   " != " + std::to_string(want));
      }
    }
  }
}

// 2. full three-route equality over all short words, bordered g=3
void crit_sweep_bordered(Checker& c) {
  SweepOptions opt;
  opt.max_len = 4;
  opt.threads = 0;
  SweepResult r = verify_theorem_sweep(SurfaceSpec{3, true}, opt);
  c.require(r.ok, r.first_failure);
  c.require(r.words == 22621, "unexpected word count " + std::to_string(r.words));
  c.require(r.excluded == 1, "calibration exclusions " + std::to_string(r.excluded));
  c.require(r.cases >= 100, "too few scored cases " + std::to_string(r.cases));
}

// 3. the same equality mod 2g-2 on closed surfaces
void crit_sweep_closed(Checker& c) {
  SweepOptions opt;
  opt.max_len = 3;
  opt.threads = 0;
  for (int g : {3, 4}) {
    SweepResult r = verify_theorem_sweep(SurfaceSpec{g, false}, opt);
    c.require(r.ok, "g=" + std::to_string(g) + ": " + r.first_failure);
    c.require(r.cases >= 100, "g=" + std::to_string(g) + ": too few cases");
    c.require(r.excluded == 1, "g=" + std::to_string(g) + ": exclusions");
  }
}

// 4. path independence of signed length, with the euler-integral identity
void crit_path_independence(Checker& c) {
  DeskInstance open_di = build_desk_instance(SurfaceSpec{3, true});
  PathReport r = check_path_independence(open_di, 24, 4);
  c.require(r.ok, "bordered: " + r.first_failure);
  c.require(r.pairs >= 20, "bordered: only " + std::to_string(r.pairs) + " pairs");
  c.require(r.multipath >= 10, "bordered: only " + std::to_string(r.multipath) + " multipath pairs");

  DeskInstance closed_di = build_desk_instance(SurfaceSpec{3, false});
  r = check_path_independence(closed_di, 24, 4);
  c.require(r.ok, "closed: " + r.first_failure);
  c.require(r.pairs >= 20, "closed: only " + std::to_string(r.pairs) + " pairs");
}

// 5. orbit growth d(v, f^n v) = n d(v, f v) across movers, bases, powers
void crit_orbit_growth(Checker& c) {
  DeskInstance di = build_desk_instance(SurfaceSpec{3, true});
  c.require(di.movers.size() >= 3 && di.bases.size() >= 3 && di.max_power >= 5,
            "instance too small");
  OrbitReport r = check_orbit_growth(di);
  c.require(r.ok, r.first_failure);
  c.require(r.checks >= 45, "only " + std::to_string(r.checks) + " checks");
}

// 6. algebraic laws of the pairing on 500 random word/class pairs
void crit_pairing_laws(Checker& c) {
  std::mt19937 rng(2026u);
  int done = 0;
  for (bool bordered : {true, false}) {
    SurfaceSpec spec{3, bordered};
    FatGraph fg = FatGraph::canonical(3);
    Catalog cat = build_catalog(spec, fg);
    long long mod = spec.modulus();
    for (int t = 0; t < 250; ++t) {
      TorelliWord u = random_torelli_word(cat, 3, rng);
      TorelliWord v = random_torelli_word(cat, 2, rng);
      TorelliWord uv = u;
      uv.insert(uv.end(), v.begin(), v.end());
      HomologyClass h = random_class(3, rng), k = random_class(3, rng);
      if (h.is_zero() || k.is_zero() || (h + k).is_zero()) {
        --t;
        continue;
      }
      std::uniform_int_distribution<long long> lam(1, 4);
      long long l = lam(rng);
      bool add_w = mod_reduce(phi_eval(cat, uv, h) - phi_eval(cat, u, h) - phi_eval(cat, v, h),
                              mod) == 0;
      bool add_h = mod_reduce(phi_eval(cat, u, h + k) - phi_eval(cat, u, h) - phi_eval(cat, u, k),
                              mod) == 0;
      bool scale = mod_reduce(phi_eval(cat, u, l * h) - l * phi_eval(cat, u, h), mod) == 0;
      c.require(add_w, "word additivity failed");
      c.require(add_h, "class additivity failed");
      c.require(scale, "scaling failed");
      ++done;
    }
  }
  c.require(done == 500, "wrong trial count");
}

// 7. euler calculus: fixtures, representation independence, subdivision
void crit_euler(Checker& c) {
  c.require(euler_char(TameSet::all_of(point_complex())) == 1, "point");
  CellComplex iv = interval_complex();
  TameSet open_edge = TameSet::empty_for(iv);
  open_edge.e[0] = 1;
  c.require(euler_char(open_edge) == -1, "open edge");
  c.require(euler_char(TameSet::all_of(canonical_surface_complex(SurfaceSpec{3, false}))) == -4,
            "closed genus-3 surface");
  PieceFixture piece = genus1_two_boundary_piece();
  c.require(euler_char(piece.interior) == -2, "genus-1 two-boundary piece");

  CellComplex cx = canonical_surface_complex(SurfaceSpec{3, true});
  std::mt19937 rng(17u);
  std::uniform_int_distribution<long long> coeff(-3, 3);
  std::bernoulli_distribution coin(0.5);
  auto random_tame = [&]() {
    TameSet u = TameSet::empty_for(cx);
    for (auto& x : u.v) x = coin(rng);
    for (auto& x : u.e) x = coin(rng);
    for (auto& x : u.f) x = coin(rng);
    return u;
  };
  Refined r1 = refine(cx);
  for (int t = 0; t < 50; ++t) {
    ConstructibleFunction ff = ConstructibleFunction::zero_for(cx);
    long long expect = 0;
    for (int piece_i = 0; piece_i < 4; ++piece_i) {
      TameSet u = random_tame();
      long long k = coeff(rng);
      ff += k * ConstructibleFunction::indicator(u);
      expect += k * euler_char(u);
    }
    c.require(euler_integral(ff) == expect, "representation independence");
    c.require(euler_integral(transfer(r1, ff)) == expect, "subdivision invariance");
  }
}

// 8. catalog relations hold; the planted-corruption fixture is rejected
void crit_catalog_validation(Checker& c) {
  FatGraph fg = FatGraph::canonical(3);
  Catalog cat = build_catalog(SurfaceSpec{3, true}, fg);
  CatalogReport rep = validate_catalog(cat, fg);
  c.require(rep.ok, rep.ok ? "" : rep.failures.front());
  for (const CatalogEntry& e : cat.entries) {
    c.require(fixes_boundary(e.fwd), e.name + ": boundary moved");
    c.require(is_torelli(e.fwd), e.name + ": homology action nontrivial");
    c.require(is_symplectic(homology_matrix(dehn_twist(e.a, fg))), e.name + ": not symplectic");
  }
  // commutation for disjoint twists, braid for once-crossing ones
  MappingClass t1 = dehn_twist(parse_word("x1", 3), fg);
  MappingClass t2 = dehn_twist(parse_word("x2", 3), fg);
  MappingClass t3 = dehn_twist(parse_word("x3", 3), fg);
  c.require(compose(t1, t3).img == compose(t3, t1).img, "disjoint twists do not commute");
  c.require(compose(t1, compose(t2, t1)).img == compose(t2, compose(t1, t2)).img,
            "braid relation failed");

  Catalog bad = catalog_from_json(read_text_file(std::string(FIXTURE_DIR) + "/catalog_bad.json"));
  c.require(!validate_catalog(bad, fg).ok, "corrupted catalog passed validation");
  if (!g_torelli_bin.empty()) {
    std::string cmd = g_torelli_bin + " catalog validate --file " + std::string(FIXTURE_DIR) +
                      "/catalog_bad.json > /dev/null 2>&1";
    int rc = std::system(cmd.c_str());
    c.require(WIFEXITED(rc) && WEXITSTATUS(rc) == 1,
              "CLI exit code for corrupted catalog != 1");
  }
}

// 9. winding calibration and immersion independence
void crit_winding_calibration(Checker& c) {
  for (int g : {3, 4, 5}) {
    FatGraph fg = FatGraph::canonical(g);
    for (const PlanarImmersion& im :
         {PlanarImmersion::standard(fg), PlanarImmersion::alternate(fg)}) {
      c.require(winding_number(boundary_word(g), fg, im) == 1 - 2 * g,
                "boundary winding wrong at g=" + std::to_string(g));
    }
  }
  FatGraph fg = FatGraph::canonical(3);
  SurfaceSpec spec{3, true};
  Catalog cat = build_catalog(spec, fg);
  PlanarImmersion im0 = PlanarImmersion::standard(fg);
  PlanarImmersion im1 = PlanarImmersion::alternate(fg);
  std::vector<FreeWord> probes;
  for (int j = 0; j < 6; ++j) probes.push_back(basis_loop(3, j));
  for (const FreeWord& w : random_simple_words(fg, 10, 6, 23u)) probes.push_back(w);

  std::vector<MappingClass> suite;
  for (const CatalogEntry& e : cat.entries) {
    suite.push_back(e.fwd);
    suite.push_back(e.bwd);
  }
  suite.push_back(realize(cat, {{"bp_x1_h2", 1}, {"bp_x3_h3", -1}, {"sep_h1", 1}}));
  suite.push_back(realize(cat, {{"bp_x2_h2", 1}, {"bp_x1_h23", 1}}));
  for (const MappingClass& f : suite) {
    for (const FreeWord& w : probes)
      c.require(chillingworth_eval(f, w, fg, im0) == chillingworth_eval(f, w, fg, im1),
                "defect differs between immersions");
    c.require(chillingworth_winding_class(f, spec, fg, im0)
                  .equal_mod(chillingworth_winding_class(f, spec, fg, im1)),
              "defect class differs between immersions");
  }
}

}  // namespace

int main(int argc, char** argv) {
  if (argc > 1) g_torelli_bin = argv[1];
  int failures = 0;
  failures += run_criterion(1, "generator pairing values, g=3,4,5", 1.0, crit_generator_values);
  failures += run_criterion(2, "three-route equality, all words to length 4, bordered g=3", 120.0,
                            crit_sweep_bordered);
  failures += run_criterion(3, "three-route equality mod 2g-2, closed g=3,4", 60.0,
                            crit_sweep_closed);
  failures += run_criterion(4, "signed length is path independent (with euler integrals)", 300.0,
                            crit_path_independence);
  failures += run_criterion(5, "orbit distances grow linearly in the power", 300.0,
                            crit_orbit_growth);
  failures += run_criterion(6, "pairing laws on 500 random word/class pairs", 0,
                            crit_pairing_laws);
  failures += run_criterion(7, "euler calculus invariance suites and fixtures", 0, crit_euler);
  failures += run_criterion(8, "catalog relations and the corrupted-fixture control", 0,
                            crit_catalog_validation);
  failures += run_criterion(9, "winding calibration across immersions", 0,
                            crit_winding_calibration);
  if (failures) std::printf("%d criterion(s) failed\n", failures);
  else std::printf("all 9 criteria passed\n");
  return failures ? 1 : 0;
}
