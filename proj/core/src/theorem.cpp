#include "torelli/theorem.hpp"

#include <map>
#include <stdexcept>
#include <thread>
#include <utility>
#include <vector>

#include "torelli/action.hpp"
#include "torelli/catalog.hpp"
#include "torelli/twist.hpp"
#include "torelli/winding.hpp"

namespace torelli {

namespace {

const char* kSweepGens[6] = {"bp_x1_h2", "bp_x2_h2", "bp_x1_h3",
                             "bp_x3_h3", "sep_h1",   "sep_h12"};

std::string torelli_word_str(const TorelliWord& w) {
  if (w.empty()) return "(empty)";
  std::string s;
  for (const TorelliLetter& l : w) {
    if (!s.empty()) s += ' ';
    s += l.gen;
    if (l.exp < 0) s += "^-1";
  }
  return s;
}

// 128-bit fingerprint of the full image tuple; identifies the automorphism
std::pair<unsigned long long, unsigned long long> image_key(const MappingClass& f) {
  unsigned long long h1 = 1469598103934665603ull, h2 = 1099511628211ull ^ 0x9e3779b97f4a7c15ull;
  auto mix = [&](unsigned long long v) {
    h1 = (h1 ^ v) * 1099511628211ull;
    h2 = (h2 ^ (v + 0x9e3779b97f4a7c15ull)) * 1099511628211ull;
  };
  for (const FreeWord& w : f.img) {
    mix(w.size());
    for (Letter l : w) mix(static_cast<unsigned long long>(static_cast<long long>(l) + (1 << 16)));
  }
  return {h1, h2};
}

struct Group {
  TorelliWord word;
  CohomologyClass phi, john;
  bool calibration = false;
};

struct Outcome {
  bool ok = true;
  std::string msg;
  long long scored = 0, excluded = 0;
};

}  // namespace

SweepResult verify_theorem_sweep(const SurfaceSpec& spec, const SweepOptions& opt) {
  int g = spec.genus;
  FatGraph fg = FatGraph::canonical(g);
  Catalog cat = build_catalog(spec, fg);
  PlanarImmersion ims[2] = {PlanarImmersion::standard(fg), PlanarImmersion::alternate(fg)};
  long long emod = spec.chillingworth_modulus();

  SweepResult res;
  std::map<std::pair<unsigned long long, unsigned long long>, int> seen;
  std::vector<Group> groups;
  const std::vector<FreeWord>& calib_img = cat.by_name("bp_x1_h2").fwd.img;

  TorelliWord cur;
  auto visit = [&](auto&& self, const MappingClass& f) -> void {
    ++res.words;
    CohomologyClass phi = phi_cohomology(cat, cur);
    CohomologyClass john = chillingworth_from_johnson(bp_factors(cat, cur), spec);
    auto [it, fresh] = seen.try_emplace(image_key(f), static_cast<int>(groups.size()));
    if (fresh) {
      groups.push_back({cur, phi, john, f.img == calib_img});
    } else if (res.ok) {
      const Group& g0 = groups[it->second];
      if (!g0.phi.equal_mod(phi) || !g0.john.equal_mod(john)) {
        res.ok = false;
        res.first_failure = "word-sum invariants differ between " + torelli_word_str(g0.word) +
                            " and " + torelli_word_str(cur);
      }
    }
    if (static_cast<int>(cur.size()) == opt.max_len) return;
    for (const char* name : kSweepGens)
      for (int e : {+1, -1}) {
        cur.push_back({name, e});
        const CatalogEntry& en = cat.by_name(name);
        self(self, compose(f, e > 0 ? en.fwd : en.bwd));
        cur.pop_back();
      }
  };
  visit(visit, MappingClass::identity(g));
  res.automorphisms = static_cast<long long>(groups.size());

  long long base_w[2][12];  // winding of the plain basis loops
  for (int m = 0; m < 2; ++m)
    for (int j = 0; j < 2 * g; ++j)
      base_w[m][j] = total_turning(basis_loop(g, j), fg, ims[m]) / ims[m].unit;

  std::vector<Outcome> out(groups.size());
  auto run = [&](size_t lo, size_t hi) {
    for (size_t gi = lo; gi < hi; ++gi) {
      const Group& grp = groups[gi];
      Outcome& oc = out[gi];
      MappingClass f = realize(cat, grp.word);
      CohomologyClass ew[2];
      for (int m = 0; m < 2; ++m) {
        ew[m].modulus = emod;
        ew[m].dual.resize(2 * g);
      }
      for (int j = 0; j < 2 * g; ++j) {
        FreeWord img = apply_word(f, basis_loop(g, j));
        if (img.size() > 50000) throw std::logic_error("sweep image blew up");
        for (int m = 0; m < 2; ++m)
          ew[m].dual[j] = base_w[m][j] - total_turning(img, fg, ims[m]) / ims[m].unit;
      }
      if (!ew[0].equal_mod(ew[1])) {
        oc.ok = false;
        oc.msg = "winding class moved between immersions on " + torelli_word_str(grp.word);
        continue;
      }
      if (!ew[0].equal_mod(grp.john)) {
        oc.ok = false;
        oc.msg = "winding and contraction routes differ on " + torelli_word_str(grp.word);
        continue;
      }
      CohomologyClass ew0 = ew[0].reduced();
      for (int j = 0; j < 2 * g; ++j) {
        bool match = mod_reduce(2 * grp.phi.dual[j] - ew0.dual[j], emod) == 0;
        bool is_calib = grp.calibration && j == g;  // the pair the sign was set on
        if (!match) {
          oc.ok = false;
          oc.msg = "doubled pairing misses the class on " + torelli_word_str(grp.word) + " at " +
                   basis_name(g, j);
          break;
        }
        if (is_calib)
          ++oc.excluded;
        else
          ++oc.scored;
      }
    }
  };

  int nthreads = opt.threads == 0 ? static_cast<int>(std::thread::hardware_concurrency()) : opt.threads;
  if (nthreads <= 1 || groups.size() < 2) {
    run(0, groups.size());
  } else {
    nthreads = std::min<size_t>(nthreads, groups.size());
    std::vector<std::thread> pool;
    size_t chunk = (groups.size() + nthreads - 1) / nthreads;
    for (int t = 0; t < nthreads; ++t) {
      size_t lo = t * chunk, hi = std::min(groups.size(), lo + chunk);
      if (lo < hi) pool.emplace_back(run, lo, hi);
    }
    for (auto& th : pool) th.join();
  }

  for (const Outcome& oc : out) {
    res.cases += oc.scored;
    res.excluded += oc.excluded;
    if (!oc.ok && res.ok) {
      res.ok = false;
      res.first_failure = oc.msg;
    }
  }
  return res;
}

}  // namespace torelli
