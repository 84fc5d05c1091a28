#include "torelli/instance.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>
#include <tuple>

#include "torelli/action.hpp"

namespace torelli {

namespace {

FreeWord letter(int k) { return FreeWord{static_cast<Letter>(k)}; }

// commutator of the two loops of handle h, optionally with the roles swapped
FreeWord handle_comm(int h, bool flip) {
  FreeWord a = letter(2 * h - 1), b = letter(2 * h);
  return flip ? commutator(b, a) : commutator(a, b);
}

}  // namespace

DeskInstance build_desk_instance(const SurfaceSpec& spec, int max_power) {
  if (spec.genus < 3) throw std::invalid_argument("desk instance needs genus >= 3");
  DeskInstance di;
  di.spec = spec;
  di.fg = FatGraph::canonical(spec.genus);
  di.cat = build_catalog(spec, di.fg);
  di.h = basis_class(spec.genus, 0);
  di.max_power = max_power;
  di.bases = {letter(1), concat(letter(1), handle_comm(2, false)),
              concat(letter(1), handle_comm(3, false))};
  di.movers = {"bp_x1_h2", "bp_x2_h2", "sep_h1"};

  // companions: x1 against handles 2 and 3 in every commutator orientation
  std::vector<FreeWord> companions;
  for (bool f2 : {false, true})
    for (bool f3 : {false, true}) {
      companions.push_back(concat(letter(1), concat(handle_comm(2, f2), handle_comm(3, f3))));
      companions.push_back(concat(letter(1), concat(handle_comm(3, f3), handle_comm(2, f2))));
    }
  companions.push_back(concat(letter(1), handle_comm(2, true)));
  companions.push_back(concat(letter(1), handle_comm(3, true)));

  std::vector<CurveVertex> universe;
  std::map<FreeWord, int> index;
  auto admit = [&](const FreeWord& w) -> int {
    auto cv = admit_vertex(w, di.fg, &di.h);
    if (!cv) return -1;
    auto [it, fresh] = index.try_emplace(cv->w, static_cast<int>(universe.size()));
    if (fresh) universe.push_back(*cv);
    return it->second;
  };

  di.orbit.assign(di.movers.size(), {});
  for (size_t m = 0; m < di.movers.size(); ++m) {
    const MappingClass& f = di.cat.by_name(di.movers[m]).fwd;
    di.orbit[m].assign(di.bases.size(), {});
    for (size_t b = 0; b < di.bases.size(); ++b) {
      FreeWord w = di.bases[b];
      for (int n = 0; n <= max_power; ++n) {
        if (w.size() > 200) throw std::logic_error("orbit word blew up");
        di.orbit[m][b].push_back(admit(w));
        w = cyclically_reduced(apply_word(f, w));
      }
    }
  }
  for (const FreeWord& w : companions) admit(w);

  di.graph = build_graph(spec, universe, di.fg);
  return di;
}

PathReport check_path_independence(const DeskInstance& di, int min_pairs, int max_hops) {
  PathReport rep;
  const UniverseGraph& G = di.graph;
  long long mod = di.spec.modulus();
  int nv = static_cast<int>(G.verts.size());

  struct Cand {
    int i, j;
    std::vector<GraphPath> paths;
  };
  std::vector<Cand> cands;
  for (int i = 0; i < nv; ++i)
    for (int j = i + 1; j < nv; ++j) {
      auto ps = simple_paths(G, i, j, max_hops);
      if (!ps.empty()) cands.push_back({i, j, std::move(ps)});
    }
  // richest pairs first, but keep the per-pair tracing workload bounded
  auto bucket = [](size_t n) { return (n >= 2 && n <= 16) ? 0 : (n == 1 ? 1 : 2); };
  std::stable_sort(cands.begin(), cands.end(), [&](const Cand& a, const Cand& b) {
    int ba = bucket(a.paths.size()), bb = bucket(b.paths.size());
    if (ba != bb) return ba < bb;
    if (ba == 0 && a.paths.size() != b.paths.size()) return a.paths.size() > b.paths.size();
    return std::tie(a.i, a.j) < std::tie(b.i, b.j);
  });

  auto fail = [&](const std::string& what) {
    if (rep.ok) {
      rep.ok = false;
      rep.first_failure = what;
    }
  };

  for (const Cand& c : cands) {
    if (rep.pairs >= min_pairs) break;
    bool first = true;
    long long len0 = 0;
    for (const GraphPath& p : c.paths) {
      long long len = signed_length(G, p);
      if (first) {
        len0 = len;
        first = false;
      } else if (mod_reduce(len - len0, mod) != 0) {
        fail("paths " + word_str(G.verts[c.i].w) + " -> " + word_str(G.verts[c.j].w) +
             " disagree in signed length");
      }
      if (!verify_length_vs_integral(G, p, di.fg))
        fail("integral identity failed on a path " + word_str(G.verts[c.i].w) + " -> " +
             word_str(G.verts[c.j].w));
      ++rep.paths;
    }
    ++rep.pairs;
    if (c.paths.size() > 1) ++rep.multipath;
  }
  if (rep.pairs < min_pairs) fail("not enough connected pairs in the window");
  return rep;
}

OrbitReport check_orbit_growth(const DeskInstance& di) {
  OrbitReport rep;
  long long mod = di.spec.modulus();
  auto fail = [&](const std::string& what) {
    if (rep.ok) {
      rep.ok = false;
      rep.first_failure = what;
    }
  };

  for (size_t m = 0; m < di.movers.size(); ++m) {
    long long predicted = phi_eval(di.cat, {{di.movers[m], 1}}, di.h);
    for (size_t b = 0; b < di.bases.size(); ++b) {
      const std::vector<int>& orb = di.orbit[m][b];
      std::string tag = di.movers[m] + " on " + word_str(di.bases[b]);
      if (orb[0] < 0 || orb[1] < 0) {
        fail(tag + ": orbit vertex missing from the window");
        continue;
      }
      auto d1 = signed_distance(di.graph, orb[0], orb[1]);
      if (!d1) {
        fail(tag + ": image unreachable in the window");
        continue;
      }
      if (mod_reduce(*d1 - predicted, mod) != 0) {
        fail(tag + ": one-step distance " + std::to_string(*d1) + " != pairing " +
             std::to_string(predicted));
        continue;
      }
      for (int n = 1; n <= di.max_power; ++n) {
        if (orb[n] < 0) {
          fail(tag + ": power " + std::to_string(n) + " missing from the window");
          break;
        }
        auto dn = signed_distance(di.graph, orb[0], orb[n]);
        if (!dn) {
          fail(tag + ": power " + std::to_string(n) + " unreachable");
          break;
        }
        if (mod_reduce(*dn - n * *d1, mod) != 0) {
          fail(tag + ": d(v, f^" + std::to_string(n) + " v) = " + std::to_string(*dn) +
               " != " + std::to_string(n) + " * " + std::to_string(*d1));
          break;
        }
        ++rep.checks;
      }
    }
  }
  return rep;
}

}  // namespace torelli
