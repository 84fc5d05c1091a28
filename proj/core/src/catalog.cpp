#include "torelli/catalog.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

#include "torelli/chords.hpp"
#include "torelli/curvegraph.hpp"
#include "torelli/twist.hpp"
#include "torelli/winding.hpp"

namespace torelli {

bool Catalog::has(const std::string& name) const {
  for (const auto& e : entries)
    if (e.name == name) return true;
  return false;
}

const CatalogEntry& Catalog::by_name(const std::string& name) const {
  for (const auto& e : entries)
    if (e.name == name) return e;
  throw std::invalid_argument("catalog: unknown generator " + name);
}

std::vector<std::pair<HomologyClass, HomologyClass>> span_pairs(int g, const std::vector<int>& handles) {
  std::vector<std::pair<HomologyClass, HomologyClass>> out;
  for (int h : handles) out.emplace_back(basis_class(g, h - 1), basis_class(g, g + h - 1));
  return out;
}

namespace {

// Null-homologous detour around the listed handles.  Leaving from an x_{2k}
// loop the two commutator factors must swap roles, or the chord closing the
// detour back into the loop is forced across the chord that opened it.
FreeWord handle_commutators(const std::vector<int>& handles, bool from_even) {
  FreeWord w;
  for (int h : handles) {
    FreeWord odd = {static_cast<Letter>(2 * h - 1)}, even = {static_cast<Letter>(2 * h)};
    FreeWord c = from_even ? commutator(even, odd) : commutator(odd, even);
    w.insert(w.end(), c.begin(), c.end());
  }
  return reduced(w);
}

CatalogEntry bp_entry(const std::string& name, const FreeWord& loop, const std::vector<int>& handles,
                      const SurfaceSpec& spec, const FatGraph& fg) {
  CatalogEntry e;
  e.name = name;
  // The piece the pair cuts off lies on opposite sides of an odd and an even
  // loop, and T_a T_b^{-1} must see it from the a side; which curve plays a
  // is pinned by the winding/contraction route equality in validation.
  bool from_even = loop.back() % 2 == 0;
  FreeWord detoured = concat(loop, handle_commutators(handles, from_even));
  e.a = from_even ? detoured : loop;
  e.b = from_even ? loop : detoured;
  e.handles = handles;
  e.a_class = homology_of(e.a, spec.genus);
  e.fwd = compose(dehn_twist(e.a, fg), inverse_of(dehn_twist(e.b, fg)));
  e.bwd = inverse_of(e.fwd);
  return e;
}

CatalogEntry sep_entry(const std::string& name, const FreeWord& c, const SurfaceSpec& spec,
                       const FatGraph& fg) {
  CatalogEntry e;
  e.name = name;
  e.separating = true;
  e.a = c;
  e.a_class = zero_class(spec.genus);
  e.fwd = dehn_twist(c, fg);
  e.bwd = inverse_of(e.fwd);
  return e;
}

}  // namespace

Catalog build_catalog(const SurfaceSpec& spec, const FatGraph& fg) {
  if (fg.g != spec.genus) throw std::invalid_argument("build_catalog: genus mismatch");
  Catalog cat;
  cat.spec = spec;
  int g = spec.genus;
  FreeWord x1 = {1}, x2 = {2}, x3 = {3};
  cat.entries.push_back(bp_entry("bp_x1_h2", x1, {2}, spec, fg));
  cat.entries.push_back(bp_entry("bp_x2_h2", x2, {2}, spec, fg));
  cat.entries.push_back(bp_entry("bp_x1_h3", x1, {3}, spec, fg));
  cat.entries.push_back(bp_entry("bp_x3_h3", x3, {3}, spec, fg));
  for (int k = 2; k <= g - 1; ++k) {
    std::vector<int> handles;
    std::string name = "bp_x1_h";
    for (int h = 2; h <= k + 1; ++h) {
      handles.push_back(h);
      name += std::to_string(h);
    }
    cat.entries.push_back(bp_entry(name, x1, handles, spec, fg));
  }
  cat.entries.push_back(sep_entry("sep_h1", commutator({1}, {2}), spec, fg));
  cat.entries.push_back(
      sep_entry("sep_h12", concat(commutator({1}, {2}), commutator({3}, {4})), spec, fg));
  return cat;
}

void CatalogReport::fail(const std::string& entry, const std::string& what) {
  ok = false;
  failures.push_back(entry + ": " + what);
}

CatalogReport validate_catalog(const Catalog& cat, const FatGraph& fg) {
  CatalogReport rep;
  if (fg.g != cat.spec.genus) {
    rep.fail("catalog", "genus mismatch with spine");
    return rep;
  }
  int g = cat.spec.genus;
  PlanarImmersion im = PlanarImmersion::standard(fg);
  std::set<std::string> names;
  for (const CatalogEntry& e : cat.entries) {
    if (e.name.empty() || !names.insert(e.name).second) {
      rep.fail(e.name, "missing or duplicate name");
      continue;
    }
    AdmissibilityReport ar = admissibility(e.a, fg);
    if (!ar.ok) {
      rep.fail(e.name, "curve a not simple: " + ar.reason);
      continue;
    }
    if (e.separating) {
      if (!homology_of(e.a, g).is_zero()) {
        rep.fail(e.name, "separating curve is not null-homologous");
        continue;
      }
      if (!e.b.empty() || !e.handles.empty() || !e.a_class.is_zero()) {
        rep.fail(e.name, "separating entry carries bounding-pair data");
        continue;
      }
    } else {
      AdmissibilityReport br = admissibility(e.b, fg);
      if (!br.ok) {
        rep.fail(e.name, "curve b not simple: " + br.reason);
        continue;
      }
      if (homology_of(e.a, g) != e.a_class || homology_of(e.b, g) != e.a_class) {
        rep.fail(e.name, "curve classes disagree with the stored class");
        continue;
      }
      if (e.a_class.is_zero()) {
        rep.fail(e.name, "bounding pair with null-homologous curves");
        continue;
      }
      std::set<int> hs(e.handles.begin(), e.handles.end());
      if (hs.empty() || hs.size() != e.handles.size() || *hs.begin() < 1 || *hs.rbegin() > g) {
        rep.fail(e.name, "bad handle list");
        continue;
      }
      ChordDiagram joint = build_diagram({cyclically_reduced(e.a), cyclically_reduced(e.b)}, fg);
      if (joint.crossings_between(0, 1) != 0) {
        rep.fail(e.name, "pair curves intersect");
        continue;
      }
      // The subsurface the pair cuts off must run from a to b and carry as
      // many handles as the span lists; this pins the piece genus and the
      // a/b orientation without consulting the stored maps.
      CurveComplex cc = build_curve_complex({cyclically_reduced(e.a), cyclically_reduced(e.b)},
                                            fg, !cat.spec.bordered);
      std::vector<SubsurfacePiece> ps = pair_pieces(cc, 0, 1);
      bool piece_ok = false;
      for (const SubsurfacePiece& p : ps)
        if (p.sign > 0 && p.genus == static_cast<int>(e.handles.size())) piece_ok = true;
      if (ps.size() != (cat.spec.bordered ? 1u : 2u) || !piece_ok) {
        rep.fail(e.name, "cut piece disagrees with the handle data");
        continue;
      }
    }
    // re-derive the maps from the curves alone
    MappingClass expect;
    try {
      expect = e.separating
                   ? dehn_twist(e.a, fg)
                   : compose(dehn_twist(e.a, fg), inverse_of(dehn_twist(e.b, fg)));
    } catch (const std::exception& ex) {
      rep.fail(e.name, std::string("twist derivation failed: ") + ex.what());
      continue;
    }
    if (expect.img != e.fwd.img || expect.inv != e.fwd.inv) {
      rep.fail(e.name, "stored map disagrees with the twist engine");
      continue;
    }
    if (e.bwd.img != e.fwd.inv || e.bwd.inv != e.fwd.img) {
      rep.fail(e.name, "stored inverse is not the inverse");
      continue;
    }
    if (!is_valid_automorphism(e.fwd)) {
      rep.fail(e.name, "map is not a boundary-fixing automorphism");
      continue;
    }
    if (!is_torelli(e.fwd)) {
      rep.fail(e.name, "map acts nontrivially on homology");
      continue;
    }
    CohomologyClass ew = chillingworth_winding_class(e.fwd, cat.spec, fg, im);
    CohomologyClass ej =
        e.separating
            ? zero_cohomology(g, cat.spec.chillingworth_modulus())
            : chillingworth_from_johnson({{+1, e.a_class, span_pairs(g, e.handles)}}, cat.spec);
    if (!ew.equal_mod(ej)) {
      rep.fail(e.name, "winding route and contraction route disagree");
      continue;
    }
  }
  return rep;
}

MappingClass realize(const Catalog& cat, const TorelliWord& w) {
  MappingClass out = MappingClass::identity(cat.spec.genus);
  for (const TorelliLetter& l : w) {
    if (l.exp != 1 && l.exp != -1) throw std::invalid_argument("realize: exponent must be +-1");
    const CatalogEntry& e = cat.by_name(l.gen);
    out = compose(out, l.exp > 0 ? e.fwd : e.bwd);
  }
  return out;
}

std::vector<BoundingPairDatum> bp_factors(const Catalog& cat, const TorelliWord& w) {
  std::vector<BoundingPairDatum> out;
  for (const TorelliLetter& l : w) {
    const CatalogEntry& e = cat.by_name(l.gen);
    if (e.separating) continue;
    out.push_back({l.exp, e.a_class, span_pairs(cat.spec.genus, e.handles)});
  }
  return out;
}

}  // namespace torelli
