#pragma once

#include <string>
#include <vector>

#include "torelli/mapping.hpp"
#include "torelli/ribbon.hpp"
#include "torelli/surface.hpp"

namespace torelli {

// One signed generator of the Torelli group over the fixed spine: a
// bounding-pair map T_a T_b^{-1}, or a separating twist T_a (b empty).
struct CatalogEntry {
  std::string name;
  bool separating = false;
  FreeWord a, b;             // twisting curves
  std::vector<int> handles;  // handles spanning the piece the pair cuts off (1-based)
  HomologyClass a_class;     // common class of a and b; zero for separating twists
  MappingClass fwd, bwd;
};

struct Catalog {
  SurfaceSpec spec{3, true};
  std::vector<CatalogEntry> entries;

  bool has(const std::string& name) const;
  const CatalogEntry& by_name(const std::string& name) const;
};

// Bounding pairs of every genus 1..g-1 plus two separating twists, realized
// through the twist engine.
Catalog build_catalog(const SurfaceSpec& spec, const FatGraph& fg);

struct CatalogReport {
  bool ok = true;
  std::vector<std::string> failures;
  void fail(const std::string& entry, const std::string& what);
};

// Re-derives every entry from its curves alone and cross-checks the stored
// maps, classes and spans; any planted inconsistency must surface here.
CatalogReport validate_catalog(const Catalog& cat, const FatGraph& fg);

// Word in catalog generators with exponents +-1.
struct TorelliLetter {
  std::string gen;
  int exp = 1;
};
using TorelliWord = std::vector<TorelliLetter>;

MappingClass realize(const Catalog& cat, const TorelliWord& w);
std::vector<BoundingPairDatum> bp_factors(const Catalog& cat, const TorelliWord& w);

// symplectic pairs (a_h, b_h) for the listed handles
std::vector<std::pair<HomologyClass, HomologyClass>> span_pairs(int g, const std::vector<int>& handles);

}  // namespace torelli
