#pragma once

#include <string>
#include <vector>

#include "torelli/catalog.hpp"
#include "torelli/curvegraph.hpp"

namespace torelli {

// A finite window of the oriented curve graph around the class of x1: three
// distinguished base curves, a handful of commutator companions giving the
// graph alternative routes, and the orbits of the bases under three catalog
// maps up to a fixed power.
struct DeskInstance {
  SurfaceSpec spec{3, true};
  FatGraph fg;
  Catalog cat;
  HomologyClass h;                  // class shared by every vertex
  std::vector<FreeWord> bases;      // x1, x1[x3,x4], x1[x5,x6]
  std::vector<std::string> movers;  // catalog names driving the orbit checks
  int max_power = 5;
  UniverseGraph graph;
  // orbit[m][b][n] = graph vertex holding mover_m^n(base_b), -1 when absent
  std::vector<std::vector<std::vector<int>>> orbit;
};

DeskInstance build_desk_instance(const SurfaceSpec& spec, int max_power = 5);

// Exhaustive path comparison: for each selected vertex pair, every simple
// path within max_hops carries one signed length (mod g-1 when closed), and
// each path's traced pre-image density integrates to -2 times that length.
// Pairs with several competing paths are selected first.
struct PathReport {
  long long pairs = 0;      // pairs fully verified
  long long multipath = 0;  // of those, pairs with at least two paths
  long long paths = 0;      // paths traced
  bool ok = true;
  std::string first_failure;
};
PathReport check_path_independence(const DeskInstance& di, int min_pairs, int max_hops);

// Orbit growth: d(v, f^n v) = n * d(v, f v) for every mover/base pair up to
// max_power, with the one-step distance equal to the stable-length pairing
// of the mover against the common vertex class.
struct OrbitReport {
  long long checks = 0;
  bool ok = true;
  std::string first_failure;
};
OrbitReport check_orbit_growth(const DeskInstance& di);

}  // namespace torelli
