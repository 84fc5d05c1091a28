#pragma once

#include <string>
#include <vector>

#include "torelli/homology.hpp"
#include "torelli/mapping.hpp"
#include "torelli/ribbon.hpp"

namespace torelli {

// Immersion data for the spine: a direction (in integer angle units out of
// `unit`) for every band end around the vertex disc, plus extra full turns a
// band may make.  Taut curves then have a well-defined integer winding number.
struct PlanarImmersion {
  int unit = 0;                 // even number of angle units per full turn
  std::vector<int> angles;      // by stub id, strictly increasing along fg.order
  std::vector<int> band_turns;  // by band-1, extra full turns of the band

  static PlanarImmersion standard(const FatGraph& fg);
  // irregular angles and twisted bands; winding-route results must not move
  static PlanarImmersion alternate(const FatGraph& fg);
  void validate(const FatGraph& fg) const;
};

// turning of a taut representative, in angle units; divisible by unit
long long total_turning(const FreeWord& cyc, const FatGraph& fg, const PlanarImmersion& im);
// winding number of the taut simple representative of the cyclic word;
// rejects words that do not carry a simple closed curve
long long winding_number(const FreeWord& cyc, const FatGraph& fg, const PlanarImmersion& im);

// winding defect of f on one curve: w(curve) - w(f(curve))
long long chillingworth_eval(const MappingClass& f, const FreeWord& curve, const FatGraph& fg,
                             const PlanarImmersion& im);

// the defect as a cohomology class, read off on the basis loops; reduced
// modulo 2g-2 on a closed surface
CohomologyClass chillingworth_winding_class(const MappingClass& f, const SurfaceSpec& spec,
                                            const FatGraph& fg, const PlanarImmersion& im);

struct DependenceReport {
  int tested = 0;
  bool ok = false;
  std::string detail;
};
// checks on random simple curves that the winding defect only sees the
// homology class (evaluates the linear extension against the direct defect)
DependenceReport homology_dependence_check(const MappingClass& f, const SurfaceSpec& spec,
                                           const FatGraph& fg, const PlanarImmersion& im,
                                           int min_cases, unsigned seed);

// random cyclic words that carry simple closed curves (test utility)
std::vector<FreeWord> random_simple_words(const FatGraph& fg, int count, int max_len, unsigned seed);

}  // namespace torelli
