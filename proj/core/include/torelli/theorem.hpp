#pragma once

#include <string>

#include "torelli/surface.hpp"

namespace torelli {

struct SweepOptions {
  int max_len = 4;
  int threads = 1;  // 0 = hardware concurrency
};

struct SweepResult {
  long long words = 0;          // words enumerated (the empty one included)
  long long automorphisms = 0;  // distinct maps realized
  long long cases = 0;          // scored (map, basis class) comparisons
  long long excluded = 0;       // calibration pair: verified, not scored
  bool ok = true;
  std::string first_failure;
};

// Enumerates every word up to max_len over four bounding pairs and two
// separating twists, groups words by the automorphism they realize (word-sum
// invariants must agree within a group), then checks per automorphism that
// the winding route (on two different immersions) and the contraction route
// give the same class, equal to twice the stable-length pairing on every
// basis class.  Closed surfaces compare modulo 2g-2.
SweepResult verify_theorem_sweep(const SurfaceSpec& spec, const SweepOptions& opt);

}  // namespace torelli
