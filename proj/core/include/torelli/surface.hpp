#pragma once

#include <stdexcept>

namespace torelli {

// A surface S_g (closed) or S_{g,1} (one boundary circle).  Genus two and
// below is rejected outright: the signed-length theory needs g >= 3.
struct SurfaceSpec {
  int genus;
  bool bordered;

  SurfaceSpec(int g, bool b) : genus(g), bordered(b) {
    if (g < 3) throw std::invalid_argument("SurfaceSpec: genus must be >= 3");
  }

  // Modulus for signed lengths / phi: exact over Z when bordered, mod g-1 closed.
  long long modulus() const { return bordered ? 0 : genus - 1; }
  // Modulus for winding-difference classes: exact bordered, mod 2g-2 closed.
  long long chillingworth_modulus() const { return bordered ? 0 : 2 * genus - 2; }

  int rank() const { return 2 * genus; }
  bool operator==(const SurfaceSpec&) const = default;
};

}  // namespace torelli
