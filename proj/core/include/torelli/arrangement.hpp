#pragma once

#include <vector>

#include "torelli/chords.hpp"
#include "torelli/euler.hpp"

namespace torelli {

// The surface carved into cells by a taut multicurve: the chord arrangement
// inside the vertex disc, a strip between neighbouring strands in every band,
// and (closed case) a cap disc glued along the boundary circle.  Curve edges
// are tagged with the word that runs along them, and every directed edge
// knows the face on its left, so subsurfaces can be walked combinatorially.
struct CurveComplex {
  CellComplex cx;
  ChordDiagram diagram;
  bool capped = false;

  std::vector<int> edge_kind;                  // 0 = surface, 1 = curve
  std::vector<int> edge_curve;                 // word index for curve edges, else -1
  std::vector<std::vector<int>> curve_cycles;  // per word: signed 1-based edge cycle

  // directed-edge tables; dir = 2*(e-1) + (0 fwd / 1 rev) for signed edge +-e
  std::vector<int> left_face;    // -1 on the free (boundary) side
  std::vector<int> succ_in_face; // next dir in the same face cycle

  static int dir_of(int signed_edge) {
    return 2 * (std::abs(signed_edge) - 1) + (signed_edge < 0 ? 1 : 0);
  }
  static int signed_of(int dir) { return dir % 2 == 0 ? dir / 2 + 1 : -(dir / 2 + 1); }
  bool is_curve_dir(int dir) const { return edge_kind[dir / 2] == 1; }
};

CurveComplex build_curve_complex(const std::vector<FreeWord>& curves, const FatGraph& fg,
                                 bool capped);

}  // namespace torelli
