#pragma once

#include <vector>

#include "torelli/freeword.hpp"

namespace torelli {

// One-vertex fatgraph spine of S_{g,1}: 2g bands attached to a disc, with a
// cyclic (counterclockwise) order on the 4g band ends.  Band i (1..2g) has an
// origin end o_i, where the loop x_i departs, and a terminal end t_i where it
// arrives.  Half-edge ids: o_i = 2(i-1), t_i = 2(i-1)+1.
inline int stub_o(int band) { return 2 * (band - 1); }
inline int stub_t(int band) { return 2 * (band - 1) + 1; }
inline int stub_band(int s) { return s / 2 + 1; }
inline bool stub_is_o(int s) { return (s & 1) == 0; }
inline int stub_mate(int s) { return s ^ 1; }  // other end of the same band

// Where a letter departs from / arrives at the vertex disc.
inline int dep_stub(Letter l) { return l > 0 ? stub_o(l) : stub_t(-l); }
inline int arr_stub(Letter l) { return l > 0 ? stub_t(l) : stub_o(-l); }

struct FatGraph {
  int g = 0;
  std::vector<int> order;  // half-edge ids in counterclockwise order
  std::vector<int> pos;    // pos[stub] = index into order

  // Canonical spine: the blocks (o_{2k-1}, t_{2k}, t_{2k-1}, o_{2k}) laid out
  // counterclockwise, one per handle; the basepoint sits between the last
  // block and the first.  Its single boundary face reads off exactly the
  // surface relator prod [x_{2k-1}, x_{2k}].
  static FatGraph canonical(int g);

  int nstubs() const { return 4 * g; }
  int at(int idx) const;                    // order, index taken cyclically
  int next(int s) const;                    // counterclockwise successor stub
  int ccw_gap(int from, int to) const;      // steps from -> to, in 1..4g-1 (0 if equal)

  int face_count() const;
  FreeWord boundary_cycle() const;          // word read along the unique face
  void validate() const;                    // one face; canonical reads the relator
};

}  // namespace torelli
