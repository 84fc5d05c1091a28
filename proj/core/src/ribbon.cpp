#include "torelli/ribbon.hpp"

#include <algorithm>
#include <stdexcept>

namespace torelli {

FatGraph FatGraph::canonical(int g) {
  FatGraph fg;
  fg.g = g;
  for (int k = 1; k <= g; k++) {
    fg.order.push_back(stub_o(2 * k - 1));
    fg.order.push_back(stub_t(2 * k));
    fg.order.push_back(stub_t(2 * k - 1));
    fg.order.push_back(stub_o(2 * k));
  }
  fg.pos.assign(4 * g, -1);
  for (int i = 0; i < 4 * g; i++) fg.pos[fg.order[i]] = i;
  fg.validate();
  return fg;
}

int FatGraph::at(int idx) const {
  int n = nstubs();
  return order[((idx % n) + n) % n];
}

int FatGraph::next(int s) const { return at(pos[s] + 1); }

int FatGraph::ccw_gap(int from, int to) const {
  int n = nstubs();
  return ((pos[to] - pos[from]) % n + n) % n;
}

// Face traversal: from a stub h, the boundary runs along the gap to the next
// stub counterclockwise, then through that band.  Reading the band in its
// x-direction happens exactly when we enter at the o end.
FreeWord FatGraph::boundary_cycle() const {
  FreeWord w;
  int h = at(-1);  // start just before position 0, i.e. at the basepoint gap
  for (int steps = 0; steps < nstubs(); steps++) {
    int hn = next(h);
    int band = stub_band(hn);
    w.push_back(static_cast<Letter>(stub_is_o(hn) ? band : -band));
    h = stub_mate(hn);
  }
  return w;
}

int FatGraph::face_count() const {
  std::vector<char> seen(nstubs(), 0);
  int faces = 0;
  for (int s = 0; s < nstubs(); s++) {
    if (seen[s]) continue;
    faces++;
    int h = s;
    while (!seen[h]) {
      seen[h] = 1;
      h = stub_mate(next(h));
    }
  }
  return faces;
}

void FatGraph::validate() const {
  if (g < 1) throw std::runtime_error("FatGraph: empty");
  if (static_cast<int>(order.size()) != 4 * g)
    throw std::runtime_error("FatGraph: wrong number of half-edges");
  std::vector<char> seen(4 * g, 0);
  for (int s : order) {
    if (s < 0 || s >= 4 * g || seen[s]) throw std::runtime_error("FatGraph: bad cyclic order");
    seen[s] = 1;
  }
  if (face_count() != 1)
    throw std::runtime_error("FatGraph: spine must have a single boundary face");
  FreeWord w = boundary_cycle();
  if (FreeWord want = boundary_word(g); !cyclic_equal(w, want))
    throw std::runtime_error("FatGraph: boundary face does not read the surface relator");
}

}  // namespace torelli
