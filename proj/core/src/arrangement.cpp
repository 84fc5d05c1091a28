#include "torelli/arrangement.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <stdexcept>

#include "torelli/geom.hpp"

namespace torelli {

namespace {

struct Dsu {
  std::vector<int> p;
  explicit Dsu(int n) : p(n) { std::iota(p.begin(), p.end(), 0); }
  int find(int x) { return p[x] == x ? x : p[x] = find(p[x]); }
  void unite(int a, int b) { p[find(a)] = find(b); }
};

struct Builder {
  const ChordDiagram& d;
  CurveComplex& out;
  int g;

  std::vector<int> corner_s, corner_e;      // by cyclic position
  std::vector<int> vpoint;                  // by slot rank
  std::vector<int> gap;                     // by cyclic position
  std::vector<std::vector<int>> attach;     // by cyclic position: pieces along the interval
  std::vector<int> sideA, sideB;            // by band-1
  std::vector<int> strand;                  // by passage id
  std::vector<std::vector<int>> cpieces;    // by chord id: edge ids along the chord
  std::vector<std::vector<int>> cverts;     // by chord id: interior vertex ids in order
  std::vector<char> disc_edge;              // lives in the vertex disc

  Builder(const ChordDiagram& dg, CurveComplex& o) : d(dg), out(o), g(dg.fg.g) {}

  int add_vertex() { return out.cx.nverts++; }

  int add_edge(int tail, int head, int kind, int curve, bool disc) {
    out.cx.edges.push_back({tail, head});
    out.edge_kind.push_back(kind);
    out.edge_curve.push_back(curve);
    disc_edge.push_back(disc ? 1 : 0);
    return static_cast<int>(out.cx.edges.size()) - 1;
  }

  int point_count(int p) const {
    int s = d.fg.at(p);
    int band = stub_band(s);
    return static_cast<int>((stub_is_o(s) ? d.slots_o : d.slots_t)[band - 1].size());
  }

  void build_vertices_and_crossings();
  void build_edges();
  void build_disc_faces();
  void build_band_faces();
  void build_rim();
  void build_curve_cycles();
};

void Builder::build_vertices_and_crossings() {
  corner_s.resize(4 * g);
  corner_e.resize(4 * g);
  for (int p = 0; p < 4 * g; ++p) {
    corner_s[p] = add_vertex();
    corner_e[p] = add_vertex();
  }
  vpoint.resize(d.npoints);
  for (int r = 0; r < d.npoints; ++r) vpoint[r] = add_vertex();

  // chord crossings, merged when they land on the same point of a chord
  int nc = static_cast<int>(d.chords.size());
  std::vector<std::pair<int, int>> pairs;
  for (int i = 0; i < nc; ++i)
    for (int j = i + 1; j < nc; ++j)
      if (d.crossing(i, j)) pairs.emplace_back(i, j);
  Dsu dsu(static_cast<int>(pairs.size()));
  std::vector<std::vector<std::pair<ChordParam, int>>> events(nc);  // (where, pair index)
  for (int pi = 0; pi < static_cast<int>(pairs.size()); ++pi) {
    auto [i, j] = pairs[pi];
    auto on = [&](int c, int o) {
      CirclePt a = circle_point(d.chords[c].a, d.npoints);
      CirclePt b = circle_point(d.chords[c].b, d.npoints);
      CirclePt p = circle_point(d.chords[o].a, d.npoints);
      CirclePt q = circle_point(d.chords[o].b, d.npoints);
      return cross_param(a, b, p, q);
    };
    events[i].emplace_back(on(i, j), pi);
    events[j].emplace_back(on(j, i), pi);
  }
  for (int c = 0; c < nc; ++c) {
    std::sort(events[c].begin(), events[c].end(),
              [](const auto& x, const auto& y) { return param_less(x.first, y.first); });
    for (size_t k = 1; k < events[c].size(); ++k)
      if (param_equal(events[c][k - 1].first, events[c][k].first))
        dsu.unite(events[c][k - 1].second, events[c][k].second);
  }
  std::vector<int> pair_vertex(pairs.size(), -1);
  for (int pi = 0; pi < static_cast<int>(pairs.size()); ++pi) {
    int r = dsu.find(pi);
    if (pair_vertex[r] < 0) pair_vertex[r] = add_vertex();
    pair_vertex[pi] = pair_vertex[r];
  }
  cverts.assign(nc, {});
  for (int c = 0; c < nc; ++c)
    for (const auto& [where, pi] : events[c]) {
      int v = pair_vertex[pi];
      if (cverts[c].empty() || cverts[c].back() != v) cverts[c].push_back(v);
    }
}

void Builder::build_edges() {
  gap.resize(4 * g);
  attach.resize(4 * g);
  for (int p = 0; p < 4 * g; ++p)
    gap[p] = add_edge(corner_e[p], corner_s[(p + 1) % (4 * g)], 0, -1, true);
  for (int p = 0; p < 4 * g; ++p) {
    int cnt = point_count(p);
    int r0 = d.interval_start[p];
    int prev = corner_s[p];
    for (int k = 0; k < cnt; ++k) {
      attach[p].push_back(add_edge(prev, vpoint[r0 + k], 0, -1, true));
      prev = vpoint[r0 + k];
    }
    attach[p].push_back(add_edge(prev, corner_e[p], 0, -1, true));
  }
  sideA.resize(2 * g);
  sideB.resize(2 * g);
  for (int b = 0; b < 2 * g; ++b) {
    int po = d.fg.pos[stub_o(b + 1)], pt = d.fg.pos[stub_t(b + 1)];
    sideA[b] = add_edge(corner_s[po], corner_e[pt], 0, -1, false);
    sideB[b] = add_edge(corner_e[po], corner_s[pt], 0, -1, false);
  }
  strand.resize(d.passages.size());
  for (int pid = 0; pid < static_cast<int>(d.passages.size()); ++pid)
    strand[pid] = add_edge(vpoint[d.pass_pt_o[pid]], vpoint[d.pass_pt_t[pid]], 1,
                           d.passages[pid].word, false);
  cpieces.assign(d.chords.size(), {});
  for (int c = 0; c < static_cast<int>(d.chords.size()); ++c) {
    int prev = vpoint[d.chords[c].a];
    for (int v : cverts[c]) {
      cpieces[c].push_back(add_edge(prev, v, 1, d.chords[c].word, true));
      prev = v;
    }
    cpieces[c].push_back(add_edge(prev, vpoint[d.chords[c].b], 1, d.chords[c].word, true));
  }
}

void Builder::build_disc_faces() {
  int nvert = out.cx.nverts;
  std::vector<std::vector<int>> rot(nvert);  // outgoing dirs, ccw

  // chord endpoint at each slot rank: (chord id, starts here?)
  std::vector<std::pair<int, bool>> chord_at(d.npoints, {-1, false});
  for (int c = 0; c < static_cast<int>(d.chords.size()); ++c) {
    chord_at[d.chords[c].a] = {c, true};
    chord_at[d.chords[c].b] = {c, false};
  }

  for (int p = 0; p < 4 * g; ++p) {
    // corners carry two disc edges; their cyclic order is immaterial
    rot[corner_s[p]] = {2 * attach[p][0], 2 * gap[(p + 4 * g - 1) % (4 * g)] + 1};
    rot[corner_e[p]] = {2 * gap[p], 2 * attach[p].back() + 1};
    int cnt = point_count(p);
    int r0 = d.interval_start[p];
    for (int k = 0; k < cnt; ++k) {
      auto [c, starts] = chord_at[r0 + k];
      if (c < 0) throw std::logic_error("slot point without a chord");
      int chord_dir = starts ? 2 * cpieces[c].front() : 2 * cpieces[c].back() + 1;
      // seen from inside the disc: boundary-forward, then the chord, then
      // boundary-backward is the counterclockwise order at a boundary point
      rot[vpoint[r0 + k]] = {2 * attach[p][k + 1], chord_dir, 2 * attach[p][k] + 1};
    }
  }

  // crossing vertices: sort the outgoing chord directions geometrically
  std::vector<std::vector<std::pair<Dir, int>>> cross_out(nvert);
  for (int c = 0; c < static_cast<int>(d.chords.size()); ++c) {
    CirclePt A = circle_point(d.chords[c].a, d.npoints);
    CirclePt B = circle_point(d.chords[c].b, d.npoints);
    Dir fwd = direction(A, B), bwd = direction(B, A);
    for (size_t k = 0; k < cverts[c].size(); ++k) {
      int v = cverts[c][k];
      cross_out[v].emplace_back(fwd, 2 * cpieces[c][k + 1]);      // onward piece
      cross_out[v].emplace_back(bwd, 2 * cpieces[c][k] + 1);      // back piece
    }
  }
  for (int v = 0; v < nvert; ++v) {
    if (cross_out[v].empty()) continue;
    std::sort(cross_out[v].begin(), cross_out[v].end(),
              [](const auto& x, const auto& y) { return dir_less(x.first, y.first); });
    for (auto& [dir, h] : cross_out[v]) rot[v].push_back(h);
  }

  std::vector<int> rot_idx(2 * out.cx.edges.size(), -1);
  for (int v = 0; v < nvert; ++v)
    for (int i = 0; i < static_cast<int>(rot[v].size()); ++i) rot_idx[rot[v][i]] = i;

  auto tail_of = [&](int dir) { return out.cx.dir_tail(CurveComplex::signed_of(dir)); };
  // face-on-left continuation: reverse, then take the ccw-previous outgoing edge
  auto next_in_face = [&](int dir) {
    int rev = dir ^ 1;
    int v = tail_of(rev);
    const auto& r = rot[v];
    return r[(rot_idx[rev] + r.size() - 1) % r.size()];
  };

  std::vector<char> seen(2 * out.cx.edges.size(), 0);
  int outer_marker = 2 * gap[0] + 1;
  for (int e = 0; e < static_cast<int>(out.cx.edges.size()); ++e) {
    if (!disc_edge[e]) continue;
    for (int dir : {2 * e, 2 * e + 1}) {
      if (seen[dir]) continue;
      std::vector<int> orbit;
      bool outer = false;
      int h = dir;
      do {
        seen[h] = 1;
        if (h == outer_marker) outer = true;
        orbit.push_back(CurveComplex::signed_of(h));
        h = next_in_face(h);
      } while (h != dir);
      if (!outer) out.cx.faces.push_back(orbit);
    }
  }
}

void Builder::build_band_faces() {
  for (int b = 0; b < 2 * g; ++b) {
    int po = d.fg.pos[stub_o(b + 1)], pt = d.fg.pos[stub_t(b + 1)];
    const auto& so = d.slots_o[b];
    int m = static_cast<int>(so.size());
    for (int j = 0; j <= m; ++j) {
      std::vector<int> cyc;
      cyc.push_back(-(attach[po][j] + 1));
      cyc.push_back(j == 0 ? sideA[b] + 1 : strand[so[j - 1]] + 1);
      cyc.push_back(-(attach[pt][m - j] + 1));
      cyc.push_back(j == m ? -(sideB[b] + 1) : -(strand[so[j]] + 1));
      out.cx.faces.push_back(cyc);
    }
  }
}

void Builder::build_rim() {
  // the directions no face covers, walked into the single boundary circle
  std::map<int, int> outgoing;  // tail vertex -> signed edge
  for (int p = 0; p < 4 * g; ++p) outgoing[corner_s[(p + 1) % (4 * g)]] = -(gap[p] + 1);
  for (int b = 0; b < 2 * g; ++b) {
    int po = d.fg.pos[stub_o(b + 1)], pt = d.fg.pos[stub_t(b + 1)];
    outgoing[corner_e[pt]] = -(sideA[b] + 1);
    outgoing[corner_e[po]] = sideB[b] + 1;
  }
  std::vector<int> walk;
  int start = corner_s[0], v = start;
  do {
    int s = outgoing.at(v);
    walk.push_back(s);
    v = out.cx.dir_head(s);
  } while (v != start);
  if (walk.size() != static_cast<size_t>(8 * g))
    throw std::logic_error("rim walk did not close over the whole boundary");
  if (out.capped)
    out.cx.faces.push_back(walk);
  else
    out.cx.boundary = walk;
}

void Builder::build_curve_cycles() {
  out.curve_cycles.assign(d.words.size(), {});
  for (int w = 0; w < static_cast<int>(d.words.size()); ++w) {
    int L = static_cast<int>(d.words[w].size());
    for (int m = 0; m < L; ++m) {
      int pid = d.passage_at(w, m);
      out.curve_cycles[w].push_back(d.words[w][m] > 0 ? strand[pid] + 1 : -(strand[pid] + 1));
      for (int e : cpieces[d.chords_of_word[w][(m + 1) % L]])
        out.curve_cycles[w].push_back(e + 1);
    }
    // the cycle must close head-to-tail
    const auto& cyc = out.curve_cycles[w];
    for (size_t i = 0; i < cyc.size(); ++i)
      if (out.cx.dir_head(cyc[i]) != out.cx.dir_tail(cyc[(i + 1) % cyc.size()]))
        throw std::logic_error("curve cycle does not close");
  }
}

}  // namespace

CurveComplex build_curve_complex(const std::vector<FreeWord>& curves, const FatGraph& fg,
                                 bool capped) {
  CurveComplex out;
  out.diagram = build_diagram(curves, fg);
  out.capped = capped;
  Builder b(out.diagram, out);
  b.build_vertices_and_crossings();
  b.build_edges();
  b.build_disc_faces();
  b.build_band_faces();
  b.build_rim();
  b.build_curve_cycles();
  out.cx.validate();
  long long want = capped ? 2 - 2 * fg.g : 1 - 2 * fg.g;
  if (out.cx.chi() != want) throw std::logic_error("curve complex has the wrong euler number");

  out.left_face.assign(2 * out.cx.edges.size(), -1);
  out.succ_in_face.assign(2 * out.cx.edges.size(), -1);
  for (int f = 0; f < out.cx.nfaces(); ++f) {
    const auto& cyc = out.cx.faces[f];
    for (size_t i = 0; i < cyc.size(); ++i) {
      int dd = CurveComplex::dir_of(cyc[i]);
      out.left_face[dd] = f;
      out.succ_in_face[dd] = CurveComplex::dir_of(cyc[(i + 1) % cyc.size()]);
    }
  }
  return out;
}

}  // namespace torelli
