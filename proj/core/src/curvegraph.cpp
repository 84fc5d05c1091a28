#include "torelli/curvegraph.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace torelli {

std::optional<CurveVertex> admit_vertex(const FreeWord& w, const FatGraph& fg,
                                        const HomologyClass* expect) {
  FreeWord c = cyclically_reduced(w);
  if (c.empty()) return std::nullopt;
  FreeWord rim = boundary_word(fg.g);
  if (cyclic_equal(c, rim) || cyclic_equal(c, inverse(rim))) return std::nullopt;
  if (!is_admissible(c, fg)) return std::nullopt;
  CurveVertex v{canonical_rotation(c), homology_of(c, fg.g)};
  if (expect && !(v.cls == *expect)) return std::nullopt;
  return v;
}

namespace {

struct Dsu {
  std::vector<int> p;
  explicit Dsu(int n) : p(n) { std::iota(p.begin(), p.end(), 0); }
  int find(int x) { return p[x] == x ? x : p[x] = find(p[x]); }
  void unite(int a, int b) { p[find(a)] = find(b); }
};

bool cyclic_equal_ints(const std::vector<int>& a, const std::vector<int>& b) {
  if (a.size() != b.size() || a.empty()) return a.size() == b.size();
  for (size_t s = 0; s < b.size(); ++s) {
    bool ok = true;
    for (size_t i = 0; i < a.size() && ok; ++i) ok = a[i] == b[(s + i) % b.size()];
    if (ok) return true;
  }
  return false;
}

}  // namespace

std::vector<SubsurfacePiece> pair_pieces(const CurveComplex& cc, int w1, int w2) {
  const CellComplex& cx = cc.cx;
  int ne = cx.nedges();
  auto blocking = [&](int e) {
    return cc.edge_kind[e] == 1 && (cc.edge_curve[e] == w1 || cc.edge_curve[e] == w2);
  };

  Dsu dsu(cx.nfaces());
  for (int e = 0; e < ne; ++e) {
    if (blocking(e)) continue;
    int f0 = cc.left_face[2 * e], f1 = cc.left_face[2 * e + 1];
    if (f0 >= 0 && f1 >= 0) dsu.unite(f0, f1);
  }

  std::vector<char> touches_rim(cx.nfaces(), 0);
  for (int s : cx.boundary) {
    int f = cc.left_face[CurveComplex::dir_of(-s)];
    if (f >= 0) touches_rim[dsu.find(f)] = 1;
  }

  // the two whole curves as directed-edge rings, both ways
  auto ring = [&](int w, bool fwd) {
    std::vector<int> out;
    const auto& cyc = cc.curve_cycles[w];
    if (fwd)
      for (int s : cyc) out.push_back(CurveComplex::dir_of(s));
    else
      for (auto it = cyc.rbegin(); it != cyc.rend(); ++it)
        out.push_back(CurveComplex::dir_of(-*it));
    return out;
  };
  std::vector<int> f1 = ring(w1, true), r1 = ring(w1, false);
  std::vector<int> f2 = ring(w2, true), r2 = ring(w2, false);

  // frontier circles per component
  std::vector<char> used(2 * ne, 0);
  struct Circle {
    int comp;
    std::vector<int> dirs;
  };
  std::vector<Circle> circles;
  for (int e = 0; e < ne; ++e) {
    if (!blocking(e)) continue;
    for (int d0 : {2 * e, 2 * e + 1}) {
      if (used[d0]) continue;
      Circle c;
      c.comp = dsu.find(cc.left_face[d0]);
      int d = d0;
      size_t guard = 0;
      do {
        used[d] = 1;
        c.dirs.push_back(d);
        int x = cc.succ_in_face[d];
        while (!blocking(x / 2)) {
          x = cc.succ_in_face[x ^ 1];
          if (++guard > 4 * used.size()) throw std::logic_error("frontier walk did not close");
        }
        d = x;
      } while (d != d0);
      circles.push_back(std::move(c));
    }
  }

  // classify circles against the whole-curve rings
  struct CompInfo {
    int n = 0;
    bool bad = false, has_f1 = false, has_r1 = false, has_f2 = false, has_r2 = false;
  };
  std::vector<CompInfo> info(cx.nfaces());
  for (const Circle& c : circles) {
    CompInfo& ci = info[c.comp];
    ++ci.n;
    if (cyclic_equal_ints(c.dirs, f1))
      ci.has_f1 = true;
    else if (cyclic_equal_ints(c.dirs, r1))
      ci.has_r1 = true;
    else if (cyclic_equal_ints(c.dirs, f2))
      ci.has_f2 = true;
    else if (cyclic_equal_ints(c.dirs, r2))
      ci.has_r2 = true;
    else
      ci.bad = true;  // partial curve: the two words intersect here
  }

  std::vector<char> vertex_blocked(cx.nverts, 0);
  for (int e = 0; e < ne; ++e)
    if (blocking(e)) {
      vertex_blocked[cx.edges[e][0]] = 1;
      vertex_blocked[cx.edges[e][1]] = 1;
    }

  std::vector<SubsurfacePiece> out;
  for (int comp = 0; comp < cx.nfaces(); ++comp) {
    if (dsu.find(comp) != comp) continue;
    const CompInfo& ci = info[comp];
    if (ci.bad || ci.n != 2 || touches_rim[comp]) continue;
    int sign = 0;
    if (ci.has_f2 && ci.has_r1)
      sign = +1;
    else if (ci.has_f1 && ci.has_r2)
      sign = -1;
    else
      continue;

    TameSet set = TameSet::empty_for(cx);
    for (int f = 0; f < cx.nfaces(); ++f)
      if (dsu.find(f) == comp) set.f[f] = 1;
    for (int e = 0; e < ne; ++e) {
      if (blocking(e)) continue;
      int fa = cc.left_face[2 * e], fb = cc.left_face[2 * e + 1];
      int f = fa >= 0 ? fa : fb;
      if (f >= 0 && dsu.find(f) == comp) set.e[e] = 1;
    }
    for (int e = 0; e < ne; ++e)
      if (set.e[e])
        for (int v : cx.edges[e])
          if (!vertex_blocked[v]) set.v[v] = 1;

    long long chi = euler_char(set);
    if (chi % 2 != 0) throw std::logic_error("cobounding piece with odd euler number");
    out.push_back({sign, static_cast<int>(-chi / 2), set});
  }
  return out;
}

std::vector<SubsurfacePiece> find_edges(const CurveVertex& a, const CurveVertex& b,
                                        const FatGraph& fg, bool capped) {
  if (cyclic_equal(a.w, b.w) || cyclic_equal(a.w, inverse(b.w))) return {};
  CurveComplex cc = build_curve_complex({a.w, b.w}, fg, capped);
  std::vector<SubsurfacePiece> out;
  for (SubsurfacePiece& p : pair_pieces(cc, 0, 1))
    if (p.genus == 1) out.push_back(std::move(p));
  return out;
}

int UniverseGraph::index_of(const FreeWord& w) const {
  FreeWord c = canonical_rotation(cyclically_reduced(w));
  for (int i = 0; i < static_cast<int>(verts.size()); ++i)
    if (verts[i].w == c) return i;
  return -1;
}

UniverseGraph build_graph(const SurfaceSpec& spec, const std::vector<CurveVertex>& universe,
                          const FatGraph& fg) {
  UniverseGraph g;
  g.spec = spec;
  g.verts = universe;
  g.adj.assign(universe.size(), {});
  for (int i = 0; i < static_cast<int>(universe.size()); ++i)
    for (int j = i + 1; j < static_cast<int>(universe.size()); ++j)
      for (const SubsurfacePiece& p : find_edges(universe[i], universe[j], fg, !spec.bordered)) {
        int id = static_cast<int>(g.edges.size());
        g.edges.push_back({i, j, p.sign, p.genus});
        g.adj[i].push_back(id);
        g.adj[j].push_back(id);
      }
  return g;
}

long long signed_length(const UniverseGraph& g, const GraphPath& p) {
  long long total = 0;
  for (const PathStep& s : p.steps) {
    const auto& e = g.edges[s.edge];
    total += s.forward ? e.sign : -e.sign;
  }
  return total;
}

std::vector<GraphPath> simple_paths(const UniverseGraph& g, int from, int to, int max_hops) {
  std::vector<GraphPath> out;
  GraphPath cur;
  cur.verts.push_back(from);
  std::vector<char> seen(g.verts.size(), 0);
  seen[from] = 1;
  auto dfs = [&](auto&& self, int v) -> void {
    if (v == to && !cur.steps.empty()) {
      out.push_back(cur);
      return;
    }
    if (static_cast<int>(cur.steps.size()) == max_hops) return;
    for (int id : g.adj[v]) {
      const auto& e = g.edges[id];
      int w = e.u == v ? e.v : e.u;
      if (seen[w]) continue;
      seen[w] = 1;
      cur.verts.push_back(w);
      cur.steps.push_back({id, e.u == v});
      self(self, w);
      cur.steps.pop_back();
      cur.verts.pop_back();
      seen[w] = 0;
    }
  };
  dfs(dfs, from);
  return out;
}

std::optional<GraphPath> shortest_path(const UniverseGraph& g, int from, int to) {
  if (from == to) return GraphPath{{from}, {}};
  std::vector<int> via_edge(g.verts.size(), -1), via_vert(g.verts.size(), -1);
  std::vector<char> seen(g.verts.size(), 0);
  std::vector<int> queue = {from};
  seen[from] = 1;
  for (size_t qi = 0; qi < queue.size(); ++qi) {
    int v = queue[qi];
    for (int id : g.adj[v]) {
      const auto& e = g.edges[id];
      int w = e.u == v ? e.v : e.u;
      if (seen[w]) continue;
      seen[w] = 1;
      via_edge[w] = id;
      via_vert[w] = v;
      if (w == to) {
        GraphPath p;
        std::vector<int> rv = {w};
        std::vector<PathStep> rs;
        while (rv.back() != from) {
          int x = rv.back();
          rs.push_back({via_edge[x], g.edges[via_edge[x]].u == via_vert[x]});
          rv.push_back(via_vert[x]);
        }
        std::reverse(rv.begin(), rv.end());
        std::reverse(rs.begin(), rs.end());
        p.verts = rv;
        p.steps = rs;
        return p;
      }
      queue.push_back(w);
    }
  }
  return std::nullopt;
}

std::optional<long long> signed_distance(const UniverseGraph& g, int from, int to) {
  auto p = shortest_path(g, from, to);
  if (!p) return std::nullopt;
  return signed_length(g, *p);
}

PreimageTrace trace_preimage(const UniverseGraph& g, const GraphPath& p, const FatGraph& fg) {
  std::vector<FreeWord> words;
  std::vector<int> joint_index(g.verts.size(), -1);
  for (int v : p.verts)
    if (joint_index[v] < 0) {
      joint_index[v] = static_cast<int>(words.size());
      words.push_back(g.verts[v].w);
    }
  PreimageTrace tr{build_curve_complex(words, fg, !g.spec.bordered),
                   ConstructibleFunction{}};
  tr.density = ConstructibleFunction::zero_for(tr.joint.cx);
  for (const PathStep& s : p.steps) {
    const auto& e = g.edges[s.edge];
    auto pieces = pair_pieces(tr.joint, joint_index[e.u], joint_index[e.v]);
    const SubsurfacePiece* match = nullptr;
    for (const SubsurfacePiece& q : pieces) {
      if (q.sign != e.sign || q.genus != e.genus) continue;
      if (match) throw std::logic_error("trace_preimage: ambiguous piece for a path step");
      match = &q;
    }
    if (!match) throw std::logic_error("trace_preimage: step piece vanished on the joint complex");
    ConstructibleFunction ind = ConstructibleFunction::indicator(match->cells);
    ind *= (s.forward ? e.sign : -e.sign);
    tr.density += ind;
  }
  return tr;
}

bool verify_length_vs_integral(const UniverseGraph& g, const GraphPath& p, const FatGraph& fg) {
  PreimageTrace tr = trace_preimage(g, p, fg);
  return euler_integral(tr.density) == -2 * signed_length(g, p);
}

}  // namespace torelli
