#include "torelli/euler.hpp"

#include <algorithm>
#include <cstdlib>
#include <sstream>
#include <stdexcept>

namespace torelli {

std::vector<char> CellComplex::boundary_edge_flags() const {
  std::vector<char> fl(edges.size(), 0);
  for (int s : boundary) fl[std::abs(s) - 1] = 1;
  return fl;
}

std::vector<char> CellComplex::boundary_vertex_flags() const {
  std::vector<char> fl(nverts, 0);
  for (int s : boundary) {
    int e = std::abs(s) - 1;
    fl[edges[e][0]] = 1;
    fl[edges[e][1]] = 1;
  }
  return fl;
}

static void fail(const std::string& msg) { throw std::runtime_error("CellComplex: " + msg); }

void CellComplex::validate() const {
  for (const auto& e : edges)
    if (e[0] < 0 || e[0] >= nverts || e[1] < 0 || e[1] >= nverts)
      fail("edge endpoint out of range");
  // usage[e][0] = forward traversals, [1] = backward, by faces
  std::vector<std::array<int, 2>> usage(edges.size(), {0, 0});
  for (const auto& fc : faces) {
    if (fc.empty()) fail("empty face cycle");
    for (size_t i = 0; i < fc.size(); i++) {
      int s = fc[i];
      if (s == 0 || std::abs(s) > nedges()) fail("face references bad edge");
      usage[std::abs(s) - 1][s > 0 ? 0 : 1]++;
      int nxt = fc[(i + 1) % fc.size()];
      if (dir_head(s) != dir_tail(nxt)) fail("face cycle does not close");
    }
  }
  std::vector<std::array<int, 2>> busage(edges.size(), {0, 0});
  for (int s : boundary) {
    if (s == 0 || std::abs(s) > nedges()) fail("boundary references bad edge");
    busage[std::abs(s) - 1][s > 0 ? 0 : 1]++;
  }
  for (size_t e = 0; e < edges.size(); e++) {
    int ff = usage[e][0], fb = usage[e][1];
    int bf = busage[e][0], bb = busage[e][1];
    if (ff > 1 || fb > 1 || bf > 1 || bb > 1) fail("edge direction covered twice");
    int total = ff + fb + bf + bb;
    if (faces.empty()) continue;  // 1-dimensional fixtures carry no face data
    if (total != 2) fail("edge not covered exactly twice");
    if (bf + bb > 0 && ff + fb != 1) fail("boundary edge must have one face side");
  }
}

void CellComplex::validate_surface(const SurfaceSpec& spec) const {
  validate();
  long long want = spec.bordered ? 1 - 2 * spec.genus : 2 - 2 * spec.genus;
  if (chi() != want) {
    std::ostringstream os;
    os << "chi mismatch: " << chi() << " vs " << want;
    fail(os.str());
  }
  if (spec.bordered && boundary.empty()) fail("bordered surface without boundary cycle");
  if (!spec.bordered && !boundary.empty()) fail("closed surface with boundary cells");
}

// ---- tame sets --------------------------------------------------------------

TameSet TameSet::empty_for(const CellComplex& cx) {
  return TameSet{std::vector<char>(cx.nverts, 0), std::vector<char>(cx.edges.size(), 0),
                 std::vector<char>(cx.faces.size(), 0)};
}

TameSet TameSet::all_of(const CellComplex& cx) {
  return TameSet{std::vector<char>(cx.nverts, 1), std::vector<char>(cx.edges.size(), 1),
                 std::vector<char>(cx.faces.size(), 1)};
}

TameSet TameSet::interior_of(const CellComplex& cx) {
  TameSet u = all_of(cx);
  auto be = cx.boundary_edge_flags();
  auto bv = cx.boundary_vertex_flags();
  for (size_t i = 0; i < be.size(); i++)
    if (be[i]) u.e[i] = 0;
  for (size_t i = 0; i < bv.size(); i++)
    if (bv[i]) u.v[i] = 0;
  return u;
}

static std::vector<char> zip(const std::vector<char>& a, const std::vector<char>& b, bool is_or) {
  if (a.size() != b.size()) throw std::invalid_argument("TameSet: different complexes");
  std::vector<char> out(a.size());
  for (size_t i = 0; i < a.size(); i++) out[i] = is_or ? (a[i] | b[i]) : (a[i] & b[i]);
  return out;
}

TameSet TameSet::unite(const TameSet& o) const {
  return TameSet{zip(v, o.v, true), zip(e, o.e, true), zip(f, o.f, true)};
}

TameSet TameSet::intersect(const TameSet& o) const {
  return TameSet{zip(v, o.v, false), zip(e, o.e, false), zip(f, o.f, false)};
}

TameSet TameSet::complement_in(const CellComplex& cx) const {
  TameSet out = all_of(cx);
  for (size_t i = 0; i < v.size(); i++) out.v[i] = !v[i];
  for (size_t i = 0; i < e.size(); i++) out.e[i] = !e[i];
  for (size_t i = 0; i < f.size(); i++) out.f[i] = !f[i];
  return out;
}

bool TameSet::disjoint_from(const TameSet& o) const {
  auto any = [](const std::vector<char>& a, const std::vector<char>& b) {
    for (size_t i = 0; i < a.size(); i++)
      if (a[i] && b[i]) return true;
    return false;
  };
  return !any(v, o.v) && !any(e, o.e) && !any(f, o.f);
}

long long TameSet::cell_count() const {
  auto cnt = [](const std::vector<char>& a) {
    return std::count(a.begin(), a.end(), static_cast<char>(1));
  };
  return cnt(v) + cnt(e) + cnt(f);
}

// ---- constructible functions ------------------------------------------------

ConstructibleFunction ConstructibleFunction::zero_for(const CellComplex& cx) {
  return ConstructibleFunction{std::vector<long long>(cx.nverts, 0),
                               std::vector<long long>(cx.edges.size(), 0),
                               std::vector<long long>(cx.faces.size(), 0)};
}

ConstructibleFunction ConstructibleFunction::indicator(const TameSet& u) {
  ConstructibleFunction ff;
  ff.v.assign(u.v.begin(), u.v.end());
  ff.e.assign(u.e.begin(), u.e.end());
  ff.f.assign(u.f.begin(), u.f.end());
  return ff;
}

ConstructibleFunction& ConstructibleFunction::operator+=(const ConstructibleFunction& o) {
  if (v.size() != o.v.size() || e.size() != o.e.size() || f.size() != o.f.size())
    throw std::invalid_argument("ConstructibleFunction: different complexes");
  for (size_t i = 0; i < v.size(); i++) v[i] += o.v[i];
  for (size_t i = 0; i < e.size(); i++) e[i] += o.e[i];
  for (size_t i = 0; i < f.size(); i++) f[i] += o.f[i];
  return *this;
}

ConstructibleFunction& ConstructibleFunction::operator*=(long long k) {
  for (auto& x : v) x *= k;
  for (auto& x : e) x *= k;
  for (auto& x : f) x *= k;
  return *this;
}

bool ConstructibleFunction::is_zero() const {
  auto z = [](const std::vector<long long>& a) {
    return std::all_of(a.begin(), a.end(), [](long long x) { return x == 0; });
  };
  return z(v) && z(e) && z(f);
}

ConstructibleFunction operator+(ConstructibleFunction a, const ConstructibleFunction& b) {
  return a += b;
}
ConstructibleFunction operator*(long long k, ConstructibleFunction a) { return a *= k; }

long long euler_char(const TameSet& u) {
  long long s = 0;
  for (char x : u.v) s += x;
  for (char x : u.e) s -= x;
  for (char x : u.f) s += x;
  return s;
}

long long euler_integral(const ConstructibleFunction& ff) {
  long long s = 0;
  for (long long x : ff.v) s += x;
  for (long long x : ff.e) s -= x;
  for (long long x : ff.f) s += x;
  return s;
}

long long signed_genus(const ConstructibleFunction& ff) {
  long long i = euler_integral(ff);
  if (i % 2 != 0)
    throw std::runtime_error("signed_genus: odd Euler integral, pre-image function malformed");
  return -i / 2;
}

// ---- refinement ---------------------------------------------------------------

Refined refine(const CellComplex& cx) {
  Refined r;
  CellComplex& out = r.cx;
  int E = cx.nedges();

  out.nverts = cx.nverts + E + cx.nfaces();
  for (int i = 0; i < cx.nverts; i++) r.vparent.push_back({0, i});
  for (int e = 0; e < E; e++) r.vparent.push_back({1, e});
  for (int f = 0; f < cx.nfaces(); f++) r.vparent.push_back({2, f});
  auto mid = [&](int e) { return cx.nverts + e; };
  auto center = [&](int f) { return cx.nverts + E + f; };

  // halves of old edges: 2e = first half (tail->mid), 2e+1 = second (mid->head)
  for (int e = 0; e < E; e++) {
    out.edges.push_back({cx.edges[e][0], mid(e)});
    out.edges.push_back({mid(e), cx.edges[e][1]});
    r.eparent.push_back({1, e});
    r.eparent.push_back({1, e});
  }
  // arcs of a directed edge s, in traversal order, as signed refined ids
  auto arcs = [&](int s) -> std::array<int, 2> {
    int e = std::abs(s) - 1;
    int h1 = 2 * e + 1, h2 = 2 * e + 2;  // 1-based refined ids
    if (s > 0) return {h1, h2};
    return {-h2, -h1};
  };

  for (int f = 0; f < cx.nfaces(); f++) {
    const auto& fc = cx.faces[f];
    int L = static_cast<int>(fc.size());
    // boundary points of the 2L-gon in order: tail(d), mid(d) for each step
    std::vector<int> pts;
    std::vector<int> seg;  // 1-based signed refined arc from pts[j] to pts[j+1]
    for (int idx = 0; idx < L; idx++) {
      int s = fc[idx];
      auto [a1, a2] = arcs(s);
      pts.push_back(cx.dir_tail(s));
      seg.push_back(a1);
      pts.push_back(mid(std::abs(s) - 1));
      seg.push_back(a2);
    }
    int n = 2 * L;
    // spokes center -> pts[j]
    std::vector<int> spoke(n);
    for (int j = 0; j < n; j++) {
      spoke[j] = out.nedges() + 1;  // 1-based id of the edge being added
      out.edges.push_back({center(f), pts[j]});
      r.eparent.push_back({2, f});
    }
    for (int j = 0; j < n; j++) {
      int jn = (j + 1) % n;
      out.faces.push_back({spoke[j], seg[j], -spoke[jn]});
      r.fparent.push_back({2, f});
    }
  }

  for (int s : cx.boundary) {
    auto [a1, a2] = arcs(s);
    out.boundary.push_back(a1);
    out.boundary.push_back(a2);
  }
  return r;
}

ConstructibleFunction transfer(const Refined& r, const ConstructibleFunction& ff) {
  ConstructibleFunction out = ConstructibleFunction::zero_for(r.cx);
  auto val = [&](const std::array<int, 2>& p) {
    return p[0] == 0 ? ff.v[p[1]] : p[0] == 1 ? ff.e[p[1]] : ff.f[p[1]];
  };
  for (size_t i = 0; i < r.vparent.size(); i++) out.v[i] = val(r.vparent[i]);
  for (size_t i = 0; i < r.eparent.size(); i++) out.e[i] = val(r.eparent[i]);
  for (size_t i = 0; i < r.fparent.size(); i++) out.f[i] = val(r.fparent[i]);
  return out;
}

TameSet transfer(const Refined& r, const TameSet& u) {
  TameSet out = TameSet::empty_for(r.cx);
  auto val = [&](const std::array<int, 2>& p) -> char {
    return p[0] == 0 ? u.v[p[1]] : p[0] == 1 ? u.e[p[1]] : u.f[p[1]];
  };
  for (size_t i = 0; i < r.vparent.size(); i++) out.v[i] = val(r.vparent[i]);
  for (size_t i = 0; i < r.eparent.size(); i++) out.e[i] = val(r.eparent[i]);
  for (size_t i = 0; i < r.fparent.size(); i++) out.f[i] = val(r.fparent[i]);
  return out;
}

// ---- canonical models ---------------------------------------------------------

CellComplex canonical_surface_complex(const SurfaceSpec& spec) {
  CellComplex cx;
  int g = spec.genus;
  cx.nverts = 1;
  for (int i = 0; i < 2 * g; i++) cx.edges.push_back({0, 0});
  std::vector<int> face;
  for (int k = 0; k < g; k++) {
    int a = 2 * k + 1, b = 2 * k + 2;  // 1-based ids
    face.push_back(a);
    face.push_back(b);
    face.push_back(-a);
    face.push_back(-b);
  }
  if (spec.bordered) {
    cx.edges.push_back({0, 0});
    int d = 2 * g + 1;
    face.push_back(-d);
    cx.boundary.push_back(d);
  }
  cx.faces.push_back(face);
  cx.validate_surface(spec);
  return cx;
}

CellComplex point_complex() {
  CellComplex cx;
  cx.nverts = 1;
  return cx;
}

CellComplex interval_complex() {
  CellComplex cx;
  cx.nverts = 2;
  cx.edges.push_back({0, 1});
  return cx;
}

PieceFixture genus1_two_boundary_piece() {
  CellComplex cx;
  cx.nverts = 2;           // 0 sits on the first boundary circle, 1 on the second
  cx.edges.push_back({0, 0});  // 1: a
  cx.edges.push_back({0, 0});  // 2: b
  cx.edges.push_back({0, 0});  // 3: first boundary circle
  cx.edges.push_back({1, 1});  // 4: second boundary circle
  cx.edges.push_back({0, 1});  // 5: connecting arc
  cx.faces.push_back({1, 2, -1, -2, 3, 5, 4, -5});
  cx.boundary = {-3, -4};
  cx.validate();
  TameSet u = TameSet::interior_of(cx);
  return PieceFixture{cx, u};
}

}  // namespace torelli
