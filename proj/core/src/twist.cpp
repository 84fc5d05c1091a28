#include "torelli/twist.hpp"

#include <algorithm>
#include <stdexcept>

#include "torelli/geom.hpp"

namespace torelli {

namespace {

FreeWord rotated(const FreeWord& w, int m) {
  FreeWord out(w.begin() + m, w.end());
  out.insert(out.end(), w.begin(), w.begin() + m);
  return out;
}

// Point layout for one generator loop: the circle points of c's own diagram,
// the two slot points of the based strand through band j (first at the o end,
// last at the t end, so the strand stays parallel to c inside the band), and
// the two basepoint points at the very end of the circle.
struct Layout {
  int n = 0;
  std::vector<int> cpt_o, cpt_t;  // rank per c-passage endpoint
  int based_o = -1, based_t = -1;
  int in_pt = -1, out_pt = -1;  // chi_in arrival, chi_out departure
};

Layout make_layout(const ChordDiagram& d, int j) {
  Layout ly;
  ly.cpt_o.assign(d.passages.size(), -1);
  ly.cpt_t.assign(d.passages.size(), -1);
  for (int p = 0; p < 4 * d.fg.g; ++p) {
    int s = d.fg.at(p);
    int band = stub_band(s);
    bool o_end = stub_is_o(s);
    if (o_end && s == stub_o(j)) ly.based_o = ly.n++;
    const auto& list = o_end ? d.slots_o[band - 1] : d.slots_t[band - 1];
    for (int pid : list) (o_end ? ly.cpt_o : ly.cpt_t)[pid] = ly.n++;
    if (!o_end && s == stub_t(j)) ly.based_t = ly.n++;
  }
  ly.in_pt = ly.n++;
  ly.out_pt = ly.n++;
  return ly;
}

bool interleave(int a, int b, int u, int v) {
  int a1 = std::min(a, b), b1 = std::max(a, b);
  bool in_u = a1 < u && u < b1;
  bool in_v = a1 < v && v < b1;
  return in_u != in_v;
}

// +1 when, walking ccw from the c-chord's tail, the crossing strand enters
// before c's head and leaves after it; -1 for the mirror pattern
int crossing_sign(int c_from, int c_to, int x_from, int x_to, int n) {
  auto rel = [&](int x) { return ((x - c_from) % n + n) % n; };
  int rf = rel(x_from), rt = rel(x_to), rc = rel(c_to);
  if (rf < rc && rc < rt) return 1;
  if (rt < rc && rc < rf) return -1;
  throw std::logic_error("crossing_sign: endpoints do not interleave");
}

struct Insertion {
  ChordParam where;
  int letter;  // chord leads into this letter of c
  int sign;
};

// insertions along the directed chord u -> v, in crossing order
std::vector<Insertion> crossings_along(const ChordDiagram& d, const Layout& ly, int u, int v) {
  std::vector<Insertion> ins;
  CirclePt U = circle_point(u, ly.n), V = circle_point(v, ly.n);
  const FreeWord& c = d.words[0];
  int L = static_cast<int>(c.size());
  for (int m = 0; m < L; ++m) {
    int prev = (m + L - 1) % L;
    int a = c[prev] > 0 ? ly.cpt_t[prev] : ly.cpt_o[prev];  // arrival of letter m-1
    int b = c[m] > 0 ? ly.cpt_o[m] : ly.cpt_t[m];           // departure of letter m
    if (!interleave(a, b, u, v)) continue;
    ChordParam s = cross_param(U, V, circle_point(a, ly.n), circle_point(b, ly.n));
    ins.push_back({s, m, crossing_sign(a, b, u, v, ly.n)});
  }
  std::sort(ins.begin(), ins.end(),
            [](const Insertion& x, const Insertion& y) { return param_less(x.where, y.where); });
  for (size_t i = 1; i < ins.size(); ++i)
    if (param_equal(ins[i - 1].where, ins[i].where))
      throw std::logic_error("dehn_twist: concurrent crossings on a simple curve");
  return ins;
}

FreeWord splice(const FreeWord& c, const std::vector<Insertion>& ins, int orient) {
  FreeWord out;
  for (const Insertion& i : ins) {
    FreeWord piece = rotated(c, i.letter);
    if (i.sign * orient < 0) piece = inverse(piece);
    out.insert(out.end(), piece.begin(), piece.end());
  }
  return out;
}

FreeWord twisted_generator(const ChordDiagram& d, int j, int orient) {
  Layout ly = make_layout(d, j);
  FreeWord w = splice(d.words[0], crossings_along(d, ly, ly.out_pt, ly.based_o), orient);
  w.push_back(static_cast<Letter>(j));
  FreeWord tail = splice(d.words[0], crossings_along(d, ly, ly.based_t, ly.in_pt), orient);
  w.insert(w.end(), tail.begin(), tail.end());
  return reduced(w);
}

}  // namespace

MappingClass dehn_twist(const FreeWord& c, const FatGraph& fg) {
  AdmissibilityReport rep = admissibility(c, fg);
  if (!rep.ok) throw std::invalid_argument("dehn_twist: not a simple curve: " + rep.reason);
  ChordDiagram d = build_diagram({cyclically_reduced(c)}, fg);
  MappingClass f;
  f.g = fg.g;
  for (int j = 1; j <= 2 * fg.g; ++j) {
    f.img.push_back(twisted_generator(d, j, +1));
    f.inv.push_back(twisted_generator(d, j, -1));
  }
  if (!is_valid_automorphism(f)) throw std::logic_error("dehn_twist: produced a non-automorphism");
  return f;
}

MappingClass dehn_twist_power(const FreeWord& c, int power, const FatGraph& fg) {
  MappingClass t = dehn_twist(c, fg);
  if (power < 0) {
    t = inverse_of(t);
    power = -power;
  }
  MappingClass out = MappingClass::identity(fg.g);
  for (int i = 0; i < power; ++i) out = compose(t, out);
  return out;
}

IntMat transvection_matrix(const HomologyClass& c) {
  int n = c.rank();
  IntMat m(n, std::vector<long long>(n, 0));
  for (int j = 0; j < n; ++j) {
    HomologyClass e = basis_class(c.genus(), j);
    HomologyClass img = e - intersection_pairing(c, e) * c;
    for (int r = 0; r < n; ++r) m[r][j] = img.c[r];
  }
  return m;
}

}  // namespace torelli
