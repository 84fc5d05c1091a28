#include "torelli/homology.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace torelli {

static void check_same_rank(const HomologyClass& a, const HomologyClass& b) {
  if (a.c.size() != b.c.size())
    throw std::invalid_argument("HomologyClass: rank mismatch");
}

bool HomologyClass::is_zero() const {
  return std::all_of(c.begin(), c.end(), [](long long v) { return v == 0; });
}

HomologyClass& HomologyClass::operator+=(const HomologyClass& o) {
  check_same_rank(*this, o);
  for (size_t i = 0; i < c.size(); i++) c[i] += o.c[i];
  return *this;
}

HomologyClass& HomologyClass::operator-=(const HomologyClass& o) {
  check_same_rank(*this, o);
  for (size_t i = 0; i < c.size(); i++) c[i] -= o.c[i];
  return *this;
}

HomologyClass& HomologyClass::operator*=(long long k) {
  for (auto& v : c) v *= k;
  return *this;
}

HomologyClass operator+(HomologyClass a, const HomologyClass& b) { return a += b; }
HomologyClass operator-(HomologyClass a, const HomologyClass& b) { return a -= b; }
HomologyClass operator*(long long k, HomologyClass a) { return a *= k; }
HomologyClass operator-(HomologyClass a) { return a *= -1; }

HomologyClass zero_class(int g) { return HomologyClass(std::vector<long long>(2 * g, 0)); }

HomologyClass basis_class(int g, int i) {
  if (i < 0 || i >= 2 * g) throw std::out_of_range("basis_class: bad index");
  auto h = zero_class(g);
  h[i] = 1;
  return h;
}

std::string basis_name(int g, int i) {
  std::ostringstream os;
  if (i < g)
    os << "a" << (i + 1);
  else
    os << "b" << (i - g + 1);
  return os.str();
}

std::string class_str(const HomologyClass& h) {
  std::ostringstream os;
  os << "(";
  for (int i = 0; i < h.rank(); i++) os << (i ? "," : "") << h[i];
  os << ")";
  return os.str();
}

long long intersection_pairing(const HomologyClass& x, const HomologyClass& y) {
  check_same_rank(x, y);
  int g = x.genus();
  long long s = 0;
  for (int i = 0; i < g; i++) s += x[i] * y[g + i] - x[g + i] * y[i];
  return s;
}

bool is_primitive(const HomologyClass& h) {
  long long d = 0;
  for (auto v : h.c) d = std::gcd(d, v);
  return d == 1;
}

// ---- TriWedge ---------------------------------------------------------------

void TriWedge::add(int i, int j, int k, long long v) {
  if (v == 0) return;
  if (i == j || j == k || i == k) return;  // repeated index kills the wedge
  int sign = 1;
  // sort the triple with a tiny bubble, tracking the permutation sign
  if (i > j) { std::swap(i, j); sign = -sign; }
  if (j > k) { std::swap(j, k); sign = -sign; }
  if (i > j) { std::swap(i, j); sign = -sign; }
  Tri t{i, j, k};
  long long& slot = coeff[t];
  slot += sign * v;
  if (slot == 0) coeff.erase(t);
}

TriWedge& TriWedge::operator+=(const TriWedge& o) {
  for (const auto& [t, v] : o.coeff) {
    long long& slot = coeff[t];
    slot += v;
    if (slot == 0) coeff.erase(t);
  }
  return *this;
}

TriWedge& TriWedge::operator*=(long long k) {
  if (k == 0) { coeff.clear(); return *this; }
  for (auto& [t, v] : coeff) v *= k;
  return *this;
}

TriWedge operator+(TriWedge a, const TriWedge& b) { return a += b; }
TriWedge operator*(long long k, TriWedge a) { return a *= k; }

TriWedge wedge3(const HomologyClass& u, const HomologyClass& v, const HomologyClass& w) {
  check_same_rank(u, v);
  check_same_rank(u, w);
  int n = u.rank();
  TriWedge out;
  for (int i = 0; i < n; i++) {
    if (u[i] == 0 && v[i] == 0 && w[i] == 0) continue;
    for (int j = i + 1; j < n; j++) {
      for (int k = j + 1; k < n; k++) {
        // 3x3 determinant of the (i,j,k) rows of the column triple (u,v,w)
        long long d = u[i] * (v[j] * w[k] - v[k] * w[j])
                    - v[i] * (u[j] * w[k] - u[k] * w[j])
                    + w[i] * (u[j] * v[k] - u[k] * v[j]);
        if (d) out.add(i, j, k, d);
      }
    }
  }
  return out;
}

TriWedge johnson_bp(const HomologyClass& a,
                    const std::vector<std::pair<HomologyClass, HomologyClass>>& span) {
  if (span.empty() && !a.is_zero())
    throw std::invalid_argument("johnson_bp: empty span (genus-0 pair is not a generator)");
  TriWedge t;
  for (const auto& [x, y] : span) t += wedge3(a, x, y);
  return t;
}

HomologyClass contract(const TriWedge& w, int g) {
  HomologyClass out = zero_class(g);
  auto basis = [g](int i) { return basis_class(g, i); };
  for (const auto& [t, v] : w.coeff) {
    HomologyClass ei = basis(t.i), ej = basis(t.j), ek = basis(t.k);
    long long iij = intersection_pairing(ei, ej);
    long long ijk = intersection_pairing(ej, ek);
    long long iki = intersection_pairing(ek, ei);
    if (iij) out += (2 * v * iij) * ek;
    if (ijk) out += (2 * v * ijk) * ei;
    if (iki) out += (2 * v * iki) * ej;
  }
  return out;
}

// ---- CohomologyClass --------------------------------------------------------

long long mod_reduce(long long v, long long m) {
  if (m == 0) return v;
  long long r = v % m;
  if (r < 0) r += m;
  return r;
}

long long CohomologyClass::eval(const HomologyClass& h) const {
  if (static_cast<int>(dual.size()) != h.rank())
    throw std::invalid_argument("CohomologyClass: rank mismatch");
  long long s = 0;
  for (size_t i = 0; i < dual.size(); i++) s += dual[i] * h.c[i];
  return mod_reduce(s, modulus);
}

CohomologyClass CohomologyClass::reduced() const {
  CohomologyClass r = *this;
  for (auto& v : r.dual) v = mod_reduce(v, modulus);
  return r;
}

bool CohomologyClass::equal_mod(const CohomologyClass& o) const {
  if (dual.size() != o.dual.size() || modulus != o.modulus) return false;
  for (size_t i = 0; i < dual.size(); i++)
    if (mod_reduce(dual[i], modulus) != mod_reduce(o.dual[i], modulus)) return false;
  return true;
}

CohomologyClass zero_cohomology(int g, long long modulus) {
  return CohomologyClass{std::vector<long long>(2 * g, 0), modulus};
}

CohomologyClass dual_of(const HomologyClass& c, long long modulus) {
  int g = c.genus();
  CohomologyClass e = zero_cohomology(g, modulus);
  for (int i = 0; i < 2 * g; i++)
    e.dual[i] = mod_reduce(intersection_pairing(c, basis_class(g, i)), modulus);
  return e;
}

CohomologyClass closed_surface_reduce(const CohomologyClass& e, int g) {
  if (e.modulus != 0)
    throw std::invalid_argument("closed_surface_reduce: input must be exact");
  CohomologyClass r = e;
  r.modulus = 2 * g - 2;
  return r.reduced();
}

CohomologyClass chillingworth_from_johnson(const std::vector<BoundingPairDatum>& factors,
                                           const SurfaceSpec& spec) {
  int g = spec.genus;
  TriWedge t;
  for (const auto& f : factors) {
    if (f.sign != 1 && f.sign != -1)
      throw std::invalid_argument("chillingworth_from_johnson: sign must be +-1");
    t += f.sign * johnson_bp(f.a_class, f.span);
  }
  HomologyClass c = contract(t, g);
  return dual_of(c, spec.chillingworth_modulus());
}

// ---- matrices ---------------------------------------------------------------

IntMat identity_mat(int n) {
  IntMat m(n, std::vector<long long>(n, 0));
  for (int i = 0; i < n; i++) m[i][i] = 1;
  return m;
}

bool is_identity_mat(const IntMat& m) {
  int n = static_cast<int>(m.size());
  for (int i = 0; i < n; i++)
    for (int j = 0; j < n; j++)
      if (m[i][j] != (i == j ? 1 : 0)) return false;
  return true;
}

IntMat mat_mul(const IntMat& a, const IntMat& b) {
  int n = static_cast<int>(a.size());
  IntMat out(n, std::vector<long long>(n, 0));
  for (int i = 0; i < n; i++)
    for (int k = 0; k < n; k++) {
      long long v = a[i][k];
      if (!v) continue;
      for (int j = 0; j < n; j++) out[i][j] += v * b[k][j];
    }
  return out;
}

HomologyClass mat_apply(const IntMat& m, const HomologyClass& h) {
  int n = h.rank();
  HomologyClass out = zero_class(h.genus());
  for (int i = 0; i < n; i++)
    for (int j = 0; j < n; j++) out[i] += m[i][j] * h[j];
  return out;
}

bool is_symplectic(const IntMat& m) {
  int n = static_cast<int>(m.size());
  int g = n / 2;
  // columns of m are the images of the basis; check pairwise pairings survive
  auto col = [&](int j) {
    HomologyClass h = zero_class(g);
    for (int i = 0; i < n; i++) h[i] = m[i][j];
    return h;
  };
  for (int i = 0; i < n; i++) {
    HomologyClass ci = col(i);
    for (int j = i + 1; j < n; j++) {
      long long want = intersection_pairing(basis_class(g, i), basis_class(g, j));
      if (intersection_pairing(ci, col(j)) != want) return false;
    }
  }
  return true;
}

}  // namespace torelli
