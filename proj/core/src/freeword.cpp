#include "torelli/freeword.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace torelli {

bool is_reduced(const FreeWord& w) {
  for (size_t i = 0; i + 1 < w.size(); i++)
    if (w[i] == -w[i + 1]) return false;
  return true;
}

FreeWord reduced(FreeWord w) {
  FreeWord out;
  out.reserve(w.size());
  for (Letter l : w) {
    if (l == 0) throw std::invalid_argument("reduced: zero letter");
    if (!out.empty() && out.back() == -l)
      out.pop_back();
    else
      out.push_back(l);
  }
  return out;
}

FreeWord cyclically_reduced(FreeWord w) {
  w = reduced(std::move(w));
  size_t lo = 0, hi = w.size();
  while (hi - lo >= 2 && w[lo] == -w[hi - 1]) { lo++; hi--; }
  return FreeWord(w.begin() + lo, w.begin() + hi);
}

FreeWord inverse(const FreeWord& w) {
  FreeWord out(w.rbegin(), w.rend());
  for (auto& l : out) l = -l;
  return out;
}

FreeWord concat(const FreeWord& a, const FreeWord& b) {
  FreeWord out = a;
  out.insert(out.end(), b.begin(), b.end());
  return reduced(std::move(out));
}

FreeWord power(const FreeWord& w, int n) {
  FreeWord base = n >= 0 ? w : inverse(w);
  FreeWord out;
  for (int i = 0; i < std::abs(n); i++) out = concat(out, base);
  return out;
}

FreeWord commutator(const FreeWord& a, const FreeWord& b) {
  return concat(concat(a, b), concat(inverse(a), inverse(b)));
}

int band_of_basis(int g, int basis_index) {
  if (basis_index < 0 || basis_index >= 2 * g)
    throw std::out_of_range("band_of_basis: bad index");
  return basis_index < g ? 2 * basis_index + 1 : 2 * (basis_index - g) + 2;
}

FreeWord basis_loop(int g, int basis_index) {
  return FreeWord{static_cast<Letter>(band_of_basis(g, basis_index))};
}

FreeWord boundary_word(int g) {
  FreeWord w;
  for (int k = 1; k <= g; k++) {
    Letter a = static_cast<Letter>(2 * k - 1), b = static_cast<Letter>(2 * k);
    w.push_back(a); w.push_back(b);
    w.push_back(-a); w.push_back(-b);
  }
  return w;
}

HomologyClass homology_of(const FreeWord& w, int g) {
  HomologyClass h = zero_class(g);
  for (Letter l : w) {
    int band = std::abs(l);
    if (band < 1 || band > 2 * g) throw std::invalid_argument("homology_of: letter out of range");
    int idx = (band % 2 == 1) ? (band - 1) / 2 : g + band / 2 - 1;
    h[idx] += (l > 0) ? 1 : -1;
  }
  return h;
}

bool is_proper_power(const FreeWord& w) {
  size_t n = w.size();
  if (n == 0) return false;
  for (size_t d = 1; d <= n / 2; d++) {
    if (n % d) continue;
    bool ok = true;
    for (size_t i = 0; i < n && ok; i++) ok = w[i] == w[(i + d) % n];
    if (ok) return true;
  }
  return false;
}

FreeWord canonical_rotation(const FreeWord& w) {
  if (w.empty()) return w;
  size_t n = w.size();
  size_t best = 0;
  for (size_t r = 1; r < n; r++) {
    for (size_t i = 0; i < n; i++) {
      Letter x = w[(r + i) % n], y = w[(best + i) % n];
      if (x != y) {
        if (x < y) best = r;
        break;
      }
    }
  }
  FreeWord out(n);
  for (size_t i = 0; i < n; i++) out[i] = w[(best + i) % n];
  return out;
}

bool cyclic_equal(const FreeWord& a, const FreeWord& b) {
  if (a.size() != b.size()) return false;
  return canonical_rotation(a) == canonical_rotation(b);
}

FreeWord parse_word(const std::string& s, int g) {
  FreeWord w;
  std::istringstream is(s);
  std::string tok;
  while (is >> tok) {
    if (tok.size() < 2 || (tok[0] != 'x' && tok[0] != 'X'))
      throw std::invalid_argument("parse_word: bad token '" + tok + "'");
    int idx = 0;
    for (size_t i = 1; i < tok.size(); i++) {
      if (!isdigit(static_cast<unsigned char>(tok[i])))
        throw std::invalid_argument("parse_word: bad token '" + tok + "'");
      idx = idx * 10 + (tok[i] - '0');
    }
    if (idx < 1 || idx > 2 * g)
      throw std::invalid_argument("parse_word: generator index out of range in '" + tok + "'");
    w.push_back(static_cast<Letter>(tok[0] == 'x' ? idx : -idx));
  }
  return w;
}

std::string word_str(const FreeWord& w) {
  std::ostringstream os;
  for (size_t i = 0; i < w.size(); i++) {
    if (i) os << ' ';
    os << (w[i] > 0 ? 'x' : 'X') << std::abs(w[i]);
  }
  return os.str();
}

}  // namespace torelli
