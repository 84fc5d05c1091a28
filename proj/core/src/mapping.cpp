#include "torelli/mapping.hpp"

#include <stdexcept>

namespace torelli {

MappingClass MappingClass::identity(int g) {
  MappingClass f;
  f.g = g;
  for (int i = 1; i <= 2 * g; ++i) {
    f.img.push_back({static_cast<Letter>(i)});
    f.inv.push_back({static_cast<Letter>(i)});
  }
  return f;
}

namespace {

FreeWord substitute(const std::vector<FreeWord>& images, const FreeWord& w) {
  FreeWord out;
  for (Letter l : w) {
    const FreeWord& im = images[(l > 0 ? l : -l) - 1];
    if (l > 0)
      out.insert(out.end(), im.begin(), im.end());
    else {
      FreeWord ii = inverse(im);
      out.insert(out.end(), ii.begin(), ii.end());
    }
  }
  return reduced(out);
}

}  // namespace

FreeWord apply_word(const MappingClass& f, const FreeWord& w) { return substitute(f.img, w); }

FreeWord apply_word_inverse(const MappingClass& f, const FreeWord& w) { return substitute(f.inv, w); }

MappingClass compose(const MappingClass& f, const MappingClass& g) {
  if (f.g != g.g) throw std::invalid_argument("compose: genus mismatch");
  MappingClass h;
  h.g = f.g;
  for (int i = 0; i < 2 * h.g; ++i) {
    h.img.push_back(apply_word(f, g.img[i]));        // (f.g)(x) = f(g(x))
    h.inv.push_back(apply_word_inverse(g, f.inv[i]));
  }
  return h;
}

MappingClass inverse_of(const MappingClass& f) {
  MappingClass h;
  h.g = f.g;
  h.img = f.inv;
  h.inv = f.img;
  return h;
}

bool fixes_boundary(const MappingClass& f) {
  FreeWord w = boundary_word(f.g);
  return apply_word(f, w) == w;
}

bool is_valid_automorphism(const MappingClass& f) {
  if (f.g < 1 || f.img.size() != static_cast<size_t>(2 * f.g) || f.inv.size() != f.img.size())
    return false;
  for (int i = 1; i <= 2 * f.g; ++i) {
    FreeWord x = {static_cast<Letter>(i)};
    if (apply_word_inverse(f, apply_word(f, x)) != x) return false;
    if (apply_word(f, apply_word_inverse(f, x)) != x) return false;
  }
  return fixes_boundary(f);
}

IntMat homology_matrix(const MappingClass& f) {
  IntMat m(2 * f.g, std::vector<long long>(2 * f.g, 0));
  for (int j = 0; j < 2 * f.g; ++j) {
    // column j: image of the loop representing the j-th homology basis class
    HomologyClass col = homology_of(f.img[band_of_basis(f.g, j) - 1], f.g);
    for (int r = 0; r < 2 * f.g; ++r) m[r][j] = col.c[r];
  }
  return m;
}

bool is_torelli(const MappingClass& f) { return is_identity_mat(homology_matrix(f)); }

}  // namespace torelli
