#include "torelli/winding.hpp"

#include <random>
#include <set>
#include <stdexcept>

#include "torelli/chords.hpp"

namespace torelli {

namespace {

int posmod(long long v, int m) { return static_cast<int>(((v % m) + m) % m); }

// representative of v in (-N/2, N/2]
int principal(long long v, int N) {
  int r = posmod(v, N);
  return r > N / 2 ? r - N : r;
}

}  // namespace

PlanarImmersion PlanarImmersion::standard(const FatGraph& fg) {
  PlanarImmersion im;
  im.unit = 4 * fg.g;
  im.angles.assign(4 * fg.g, 0);
  for (int j = 0; j < 4 * fg.g; ++j) im.angles[fg.order[j]] = j;
  im.band_turns.assign(2 * fg.g, 0);
  im.validate(fg);
  return im;
}

PlanarImmersion PlanarImmersion::alternate(const FatGraph& fg) {
  PlanarImmersion im;
  im.unit = 8 * fg.g;
  im.angles.assign(4 * fg.g, 0);
  for (int j = 0; j < 4 * fg.g; ++j) im.angles[fg.order[j]] = 2 * j + (j % 2);
  im.band_turns.assign(2 * fg.g, 0);
  for (int i = 0; i < 2 * fg.g; ++i) im.band_turns[i] = (i % 3) - 1;
  im.validate(fg);
  return im;
}

void PlanarImmersion::validate(const FatGraph& fg) const {
  if (unit < 4 * fg.g || unit % 2 != 0) throw std::invalid_argument("immersion: bad angle unit");
  if (angles.size() != static_cast<size_t>(4 * fg.g) ||
      band_turns.size() != static_cast<size_t>(2 * fg.g))
    throw std::invalid_argument("immersion: wrong table sizes");
  for (int j = 0; j < 4 * fg.g; ++j) {
    int th = angles[fg.at(j)];
    if (th < 0 || th >= unit) throw std::invalid_argument("immersion: angle out of range");
    if (j > 0 && th <= angles[fg.at(j - 1)])
      throw std::invalid_argument("immersion: angles must increase along the vertex order");
  }
}

namespace {

long long band_turn(const PlanarImmersion& im, Letter l) {
  int band = l > 0 ? l : -l;
  long long base = principal(im.angles[stub_t(band)] + im.unit / 2 - im.angles[stub_o(band)], im.unit) +
                   static_cast<long long>(im.band_turns[band - 1]) * im.unit;
  return l > 0 ? base : -base;
}

long long vertex_turn(const PlanarImmersion& im, int arr, int dep) {
  return posmod(im.angles[dep] - im.angles[arr], im.unit) - im.unit / 2;
}

}  // namespace

long long total_turning(const FreeWord& cyc, const FatGraph& fg, const PlanarImmersion& im) {
  FreeWord w = cyclically_reduced(cyc);
  if (w.empty()) throw std::invalid_argument("total_turning: trivial word");
  im.validate(fg);
  long long total = 0;
  int L = static_cast<int>(w.size());
  for (int m = 0; m < L; ++m) {
    total += band_turn(im, w[m]);
    total += vertex_turn(im, arr_stub(w[m]), dep_stub(w[(m + 1) % L]));
  }
  if (total % im.unit != 0) throw std::logic_error("total_turning: tangent did not close up");
  return total;
}

long long winding_number(const FreeWord& cyc, const FatGraph& fg, const PlanarImmersion& im) {
  AdmissibilityReport rep = admissibility(cyc, fg);
  if (!rep.ok) throw std::invalid_argument("winding_number: not a simple curve: " + rep.reason);
  return total_turning(cyc, fg, im) / im.unit;
}

long long chillingworth_eval(const MappingClass& f, const FreeWord& curve, const FatGraph& fg,
                             const PlanarImmersion& im) {
  return winding_number(curve, fg, im) - winding_number(apply_word(f, curve), fg, im);
}

CohomologyClass chillingworth_winding_class(const MappingClass& f, const SurfaceSpec& spec,
                                            const FatGraph& fg, const PlanarImmersion& im) {
  CohomologyClass e;
  e.modulus = spec.chillingworth_modulus();
  e.dual.resize(2 * spec.genus);
  for (int j = 0; j < 2 * spec.genus; ++j)
    e.dual[j] = chillingworth_eval(f, basis_loop(spec.genus, j), fg, im);
  return e.reduced();
}

std::vector<FreeWord> random_simple_words(const FatGraph& fg, int count, int max_len, unsigned seed) {
  std::mt19937 rng(seed);
  std::uniform_int_distribution<int> len_d(1, max_len);
  std::uniform_int_distribution<int> let_d(0, 4 * fg.g - 1);
  std::vector<FreeWord> out;
  std::set<FreeWord> seen;
  long long attempts = 0, cap = 2000LL * count;
  while (static_cast<int>(out.size()) < count) {
    if (++attempts > cap) throw std::runtime_error("random_simple_words: rejection cap hit");
    FreeWord w;
    int L = len_d(rng);
    for (int i = 0; i < L; ++i) {
      int r = let_d(rng);
      Letter l = static_cast<Letter>(r < 2 * fg.g ? r + 1 : -(r - 2 * fg.g + 1));
      if (!w.empty() && w.back() == static_cast<Letter>(-l)) {
        --i;
        continue;
      }
      w.push_back(l);
    }
    w = cyclically_reduced(w);
    if (w.empty() || !is_admissible(w, fg)) continue;
    if (seen.insert(canonical_rotation(w)).second) out.push_back(w);
  }
  return out;
}

DependenceReport homology_dependence_check(const MappingClass& f, const SurfaceSpec& spec,
                                           const FatGraph& fg, const PlanarImmersion& im,
                                           int min_cases, unsigned seed) {
  CohomologyClass e = chillingworth_winding_class(f, spec, fg, im);
  DependenceReport rep;
  for (const FreeWord& w : random_simple_words(fg, min_cases, 6, seed)) {
    long long direct = chillingworth_eval(f, w, fg, im);
    long long via = e.eval(homology_of(w, fg.g));
    if (mod_reduce(direct - via, e.modulus) != 0) {
      rep.detail = "defect disagrees with its linear extension on " + word_str(w);
      return rep;
    }
    ++rep.tested;
  }
  rep.ok = true;
  return rep;
}

}  // namespace torelli
