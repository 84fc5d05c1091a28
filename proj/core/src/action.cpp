#include "torelli/action.hpp"

#include <stdexcept>

namespace torelli {

long long phi_eval(const Catalog& cat, const TorelliWord& w, const HomologyClass& h) {
  if (h.rank() != 2 * cat.spec.genus) throw std::invalid_argument("phi_eval: class rank mismatch");
  if (h.is_zero()) throw std::invalid_argument("phi_eval: needs a nonzero class");
  long long total = 0;
  for (const BoundingPairDatum& f : bp_factors(cat, w))
    total += f.sign * static_cast<long long>(f.span.size()) * intersection_pairing(f.a_class, h);
  return mod_reduce(total, cat.spec.modulus());
}

CohomologyClass phi_cohomology(const Catalog& cat, const TorelliWord& w) {
  int g = cat.spec.genus;
  CohomologyClass out = zero_cohomology(g, cat.spec.modulus());
  for (const BoundingPairDatum& f : bp_factors(cat, w)) {
    CohomologyClass d = dual_of(f.a_class);
    for (int j = 0; j < 2 * g; ++j)
      out.dual[j] += f.sign * static_cast<long long>(f.span.size()) * d.dual[j];
  }
  return out.reduced();
}

}  // namespace torelli
