#pragma once

#include "torelli/catalog.hpp"

namespace torelli {

// Signed stable length of the mapping class named by the catalog word, paired
// against the nonzero class h: each bounding-pair factor of genus k about
// class [a] contributes exp * k * i([a], h), separating factors contribute
// nothing.  Closed surfaces only see the value mod g-1.
long long phi_eval(const Catalog& cat, const TorelliWord& w, const HomologyClass& h);

// The same pairing as a function of h (dual coordinates; modulus g-1 closed).
CohomologyClass phi_cohomology(const Catalog& cat, const TorelliWord& w);

}  // namespace torelli
