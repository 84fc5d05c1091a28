#pragma once

#include "torelli/chords.hpp"
#include "torelli/mapping.hpp"
#include "torelli/ribbon.hpp"

namespace torelli {

// Dehn twist about the simple closed curve carried by the cyclic word c.
// Computed by dragging each generator loop across the taut picture of c:
// every disc crossing inserts a copy of c read from the crossing point, with
// the sign given by the local orientation of the crossing.  The result is
// validated (mutually inverse images, boundary word fixed) before returning.
MappingClass dehn_twist(const FreeWord& c, const FatGraph& fg);
MappingClass dehn_twist_power(const FreeWord& c, int power, const FatGraph& fg);

// induced map on homology of a twist about a curve in class c
IntMat transvection_matrix(const HomologyClass& c);

}  // namespace torelli
