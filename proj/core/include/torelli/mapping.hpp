#pragma once

#include <vector>

#include "torelli/freeword.hpp"
#include "torelli/homology.hpp"

namespace torelli {

// Automorphism of the surface group carried by a mapping class that fixes the
// boundary.  Images of the generators are stored both ways so inverses never
// need a word-equation solver.
struct MappingClass {
  int g = 0;
  std::vector<FreeWord> img;  // image of x1..x2g
  std::vector<FreeWord> inv;  // image of x1..x2g under the inverse

  static MappingClass identity(int g);
};

FreeWord apply_word(const MappingClass& f, const FreeWord& w);
FreeWord apply_word_inverse(const MappingClass& f, const FreeWord& w);

// compose(f, g) acts as f after g
MappingClass compose(const MappingClass& f, const MappingClass& g);
MappingClass inverse_of(const MappingClass& f);

bool fixes_boundary(const MappingClass& f);
// two-sided check that img and inv really are mutually inverse
bool is_valid_automorphism(const MappingClass& f);

IntMat homology_matrix(const MappingClass& f);
bool is_torelli(const MappingClass& f);

}  // namespace torelli
