#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "torelli/homology.hpp"

namespace torelli {

// Letters of the free group F_{2g} = pi_1(S_{g,1}): +i encodes the generator
// x_i, -i its inverse, i in 1..2g.  The dictionary with homology is
// x_{2k-1} <-> a_k and x_{2k} <-> b_k.
using Letter = int16_t;
using FreeWord = std::vector<Letter>;

bool is_reduced(const FreeWord& w);
FreeWord reduced(FreeWord w);
FreeWord cyclically_reduced(FreeWord w);
FreeWord inverse(const FreeWord& w);
FreeWord concat(const FreeWord& a, const FreeWord& b);
FreeWord power(const FreeWord& w, int n);
FreeWord commutator(const FreeWord& a, const FreeWord& b);  // a b a^-1 b^-1

// Band index (1..2g) of the homology basis element: a_k -> 2k-1, b_k -> 2k.
int band_of_basis(int g, int basis_index);
FreeWord basis_loop(int g, int basis_index);  // the one-letter word

FreeWord boundary_word(int g);  // prod_k [x_{2k-1}, x_{2k}]

HomologyClass homology_of(const FreeWord& w, int g);

// Cyclic-word helpers (inputs assumed cyclically reduced).
bool is_proper_power(const FreeWord& w);
FreeWord canonical_rotation(const FreeWord& w);
bool cyclic_equal(const FreeWord& a, const FreeWord& b);

// Text form: "x1 x2 X1" (capital = inverse).  parse checks letters <= 2g.
FreeWord parse_word(const std::string& s, int g);
std::string word_str(const FreeWord& w);

}  // namespace torelli
