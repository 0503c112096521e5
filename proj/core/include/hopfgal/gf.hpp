#pragma once

#include <cstdint>
#include <vector>

#include "hopfgal/algebra.hpp"

namespace hopfgal {

// GF(p^n) as a GF(p)-algebra on the power basis 1, x, ..., x^(n-1) modulo
// the lexicographically-least monic irreducible polynomial of degree n.
struct GfExtension {
  uint32_t p = 2;
  size_t n = 1;
  std::vector<uint32_t> modulus;  // monic, length n+1, constant term first
  FinAlgebra algebra;
  Matrix frobenius;  // y -> y^p
};

// Deterministic search for the minimal polynomial choice; input_error when
// p^n > 2^16.
GfExtension gf_extension(uint32_t p, size_t n);

// The least monic irreducible polynomial of degree n over GF(p),
// coefficients constant-first, lexicographic order on (c_0, ..., c_{n-1}).
std::vector<uint32_t> least_irreducible(uint32_t p, size_t n);

// All subspaces of GF(2)^dim (dim <= 4): the brute-force oracle substrate.
std::vector<Subspace> all_subspaces_gf2(size_t dim);

// Ring embedding GF(p^m) -> GF(p^n) for m | n: sends the power-basis
// generator to the lexicographically first root of the small modulus in the
// big field. Deterministic, so towers built from it are compatible.
Matrix gf_embedding(const GfExtension& small, const GfExtension& big);

}  // namespace hopfgal
