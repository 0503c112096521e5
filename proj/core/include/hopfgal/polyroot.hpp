#pragma once

#include <vector>

#include "hopfgal/matrix.hpp"

namespace hopfgal {

// Characteristic polynomial by the division-free Berkowitz scheme,
// leading-first coefficients (coeff of x^n first, always 1).
std::vector<Scalar> char_poly(const Matrix& m);

Scalar poly_eval(const std::vector<Scalar>& coeffs, const Scalar& x);

// Distinct roots in K of a polynomial with leading-first coefficients.
// Over GF(p) roots are found by scanning (p <= 2^20); over Q by a
// rational-root search on the cleared-denominator coefficients.
std::vector<Scalar> rational_roots(const std::vector<Scalar>& coeffs,
                                   const Field& f);

}  // namespace hopfgal
