#pragma once

// Univariate polynomial helpers used by the module decomposer. Coefficients are
// stored lowest degree first.

#include "greend4/exact_linalg.hpp"

#include <vector>

namespace greend4::poly {

using linalg::Integer;
using linalg::Rat;
using linalg::RatMatrix;

using RatPoly = std::vector<Rat>;
using IntPoly = std::vector<Integer>;

/// Characteristic polynomial det(tI - M), via Hessenberg reduction.
RatPoly charpoly(const RatMatrix& m);

RatPoly derivative(const RatPoly& p);
/// Monic gcd; the zero polynomial is returned as an empty vector.
RatPoly gcd(RatPoly a, RatPoly b);
/// Quotient of exact division; throws std::domain_error on nonzero remainder.
RatPoly exact_div(const RatPoly& num, const RatPoly& den);
/// p / gcd(p, p'), made monic.
RatPoly squarefree_part(const RatPoly& p);

/// All integer roots of a monic, squarefree integer polynomial, via Hensel lifting.
std::vector<Integer> integer_roots(const IntPoly& f);

/// All rational eigenvalues of a square matrix.
std::vector<Rat> rational_eigenvalues(const RatMatrix& m);

}  // namespace greend4::poly
