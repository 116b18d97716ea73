#pragma once

// Exact linear algebra over Q and over P^loc.

#include <optional>
#include <vector>

#include "ybs/exactalg.hpp"

namespace ybs {

using QMatrix = std::vector<std::vector<Rational>>;
using FracMatrix = std::vector<std::vector<RatFunc>>;

// Reduced row echelon form in place; returns the pivot columns.
std::vector<std::size_t> rref(QMatrix& a);
std::size_t rank(QMatrix a);
// Basis of {x : a x = 0}, one vector per free column.
std::vector<std::vector<Rational>> nullspace(QMatrix a, std::size_t ncols);

// Solves a X = b for square a over P^loc. Pivots must be units of P^loc;
// among them the one with the fewest denominator factors is taken.
// Throws NonLocalizable if a pivot column has no unit entry, DivisionByZero
// if a is singular.
FracMatrix solve(FracMatrix a, FracMatrix b);
FracMatrix inverse(const FracMatrix& a);

// Determinant of the polynomial matrix obtained by clearing each row's
// denominators (fraction-free Bareiss elimination).
MultiPoly cleared_determinant(const FracMatrix& a);
// a is invertible over P^loc iff its cleared determinant is a nonzero
// constant times a product of linear differences.
bool invertible_over_loc(const FracMatrix& a);

}  // namespace ybs
