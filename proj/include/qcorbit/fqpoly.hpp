#ifndef QCORBIT_FQPOLY_HPP
#define QCORBIT_FQPOLY_HPP

#include <utility>
#include <vector>

#include "qcorbit/fields.hpp"

namespace qcorbit {

/// Dense polynomial over a Field, ascending coefficients. Trailing zeros
/// are allowed; degree() ignores them. The zero polynomial has degree -1.
using FqPoly = std::vector<elt_t>;

int poly_degree(const FqPoly& f);
FqPoly poly_trim(FqPoly f);
bool poly_is_zero(const FqPoly& f);

FqPoly poly_add(const Field& F, const FqPoly& a, const FqPoly& b);
FqPoly poly_sub(const Field& F, const FqPoly& a, const FqPoly& b);
FqPoly poly_mul(const Field& F, const FqPoly& a, const FqPoly& b);
FqPoly poly_scale(const Field& F, const FqPoly& a, elt_t c);

/// Quotient and remainder; den must be nonzero.
std::pair<FqPoly, FqPoly> poly_divmod(const Field& F, const FqPoly& num, const FqPoly& den);
FqPoly poly_mod(const Field& F, const FqPoly& num, const FqPoly& den);

elt_t poly_eval(const Field& F, const FqPoly& f, elt_t x);

/// Monic gcd.
FqPoly poly_gcd(const Field& F, FqPoly a, FqPoly b);

/// Inverse of a modulo the given modulus; requires gcd(a, mod) = 1.
FqPoly poly_inv_mod(const Field& F, const FqPoly& a, const FqPoly& mod);

} // namespace qcorbit

#endif
