#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "theta/fp_poly.hpp"

namespace theta {

/// Built-in Conway polynomial table, p = 5, n <= 12. Little-endian monic
/// coefficients. Returns nullopt outside the table.
std::optional<fp::Poly> conway_polynomial(int64_t p, int n);

/// Recompute the Conway polynomial from its defining property: the minimal
/// primitive polynomial in word order that is norm-compatible with the
/// Conway polynomials of all proper subfields. Used to validate the table.
fp::Poly conway_polynomial_by_search(int64_t p, int n);

/// Compatibility part of the definition: cm(t^{(p^n-1)/(p^m-1)}) = 0 mod f
/// for the degree-m Conway polynomial cm, for every proper divisor m of n.
bool conway_compatible(const fp::Poly& f, int64_t p, int n);

/// Monic primitive polynomial of degree n with the lexicographically
/// smallest coefficient tuple (a_{n-1}, ..., a_0). Default modulus for
/// fields the Conway table does not cover.
fp::Poly smallest_primitive_polynomial(int64_t p, int n);

} // namespace theta
