#pragma once

#include <cstdint>
#include <vector>

namespace theta::fp {

/// Dense polynomial over F_p, little-endian coefficients in [0, p).
using Poly = std::vector<int>;

Poly trim(Poly a);
bool is_zero(const Poly& a);
int degree(const Poly& a); // -1 for zero

Poly mulmod(const Poly& a, const Poly& b, const Poly& m, int64_t p);
Poly powmod(Poly base, uint64_t e, const Poly& m, int64_t p);
Poly gcd(Poly a, Poly b, int64_t p);

/// Irreducibility of a monic polynomial: gcd(t^{p^k} - t, m) = 1 for
/// k <= deg/2 and t^{p^deg} = t (mod m).
bool is_irreducible(const Poly& m, int64_t p);

std::vector<uint64_t> prime_factors(uint64_t v);

/// p^n, throwing std::overflow_error past 2^62.
uint64_t ipow(uint64_t p, unsigned n);

/// Order of the residue class of `elem` modulo the irreducible monic `m`
/// equals p^deg(m) - 1.
bool element_is_primitive(const Poly& elem, const Poly& m, int64_t p);

bool is_prime_u64(uint64_t v);

} // namespace theta::fp
