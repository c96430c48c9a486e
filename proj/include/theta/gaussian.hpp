#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <cstdint>
#include <string>
#include <vector>

#include "theta/errors.hpp"

namespace theta {

using BigInt = boost::multiprecision::cpp_int;

inline constexpr int64_t kDefaultTrialDivisionBound = 10'000'000;

/// Gaussian integer a + b*i with arbitrary-precision parts.
struct GaussInt {
    BigInt a;
    BigInt b;

    GaussInt() : a(0), b(0) {}
    GaussInt(BigInt re) : a(std::move(re)), b(0) {}
    GaussInt(BigInt re, BigInt im) : a(std::move(re)), b(std::move(im)) {}
    GaussInt(long re, long im) : a(re), b(im) {}

    BigInt norm() const { return a * a + b * b; }
    GaussInt conj() const { return {a, -b}; }
    bool is_zero() const { return a == 0 && b == 0; }
    bool is_unit() const { return norm() == 1; }

    friend GaussInt operator+(const GaussInt& x, const GaussInt& y) { return {x.a + y.a, x.b + y.b}; }
    friend GaussInt operator-(const GaussInt& x, const GaussInt& y) { return {x.a - y.a, x.b - y.b}; }
    friend GaussInt operator-(const GaussInt& x) { return {-x.a, -x.b}; }
    friend GaussInt operator*(const GaussInt& x, const GaussInt& y) {
        return {x.a * y.a - x.b * y.b, x.a * y.b + x.b * y.a};
    }
    friend bool operator==(const GaussInt& x, const GaussInt& y) { return x.a == y.a && x.b == y.b; }

    std::string str() const;
};

/// rho = -1 + i, the ramified prime above 2.
inline GaussInt rho() { return {-1, 1}; }
/// pi_5 = 1 + 2i, the degree-5 Frobenius viewed in Z[i].
inline GaussInt pi5() { return {1, 2}; }

GaussInt g_pow(GaussInt z, uint64_t n);

struct GaussDivMod {
    GaussInt q;
    GaussInt r;
};

/// Euclidean division: x = q*y + r with norm(r) <= norm(y)/2.
/// Quotient coordinates are rounded to nearest, ties toward zero.
GaussDivMod g_divmod(const GaussInt& x, const GaussInt& y);

GaussInt g_gcd(GaussInt x, GaussInt y);

/// True iff d divides z exactly in Z[i].
bool g_divides(const GaussInt& d, const GaussInt& z);

enum class PrimeClass { ramified, inert, split };

/// Among the four associates: rho is stored as -1+i; otherwise the
/// representative with a > 0 and b >= 0 (for split primes this is the one in
/// the open first quadrant, for inert primes the positive rational).
GaussInt canonical_associate(const GaussInt& z);

struct GaussPrimePower {
    GaussInt prime; // canonical associate
    int exponent = 0;
    PrimeClass cls = PrimeClass::split;

    friend bool operator==(const GaussPrimePower&, const GaussPrimePower&) = default;
};

struct GaussFactorization {
    GaussInt unit; // one of 1, -1, i, -i
    std::vector<GaussPrimePower> factors; // sorted by (norm, a, b); conjugate split primes distinct

    /// unit * prod prime^exponent
    GaussInt value() const;
    /// Exponent of rho in the factorization (0 if absent).
    int rho_exponent() const;
    /// Factors other than rho, in stored order.
    std::vector<GaussPrimePower> odd_part() const;
};

/// Factor z into Gaussian primes. The norm is factored by trial division up
/// to `bound`; a remaining cofactor larger than bound^2 raises resource_error
/// naming it.
GaussFactorization g_factor(const GaussInt& z, int64_t bound = kDefaultTrialDivisionBound);

/// Largest k with rho^k | z; equals the 2-adic valuation of norm(z).
int rho_valuation(GaussInt z);

/// 2-adic valuation of n! = n - (sum of base-2 digits of n).
int64_t v2_factorial(int64_t n);

/// Unique digits (a_0..a_{k-1}) in {0,1} with z = sum a_i rho^i (mod rho^k).
std::vector<int> rho_digits(GaussInt z, int k);

/// sum digits[i] * rho^i
GaussInt rho_digits_value(const std::vector<int>& digits);

enum class OrderSign { plus, minus, both };

struct ModOrder {
    int64_t l = 0;
    OrderSign sign = OrderSign::both;
};

/// Smallest l >= 1 with base^l = +1 or -1 (mod modulus), and which sign holds
/// there. `both` is only possible when modulus divides 2.
ModOrder mod_order_pm(const GaussInt& modulus, const GaussInt& base);

} // namespace theta
