#include "theta/gaussian.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <sstream>
#include <tuple>

namespace theta {

std::string GaussInt::str() const {
    std::ostringstream os;
    if (a == 0 && b == 0) return "0";
    if (a != 0) os << a;
    if (b != 0) {
        if (b > 0 && a != 0) os << "+";
        if (b == -1)
            os << "-";
        else if (b != 1)
            os << b;
        os << "i";
    }
    return os.str();
}

GaussInt g_pow(GaussInt z, uint64_t n) {
    GaussInt r(1, 0);
    while (n) {
        if (n & 1) r = r * z;
        z = z * z;
        n >>= 1;
    }
    return r;
}

namespace {

// round u/d (d > 0) to nearest, ties toward zero
BigInt round_div(const BigInt& u, const BigInt& d) {
    if (u >= 0) return (2 * u + d - 1) / (2 * d);
    return -((2 * -u + d - 1) / (2 * d));
}

} // namespace

GaussDivMod g_divmod(const GaussInt& x, const GaussInt& y) {
    if (y.is_zero()) throw std::domain_error("gaussian division by zero");
    BigInt n = y.norm();
    GaussInt num = x * y.conj();
    GaussInt q{round_div(num.a, n), round_div(num.b, n)};
    GaussInt r = x - q * y;
    return {q, r};
}

GaussInt g_gcd(GaussInt x, GaussInt y) {
    while (!y.is_zero()) {
        GaussInt r = g_divmod(x, y).r;
        x = y;
        y = r;
    }
    return x;
}

bool g_divides(const GaussInt& d, const GaussInt& z) {
    return g_divmod(z, d).r.is_zero();
}

GaussInt canonical_associate(const GaussInt& z) {
    if (z.is_zero()) return z;
    if (z.norm() == 2) return rho();
    GaussInt c = z;
    for (int k = 0; k < 4; ++k) {
        if (c.a > 0 && c.b >= 0) return c;
        c = GaussInt{-c.b, c.a}; // multiply by i
    }
    throw std::logic_error("no canonical associate found");
}

GaussInt GaussFactorization::value() const {
    GaussInt v = unit;
    for (const auto& f : factors)
        for (int k = 0; k < f.exponent; ++k) v = v * f.prime;
    return v;
}

int GaussFactorization::rho_exponent() const {
    for (const auto& f : factors)
        if (f.cls == PrimeClass::ramified) return f.exponent;
    return 0;
}

std::vector<GaussPrimePower> GaussFactorization::odd_part() const {
    std::vector<GaussPrimePower> out;
    for (const auto& f : factors)
        if (f.cls != PrimeClass::ramified) out.push_back(f);
    return out;
}

namespace {

// exact divisions of z by d, consuming them
int strip_factor(GaussInt& z, const GaussInt& d, int max_count) {
    int k = 0;
    while (k < max_count) {
        auto [q, r] = g_divmod(z, d);
        if (!r.is_zero()) break;
        z = q;
        ++k;
    }
    return k;
}

// a^2 + b^2 = q with a > b > 0, by direct search; q is a prime = 1 mod 4
GaussInt two_square_decomposition(uint64_t q) {
    for (uint64_t a = 1;; ++a) {
        uint64_t a2 = a * a;
        if (a2 > q) break;
        uint64_t rem = q - a2;
        auto b = static_cast<uint64_t>(std::sqrt(static_cast<long double>(rem)));
        while (b * b > rem) --b;
        while ((b + 1) * (b + 1) <= rem) ++b;
        if (b * b == rem && b > 0) return {BigInt(a), BigInt(b)};
    }
    throw std::logic_error("two-square decomposition failed");
}

} // namespace

GaussFactorization g_factor(const GaussInt& z, int64_t bound) {
    if (z.is_zero()) throw std::invalid_argument("cannot factor zero");
    if (bound < 2) throw std::invalid_argument("trial division bound too small");

    GaussFactorization out;
    GaussInt work = z;

    int e0 = strip_factor(work, rho(), 1 << 30);
    if (e0 > 0) out.factors.push_back({rho(), e0, PrimeClass::ramified});

    BigInt n = work.norm(); // odd now
    std::vector<std::pair<uint64_t, int>> rational; // (prime, multiplicity in n)
    BigInt big_bound = bound;
    for (BigInt d = 3; d <= big_bound && d * d <= n; d += 2) {
        if (n % d != 0) continue;
        int m = 0;
        while (n % d == 0) {
            n /= d;
            ++m;
        }
        rational.emplace_back(static_cast<uint64_t>(d), m);
    }
    if (n > 1) {
        if (n > big_bound * big_bound)
            throw resource_error("unfactored cofactor " + n.str() +
                                 " exceeds trial division bound " + std::to_string(bound));
        rational.emplace_back(static_cast<uint64_t>(n), 1);
    }

    for (auto [q, m] : rational) {
        if (q % 4 == 3) {
            if (m % 2 != 0) throw std::logic_error("odd norm multiplicity for inert prime");
            GaussInt p{BigInt(q), BigInt(0)};
            int e = strip_factor(work, p, m / 2);
            if (e != m / 2) throw std::logic_error("inert prime division mismatch");
            out.factors.push_back({p, e, PrimeClass::inert});
        } else {
            GaussInt p = canonical_associate(two_square_decomposition(q));
            GaussInt pbar = canonical_associate(p.conj());
            int e1 = strip_factor(work, p, m);
            int e2 = strip_factor(work, pbar, m - e1);
            if (e1 + e2 != m) throw std::logic_error("split prime division mismatch");
            if (e1 > 0) out.factors.push_back({p, e1, PrimeClass::split});
            if (e2 > 0) out.factors.push_back({pbar, e2, PrimeClass::split});
        }
    }

    if (!work.is_unit()) throw std::logic_error("non-unit left after factoring: " + work.str());
    out.unit = work;

    std::sort(out.factors.begin(), out.factors.end(), [](const auto& x, const auto& y) {
        return std::tuple(x.prime.norm(), x.prime.a, x.prime.b) <
               std::tuple(y.prime.norm(), y.prime.a, y.prime.b);
    });
    return out;
}

int rho_valuation(GaussInt z) {
    if (z.is_zero()) throw std::domain_error("rho valuation of zero");
    int k = 0;
    for (;;) {
        auto [q, r] = g_divmod(z, rho());
        if (!r.is_zero()) return k;
        z = q;
        ++k;
    }
}

int64_t v2_factorial(int64_t n) {
    if (n < 0) throw std::domain_error("factorial of negative integer");
    return n - std::popcount(static_cast<uint64_t>(n));
}

std::vector<int> rho_digits(GaussInt z, int k) {
    if (k < 0) throw std::invalid_argument("negative digit count");
    std::vector<int> digits(k, 0);
    for (int i = 0; i < k; ++i) {
        int d = ((z.a + z.b) % 2) != 0 ? 1 : 0;
        digits[i] = d;
        if (d) z.a -= 1;
        auto [q, r] = g_divmod(z, rho());
        if (!r.is_zero()) throw std::logic_error("rho digit extraction failed");
        z = q;
    }
    return digits;
}

GaussInt rho_digits_value(const std::vector<int>& digits) {
    GaussInt v;
    GaussInt pw(1, 0);
    for (int d : digits) {
        if (d) v = v + pw;
        pw = pw * rho();
    }
    return v;
}

ModOrder mod_order_pm(const GaussInt& modulus, const GaussInt& base) {
    if (modulus.norm() <= 1) throw std::invalid_argument("modulus must not be a unit or zero");
    if (g_gcd(base, modulus).norm() != 1)
        throw std::domain_error("base not invertible modulo modulus");

    GaussInt b = g_divmod(base, modulus).r;
    GaussInt pw = b;
    GaussInt one(1, 0);
    BigInt guard = 4 * modulus.norm() + 16;
    for (int64_t l = 1;; ++l) {
        bool plus = g_divides(modulus, pw - one);
        bool minus = g_divides(modulus, pw + one);
        if (plus || minus) {
            OrderSign s = plus && minus ? OrderSign::both
                        : plus          ? OrderSign::plus
                                        : OrderSign::minus;
            return {l, s};
        }
        pw = g_divmod(pw * b, modulus).r;
        if (BigInt(l) > guard) throw std::logic_error("order scan exceeded group bound");
    }
}

} // namespace theta
