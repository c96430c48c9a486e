#include "theta/fp_poly.hpp"

#include <stdexcept>

namespace theta::fp {

Poly trim(Poly a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
    return a;
}

bool is_zero(const Poly& a) {
    for (int c : a)
        if (c != 0) return false;
    return true;
}

int degree(const Poly& a) {
    for (int i = static_cast<int>(a.size()) - 1; i >= 0; --i)
        if (a[i] != 0) return i;
    return -1;
}

Poly mulmod(const Poly& a, const Poly& b, const Poly& m, int64_t p) {
    if (a.empty() || b.empty()) return {};
    std::vector<int64_t> c(a.size() + b.size() - 1, 0);
    for (size_t i = 0; i < a.size(); ++i) {
        if (!a[i]) continue;
        for (size_t j = 0; j < b.size(); ++j) c[i + j] += int64_t(a[i]) * b[j];
    }
    for (auto& v : c) v %= p;
    int d = static_cast<int>(m.size()) - 1; // m monic, degree d
    for (int i = static_cast<int>(c.size()) - 1; i >= d; --i) {
        int64_t f = c[i] % p;
        if (!f) continue;
        for (int j = 0; j <= d; ++j) c[i - d + j] = ((c[i - d + j] - f * m[j]) % p + p) % p;
    }
    Poly r(d);
    for (int i = 0; i < d && i < static_cast<int>(c.size()); ++i)
        r[i] = static_cast<int>(((c[i] % p) + p) % p);
    return r;
}

Poly powmod(Poly base, uint64_t e, const Poly& m, int64_t p) {
    int d = static_cast<int>(m.size()) - 1;
    Poly r(d, 0);
    r[0] = 1;
    base.resize(std::max<size_t>(base.size(), d));
    while (e) {
        if (e & 1) r = mulmod(r, base, m, p);
        base = mulmod(base, base, m, p);
        e >>= 1;
    }
    return r;
}

namespace {

int inv_mod(int64_t a, int64_t p) {
    a = ((a % p) + p) % p;
    for (int64_t k = 1; k < p; ++k)
        if (a * k % p == 1) return static_cast<int>(k);
    throw std::domain_error("no modular inverse");
}

Poly poly_mod(Poly a, const Poly& b, int64_t p) {
    int db = degree(b);
    int inv = inv_mod(b[db], p);
    for (int i = static_cast<int>(a.size()) - 1; i >= db; --i) {
        int64_t f = int64_t(a[i]) * inv % p;
        if (!f) continue;
        for (int j = 0; j <= db; ++j) a[i - db + j] = static_cast<int>(((a[i - db + j] - f * b[j]) % p + p) % p);
    }
    return trim(std::move(a));
}

} // namespace

Poly gcd(Poly a, Poly b, int64_t p) {
    a = trim(std::move(a));
    b = trim(std::move(b));
    while (!b.empty()) {
        Poly r = poly_mod(a, b, p);
        a = std::move(b);
        b = std::move(r);
    }
    return a;
}

bool is_irreducible(const Poly& m, int64_t p) {
    int n = static_cast<int>(m.size()) - 1;
    if (n <= 0) return false;
    if (n == 1) return true;
    Poly t{0, 1};
    Poly acc = t;
    for (int k = 1; k <= n; ++k) {
        acc = powmod(acc, static_cast<uint64_t>(p), m, p); // t^{p^k} mod m
        Poly diff = acc;
        diff.resize(std::max<size_t>(diff.size(), 2));
        diff[1] = static_cast<int>(((diff[1] - 1) % p + p) % p);
        if (k <= n / 2) {
            Poly g = gcd(diff, m, p);
            if (degree(g) != 0) return false;
        }
        if (k == n && !is_zero(diff)) return false;
    }
    return true;
}

std::vector<uint64_t> prime_factors(uint64_t v) {
    std::vector<uint64_t> out;
    for (uint64_t d = 2; d * d <= v; d += (d == 2 ? 1 : 2)) {
        if (v % d == 0) {
            out.push_back(d);
            while (v % d == 0) v /= d;
        }
    }
    if (v > 1) out.push_back(v);
    return out;
}

uint64_t ipow(uint64_t p, unsigned n) {
    uint64_t r = 1;
    while (n--) {
        if (r > (uint64_t(1) << 62) / p) throw std::overflow_error("power exceeds 2^62");
        r *= p;
    }
    return r;
}

bool element_is_primitive(const Poly& elem, const Poly& m, int64_t p) {
    int n = static_cast<int>(m.size()) - 1;
    uint64_t qm1 = ipow(static_cast<uint64_t>(p), n) - 1;
    Poly one(n, 0);
    one[0] = 1;
    if (is_zero(elem)) return false;
    if (powmod(elem, qm1, m, p) != one) return false;
    for (uint64_t f : prime_factors(qm1))
        if (powmod(elem, qm1 / f, m, p) == one) return false;
    return true;
}

bool is_prime_u64(uint64_t v) {
    if (v < 2) return false;
    for (uint64_t d = 2; d * d <= v; d += (d == 2 ? 1 : 2))
        if (v % d == 0) return false;
    return true;
}

} // namespace theta::fp
