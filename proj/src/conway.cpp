#include "theta/conway.hpp"

#include <stdexcept>

namespace theta {

namespace {

// p = 5, degrees 1..12
const std::vector<std::vector<int>> kConway5 = {
    {3, 1},
    {2, 4, 1},
    {3, 3, 0, 1},
    {2, 4, 4, 0, 1},
    {3, 4, 0, 0, 0, 1},
    {2, 0, 1, 4, 1, 0, 1},
    {3, 3, 0, 0, 0, 0, 0, 1},
    {2, 4, 3, 0, 1, 0, 0, 0, 1},
    {3, 1, 0, 2, 0, 0, 0, 0, 0, 1},
    {2, 1, 4, 2, 3, 3, 0, 0, 0, 0, 1},
    {3, 3, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1},
    {2, 2, 3, 4, 4, 0, 1, 1, 0, 0, 0, 0, 1},
};

// evaluate poly c at y in F_p[t]/m, Horner
fp::Poly eval_at(const fp::Poly& c, const fp::Poly& y, const fp::Poly& m, int64_t p) {
    int n = static_cast<int>(m.size()) - 1;
    fp::Poly acc(n, 0);
    for (int i = static_cast<int>(c.size()) - 1; i >= 0; --i) {
        acc = fp::mulmod(acc, y, m, p);
        acc[0] = static_cast<int>((acc[0] + c[i]) % p);
    }
    return acc;
}

fp::Poly t_or_root(const fp::Poly& f, int64_t p) {
    int n = static_cast<int>(f.size()) - 1;
    if (n == 1) return {static_cast<int>(((-f[0]) % p + p) % p)};
    fp::Poly t(n, 0);
    t[1] = 1;
    return t;
}

} // namespace

std::optional<fp::Poly> conway_polynomial(int64_t p, int n) {
    if (p == 5 && n >= 1 && n <= static_cast<int>(kConway5.size())) return kConway5[n - 1];
    return std::nullopt;
}

bool conway_compatible(const fp::Poly& f, int64_t p, int n) {
    uint64_t qm1 = fp::ipow(static_cast<uint64_t>(p), n) - 1;
    for (int m = 1; m < n; ++m) {
        if (n % m != 0) continue;
        fp::Poly cm = m <= 12 && p == 5 ? kConway5[m - 1] : conway_polynomial_by_search(p, m);
        uint64_t e = qm1 / (fp::ipow(static_cast<uint64_t>(p), m) - 1);
        fp::Poly y = fp::powmod(t_or_root(f, p), e, f, p);
        if (!fp::is_zero(eval_at(cm, y, f, p))) return false;
    }
    return true;
}

fp::Poly conway_polynomial_by_search(int64_t p, int n) {
    // Word of f = x^n + sum f_i x^i is (a_{n-1}, ..., a_0) with
    // a_i = (-1)^{n-i} f_i; words are scanned in lexicographic order.
    uint64_t total = fp::ipow(static_cast<uint64_t>(p), n);
    for (uint64_t w = 0; w < total; ++w) {
        fp::Poly f(n + 1, 0);
        f[n] = 1;
        uint64_t t = w;
        for (int i = 0; i < n; ++i) {
            auto a = static_cast<int>(t % static_cast<uint64_t>(p));
            t /= static_cast<uint64_t>(p);
            f[i] = (n - i) % 2 == 0 ? a : static_cast<int>((p - a) % p);
        }
        if (p == 5) {
            // root norm (-1)^n f_0 must be the root of the degree-1 entry
            int normroot = n % 2 == 0 ? f[0] : static_cast<int>((p - f[0]) % p);
            if (normroot != 2) continue;
        }
        if (!fp::is_irreducible(f, p)) continue;
        if (!fp::element_is_primitive(t_or_root(f, p), f, p)) continue;
        if (!conway_compatible(f, p, n)) continue;
        return f;
    }
    throw std::logic_error("conway search exhausted");
}

fp::Poly smallest_primitive_polynomial(int64_t p, int n) {
    uint64_t total = fp::ipow(static_cast<uint64_t>(p), n);
    for (uint64_t w = 0; w < total; ++w) {
        fp::Poly f(n + 1, 0);
        f[n] = 1;
        uint64_t t = w;
        // w encodes (a_{n-1}, ..., a_0) with a_{n-1} most significant
        for (int i = 0; i < n; ++i) {
            f[i] = static_cast<int>(t % static_cast<uint64_t>(p));
            t /= static_cast<uint64_t>(p);
        }
        if (!fp::is_irreducible(f, p)) continue;
        if (!fp::element_is_primitive(t_or_root(f, p), f, p)) continue;
        return f;
    }
    throw std::logic_error("no primitive polynomial found");
}

} // namespace theta
