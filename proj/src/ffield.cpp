#include "theta/ffield.hpp"

#include <algorithm>
#include <sstream>

#include "theta/conway.hpp"
#include "theta/fp_poly.hpp"

namespace theta {

namespace {

std::vector<int> reduce_coeffs(const std::vector<int>& c, int64_t p) {
    std::vector<int> r(c.size());
    for (size_t i = 0; i < c.size(); ++i) r[i] = static_cast<int>(((c[i] % p) + p) % p);
    return r;
}

} // namespace

Fq FiniteField::make(int64_t p, int n, std::optional<std::vector<int>> modulus,
                     std::optional<std::vector<int>> generator, uint64_t table_budget) {
    if (p < 3 || !fp::is_prime_u64(static_cast<uint64_t>(p)))
        throw std::invalid_argument("characteristic must be an odd prime");
    if (n < 1) throw std::invalid_argument("extension degree must be >= 1");

    uint64_t q;
    try {
        q = fp::ipow(static_cast<uint64_t>(p), n);
    } catch (const std::overflow_error&) {
        throw resource_error("field size overflows the table budget");
    }
    if (q > table_budget)
        throw resource_error("field with " + std::to_string(q) + " elements exceeds budget " +
                             std::to_string(table_budget));

    fp::Poly m;
    if (modulus) {
        m = reduce_coeffs(*modulus, p);
        if (static_cast<int>(m.size()) != n + 1 || m[n] != 1)
            throw std::invalid_argument("modulus must be monic of degree n");
        if (!fp::is_irreducible(m, p)) throw std::invalid_argument("modulus is not irreducible");
    } else if (auto cw = conway_polynomial(p, n)) {
        m = *cw;
    } else {
        m = smallest_primitive_polynomial(p, n);
    }

    fp::Poly t(n, 0);
    if (n == 1)
        t[0] = static_cast<int>(((-m[0]) % p + p) % p);
    else
        t[1] = 1;

    fp::Poly gen;
    if (generator) {
        gen = reduce_coeffs(*generator, p);
        if (fp::degree(gen) >= n) throw std::invalid_argument("generator degree must be below n");
        gen.resize(n, 0);
        if (!fp::element_is_primitive(gen, m, p))
            throw std::invalid_argument("generator does not have order q-1");
    } else if (fp::element_is_primitive(t, m, p)) {
        gen = t;
    } else {
        // smallest primitive element by encoded index
        bool found = false;
        for (uint64_t idx = 2; idx < q && !found; ++idx) {
            fp::Poly e(n, 0);
            uint64_t v = idx;
            for (int i = 0; i < n; ++i) {
                e[i] = static_cast<int>(v % static_cast<uint64_t>(p));
                v /= static_cast<uint64_t>(p);
            }
            if (fp::element_is_primitive(e, m, p)) {
                gen = e;
                found = true;
            }
        }
        if (!found) throw std::logic_error("no primitive element found");
    }

    auto f = std::shared_ptr<FiniteField>(new FiniteField());
    f->p_ = p;
    f->n_ = n;
    f->q_ = q;
    f->modulus_ = m;
    f->antilog_.resize(q - 1);
    f->dlog_.assign(q, 0);

    auto encode = [&](const fp::Poly& e) {
        uint64_t v = 0;
        for (int i = n - 1; i >= 0; --i) v = v * static_cast<uint64_t>(p) + static_cast<uint64_t>(e[i]);
        return v;
    };

    bool gen_is_t = gen == t && n > 1;
    fp::Poly cur(n, 0);
    cur[0] = 1;
    for (uint64_t k = 0; k < q - 1; ++k) {
        uint64_t idx = encode(cur);
        if (k > 0 && idx == 1)
            throw std::invalid_argument("generator does not have order q-1");
        f->antilog_[k] = static_cast<uint32_t>(idx);
        f->dlog_[idx] = static_cast<uint32_t>(k);
        if (gen_is_t) {
            // multiply by t: shift and reduce once
            int top = cur[n - 1];
            for (int i = n - 1; i > 0; --i) cur[i] = cur[i - 1];
            cur[0] = 0;
            if (top) {
                for (int i = 0; i < n; ++i)
                    cur[i] = static_cast<int>(((cur[i] - int64_t(top) * m[i]) % p + p) % p);
            }
        } else {
            cur = fp::mulmod(cur, gen, m, p);
            cur.resize(n, 0);
        }
    }
    return f;
}

bool FiniteField::same_spec(const FiniteField& other) const {
    return this == &other || (p_ == other.p_ && n_ == other.n_ && modulus_ == other.modulus_);
}

uint64_t FiniteField::add(uint64_t x, uint64_t y) const {
    uint64_t r = 0, mult = 1;
    auto up = static_cast<uint64_t>(p_);
    for (int i = 0; i < n_; ++i) {
        uint64_t d = (x % up + y % up) % up;
        r += d * mult;
        mult *= up;
        x /= up;
        y /= up;
    }
    return r;
}

uint64_t FiniteField::neg(uint64_t x) const {
    uint64_t r = 0, mult = 1;
    auto up = static_cast<uint64_t>(p_);
    for (int i = 0; i < n_; ++i) {
        uint64_t d = (up - x % up) % up;
        r += d * mult;
        mult *= up;
        x /= up;
    }
    return r;
}

uint64_t FiniteField::sub(uint64_t x, uint64_t y) const { return add(x, neg(y)); }

uint64_t FiniteField::mul(uint64_t x, uint64_t y) const {
    if (x == 0 || y == 0) return 0;
    return antilog_[(uint64_t(dlog_[x]) + dlog_[y]) % (q_ - 1)];
}

uint64_t FiniteField::inv(uint64_t x) const {
    if (x == 0) throw std::domain_error("inverse of zero");
    return antilog_[(q_ - 1 - dlog_[x]) % (q_ - 1)];
}

uint64_t FiniteField::pow(uint64_t x, const BigInt& e) const {
    if (x == 0) {
        if (e < 0) throw std::domain_error("inverse of zero");
        return e == 0 ? 1 : 0;
    }
    BigInt m = e % (q_ - 1);
    if (m < 0) m += q_ - 1;
    auto em = static_cast<uint64_t>(m);
    return antilog_[(uint64_t(dlog_[x]) * em) % (q_ - 1)];
}

uint64_t FiniteField::frobenius(uint64_t x) const { return pow(x, p_); }

uint64_t FiniteField::dlog(uint64_t x) const {
    if (x == 0) throw std::domain_error("dlog of zero");
    return dlog_[x];
}

bool FiniteField::is_square(uint64_t x) const { return x == 0 || dlog_[x] % 2 == 0; }

std::optional<uint64_t> FiniteField::sqrt(uint64_t x) const {
    if (x == 0) return 0;
    uint64_t k = dlog_[x];
    if (k % 2 != 0) return std::nullopt;
    return antilog_[k / 2];
}

std::vector<int> FiniteField::coeffs(uint64_t x) const {
    std::vector<int> c(n_);
    auto up = static_cast<uint64_t>(p_);
    for (int i = 0; i < n_; ++i) {
        c[i] = static_cast<int>(x % up);
        x /= up;
    }
    return c;
}

uint64_t FiniteField::from_coeffs(const std::vector<int>& c) const {
    if (fp::degree(c) >= n_) throw std::invalid_argument("coefficient vector degree too high");
    uint64_t v = 0;
    for (int i = std::min<int>(n_, static_cast<int>(c.size())) - 1; i >= 0; --i)
        v = v * static_cast<uint64_t>(p_) + static_cast<uint64_t>(((c[i] % p_) + p_) % p_);
    return v;
}

uint64_t FiniteField::from_int(int64_t c) const {
    return static_cast<uint64_t>(((c % p_) + p_) % p_);
}

std::string FiniteField::to_string(uint64_t x) const {
    auto c = coeffs(x);
    std::ostringstream os;
    os << "[";
    for (int i = 0; i < n_; ++i) os << c[i] << (i + 1 < n_ ? "," : "");
    os << "]";
    return os.str();
}

FFElement::FFElement(Fq field, uint64_t index) : field_(std::move(field)), idx_(index) {
    if (!field_) throw std::invalid_argument("element requires a field");
    if (idx_ >= field_->q()) throw std::invalid_argument("element index out of range");
}

const FiniteField& FFElement::checked_field(const FFElement& o) const {
    if (!field_ || !o.field_) throw std::invalid_argument("uninitialized field element");
    if (!field_->same_spec(*o.field_)) throw std::invalid_argument("mismatched field specs");
    return *field_;
}

FFElement FFElement::operator+(const FFElement& o) const {
    return {field_, checked_field(o).add(idx_, o.idx_)};
}
FFElement FFElement::operator-(const FFElement& o) const {
    return {field_, checked_field(o).sub(idx_, o.idx_)};
}
FFElement FFElement::operator*(const FFElement& o) const {
    return {field_, checked_field(o).mul(idx_, o.idx_)};
}
FFElement FFElement::operator/(const FFElement& o) const {
    return {field_, checked_field(o).mul(idx_, field_->inv(o.idx_))};
}
FFElement FFElement::operator-() const { return {field_, field_->neg(idx_)}; }
FFElement FFElement::inverse() const { return {field_, field_->inv(idx_)}; }
FFElement FFElement::pow(const BigInt& e) const { return {field_, field_->pow(idx_, e)}; }

bool FFElement::operator==(const FFElement& o) const {
    checked_field(o);
    return idx_ == o.idx_;
}

bool ff_is_square(const FFElement& x) { return x.field()->is_square(x.index()); }

P1Element P1Element::infinity(Fq field) {
    if (!field) throw std::invalid_argument("infinity requires a field");
    return {field, true, FFElement(field, 0)};
}

P1Element P1Element::finite(FFElement x) {
    Fq f = x.field();
    if (!f) throw std::invalid_argument("element requires a field");
    return {std::move(f), false, std::move(x)};
}

const FFElement& P1Element::value() const {
    if (infinite_) throw std::domain_error("no value at infinity");
    return value_;
}

bool P1Element::operator==(const P1Element& o) const {
    if (!field_->same_spec(*o.field_)) throw std::invalid_argument("mismatched field specs");
    if (infinite_ || o.infinite_) return infinite_ == o.infinite_;
    return value_ == o.value_;
}

std::string P1Element::str() const { return infinite_ ? "inf" : value_.str(); }

P1Element theta_map(const P1Element& x) {
    if (x.is_infinity() || x.value().is_zero()) return P1Element::infinity(x.field());
    return P1Element::finite(x.value() + x.value().inverse());
}

char partition_class_name(PartitionClass c) {
    switch (c) {
        case PartitionClass::A: return 'A';
        case PartitionClass::B: return 'B';
        case PartitionClass::C: return 'C';
    }
    return '?';
}

PartitionClass classify(const P1Element& x) {
    const auto& f = *x.field();
    if (f.p() != 5)
        throw std::invalid_argument("partition classes are only defined in characteristic 5");
    if (x.is_infinity()) return PartitionClass::A;
    uint64_t v = x.value().index();
    if (f.n() % 2 == 1 && (v == 1 || v == f.neg(1))) return PartitionClass::C;
    uint64_t rhs = f.add(f.mul(f.mul(v, v), v), v); // x^3 + x
    return f.is_square(rhs) ? PartitionClass::A : PartitionClass::B;
}

} // namespace theta
