#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "theta/errors.hpp"
#include "theta/gaussian.hpp"

namespace theta {

inline constexpr uint64_t kDefaultVertexBudget = 10'000'000;

class FiniteField;
using Fq = std::shared_ptr<const FiniteField>;

/// F_{p^n} as F_p[t]/(m(t)) for an odd prime p. Elements are encoded as
/// base-p digit packings of their coefficient vectors; log/antilog tables
/// built at construction give O(1) multiplication, inversion and dlog.
class FiniteField : public std::enable_shared_from_this<FiniteField> {
  public:
    /// Default modulus: built-in Conway table for p = 5, n <= 12; otherwise
    /// the lexicographically smallest monic primitive polynomial. Default
    /// generator: the class of t when the modulus is primitive, otherwise
    /// the smallest primitive element. Overrides are validated.
    static Fq make(int64_t p, int n,
                   std::optional<std::vector<int>> modulus = std::nullopt,
                   std::optional<std::vector<int>> generator = std::nullopt,
                   uint64_t table_budget = kDefaultVertexBudget);

    int64_t p() const { return p_; }
    int n() const { return n_; }
    uint64_t q() const { return q_; }
    const std::vector<int>& modulus() const { return modulus_; }
    uint64_t generator() const { return antilog_[1]; }
    bool same_spec(const FiniteField& other) const;

    // element ops on encoded indices
    uint64_t add(uint64_t x, uint64_t y) const;
    uint64_t sub(uint64_t x, uint64_t y) const;
    uint64_t neg(uint64_t x) const;
    uint64_t mul(uint64_t x, uint64_t y) const;
    uint64_t inv(uint64_t x) const; // throws std::domain_error on zero
    uint64_t pow(uint64_t x, const BigInt& e) const;
    uint64_t frobenius(uint64_t x) const; // x^p

    /// Exponent k in [0, q-2] with generator^k = x; x != 0.
    uint64_t dlog(uint64_t x) const;
    /// generator^k
    uint64_t antilog(uint64_t k) const { return antilog_[k % (q_ - 1)]; }

    /// x = 0 or x^{(q-1)/2} = 1 (via dlog parity).
    bool is_square(uint64_t x) const;
    /// One square root if x is a square, else nullopt.
    std::optional<uint64_t> sqrt(uint64_t x) const;

    std::vector<int> coeffs(uint64_t x) const;
    uint64_t from_coeffs(const std::vector<int>& c) const;
    /// Embedded F_p constant.
    uint64_t from_int(int64_t c) const;
    std::string to_string(uint64_t x) const;

  private:
    FiniteField() = default;

    int64_t p_ = 0;
    int n_ = 0;
    uint64_t q_ = 0;
    std::vector<int> modulus_;
    std::vector<uint32_t> antilog_; // size q-1
    std::vector<uint32_t> dlog_;    // size q, entry 0 unused
};

/// Immutable field element: a coefficient vector tied to its field.
class FFElement {
  public:
    FFElement() = default;
    FFElement(Fq field, uint64_t index);

    const Fq& field() const { return field_; }
    uint64_t index() const { return idx_; }
    bool is_zero() const { return idx_ == 0; }
    std::vector<int> coeffs() const { return field_->coeffs(idx_); }

    FFElement operator+(const FFElement& o) const;
    FFElement operator-(const FFElement& o) const;
    FFElement operator*(const FFElement& o) const;
    FFElement operator/(const FFElement& o) const;
    FFElement operator-() const;
    FFElement inverse() const;
    FFElement pow(const BigInt& e) const;
    bool operator==(const FFElement& o) const;
    bool operator!=(const FFElement& o) const { return !(*this == o); }

    std::string str() const { return field_->to_string(idx_); }

  private:
    const FiniteField& checked_field(const FFElement& o) const;

    Fq field_;
    uint64_t idx_ = 0;
};

bool ff_is_square(const FFElement& x);

/// A point of P^1(F_q): a finite field element or the point at infinity.
class P1Element {
  public:
    static P1Element infinity(Fq field);
    static P1Element finite(FFElement x);

    bool is_infinity() const { return infinite_; }
    const FFElement& value() const; // throws std::domain_error at infinity
    const Fq& field() const { return field_; }
    bool operator==(const P1Element& o) const;
    std::string str() const;

  private:
    P1Element(Fq f, bool inf, FFElement v) : field_(std::move(f)), infinite_(inf), value_(std::move(v)) {}

    Fq field_;
    bool infinite_ = false;
    FFElement value_;
};

/// theta(x) = x + x^{-1}, with 0 and infinity sent to infinity.
P1Element theta_map(const P1Element& x);

enum class PartitionClass { A, B, C };

char partition_class_name(PartitionClass c);

/// A_n / B_n / C_n membership of x; requires characteristic 5.
/// infinity -> A; +-1 -> C for odd n; otherwise A iff x^3 + x is a square.
PartitionClass classify(const P1Element& x);

} // namespace theta
