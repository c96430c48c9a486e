#pragma once

#include <cstdint>
#include <vector>

#include "theta/ffield.hpp"
#include "theta/gaussian.hpp"

namespace theta {

/// A point of E: y^2 = x^3 + x, affine or the identity O.
class ECPoint {
  public:
    static ECPoint at_infinity() { return ECPoint(); }
    static ECPoint affine(FFElement x, FFElement y);

    bool is_infinity() const { return inf_; }
    const FFElement& x() const;
    const FFElement& y() const;
    bool operator==(const ECPoint& o) const;
    bool operator!=(const ECPoint& o) const { return !(*this == o); }
    std::string str() const;

  private:
    ECPoint() : inf_(true) {}

    bool inf_;
    FFElement x_, y_;
};

/// E: y^2 = x^3 + x over a finite field of characteristic 5, with its
/// degree-2 isogeny pair and the Z[i] endomorphism action.
class Curve {
  public:
    explicit Curve(Fq field);

    const Fq& field() const { return field_; }
    bool contains(const ECPoint& P) const;

    ECPoint add(const ECPoint& P, const ECPoint& Q) const; // throws std::domain_error off-curve
    ECPoint neg(const ECPoint& P) const;
    ECPoint duplicate(const ECPoint& P) const;
    ECPoint scalar_mul(const BigInt& k, const ECPoint& P) const;

    /// phi(x,y) = ((x^2+1)/x, y(x^2-1)/x^2); on its kernel {O,(0,0)} returns O.
    ECPoint isogeny_phi(const ECPoint& P) const;
    /// Dual: ((-x^2-1)/x, 2y(x^2-1)/x^2); same kernel convention.
    ECPoint isogeny_phi_bar(const ECPoint& P) const;

    /// Coordinates raised to the p^n-th power.
    ECPoint frobenius(const ECPoint& P, int n) const;

    /// The order-4 automorphism realizing i: (x,y) -> (-x, c y), with the
    /// sign of c fixed once by the identity pi_5 P = P + 2 i(P) on E(F_25).
    ECPoint endo_i(const ECPoint& P) const;

    /// (a + bi) P = [a]P + [b] i(P).
    ECPoint endo_apply(const GaussInt& z, const ECPoint& P) const;

    /// |E(F_q)| including O, by enumerating x.
    uint64_t count_points() const;
    std::vector<ECPoint> enumerate_points() const;

  private:
    void require_on_curve(const ECPoint& P) const;

    Fq field_;
};

/// The y scale c in {2,3} used by endo_i (computed once, cached).
int endo_i_y_scale();

/// All P in E(F_{5^{2n}}) with (pi_5^n + 1)P = O, i.e. frob^n(P) = -P.
/// `ext` must be the curve over F_{5^{2n}}.
std::vector<ECPoint> kernel_pi_plus_one(const Curve& ext, int n);

/// E*: {O,(0,0),(2,0),(3,0)} plus, for odd n, (1,+-sqrt(2)) and (-1,+-sqrt(3)).
std::vector<ECPoint> special_set(const Curve& ext, int n);

} // namespace theta
