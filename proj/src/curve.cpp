#include "theta/curve.hpp"

#include <algorithm>

namespace theta {

ECPoint ECPoint::affine(FFElement x, FFElement y) {
    ECPoint P;
    P.inf_ = false;
    P.x_ = std::move(x);
    P.y_ = std::move(y);
    return P;
}

const FFElement& ECPoint::x() const {
    if (inf_) throw std::domain_error("no coordinates at the identity");
    return x_;
}

const FFElement& ECPoint::y() const {
    if (inf_) throw std::domain_error("no coordinates at the identity");
    return y_;
}

bool ECPoint::operator==(const ECPoint& o) const {
    if (inf_ || o.inf_) return inf_ == o.inf_;
    return x_ == o.x_ && y_ == o.y_;
}

std::string ECPoint::str() const {
    if (inf_) return "O";
    return "(" + x_.str() + "," + y_.str() + ")";
}

Curve::Curve(Fq field) : field_(std::move(field)) {
    if (!field_) throw std::invalid_argument("curve requires a field");
    if (field_->p() != 5) throw std::invalid_argument("curve arithmetic requires characteristic 5");
}

bool Curve::contains(const ECPoint& P) const {
    if (P.is_infinity()) return true;
    const FFElement& x = P.x();
    const FFElement& y = P.y();
    if (!x.field()->same_spec(*field_)) throw std::invalid_argument("mismatched field specs");
    return y * y == x * x * x + x;
}

void Curve::require_on_curve(const ECPoint& P) const {
    if (!contains(P)) throw std::domain_error("point is not on the curve");
}

ECPoint Curve::neg(const ECPoint& P) const {
    if (P.is_infinity()) return P;
    return ECPoint::affine(P.x(), -P.y());
}

ECPoint Curve::add(const ECPoint& P, const ECPoint& Q) const {
    require_on_curve(P);
    require_on_curve(Q);
    if (P.is_infinity()) return Q;
    if (Q.is_infinity()) return P;
    const FFElement &x1 = P.x(), &y1 = P.y(), &x2 = Q.x(), &y2 = Q.y();
    if (x1 == x2 && y1 == -y2) return ECPoint::at_infinity();
    FFElement one(field_, field_->from_int(1));
    FFElement lambda;
    if (x1 == x2) {
        // tangent; a = 1 in y^2 = x^3 + ax
        FFElement three(field_, field_->from_int(3));
        FFElement two(field_, field_->from_int(2));
        lambda = (three * x1 * x1 + one) / (two * y1);
    } else {
        lambda = (y2 - y1) / (x2 - x1);
    }
    FFElement x3 = lambda * lambda - x1 - x2;
    FFElement y3 = lambda * (x1 - x3) - y1;
    return ECPoint::affine(x3, y3);
}

ECPoint Curve::duplicate(const ECPoint& P) const { return add(P, P); }

ECPoint Curve::scalar_mul(const BigInt& k, const ECPoint& P) const {
    require_on_curve(P);
    BigInt m = k;
    ECPoint base = P;
    if (m < 0) {
        m = -m;
        base = neg(base);
    }
    ECPoint acc = ECPoint::at_infinity();
    while (m > 0) {
        if ((m & 1) != 0) acc = add(acc, base);
        base = add(base, base);
        m >>= 1;
    }
    return acc;
}

ECPoint Curve::isogeny_phi(const ECPoint& P) const {
    require_on_curve(P);
    if (P.is_infinity() || (P.x().is_zero() && P.y().is_zero())) return ECPoint::at_infinity();
    const FFElement &x = P.x(), &y = P.y();
    FFElement one(field_, field_->from_int(1));
    FFElement x2 = x * x;
    return ECPoint::affine((x2 + one) / x, y * (x2 - one) / x2);
}

ECPoint Curve::isogeny_phi_bar(const ECPoint& P) const {
    require_on_curve(P);
    if (P.is_infinity() || (P.x().is_zero() && P.y().is_zero())) return ECPoint::at_infinity();
    const FFElement &x = P.x(), &y = P.y();
    FFElement one(field_, field_->from_int(1));
    FFElement two(field_, field_->from_int(2));
    FFElement x2 = x * x;
    return ECPoint::affine(-(x2 + one) / x, two * y * (x2 - one) / x2);
}

ECPoint Curve::frobenius(const ECPoint& P, int n) const {
    if (P.is_infinity()) return P;
    require_on_curve(P);
    uint64_t xi = P.x().index(), yi = P.y().index();
    for (int k = 0; k < n; ++k) {
        xi = field_->frobenius(xi);
        yi = field_->frobenius(yi);
    }
    return ECPoint::affine(FFElement(field_, xi), FFElement(field_, yi));
}

int endo_i_y_scale() {
    static const int scale = [] {
        Fq f25 = FiniteField::make(5, 2);
        Curve e(f25);
        for (int c : {2, 3}) {
            bool ok = true;
            for (const ECPoint& P : e.enumerate_points()) {
                ECPoint iP = P.is_infinity()
                                 ? P
                                 : ECPoint::affine(-P.x(), FFElement(f25, f25->from_int(c)) * P.y());
                if (e.frobenius(P, 1) != e.add(P, e.duplicate(iP))) {
                    ok = false;
                    break;
                }
            }
            if (ok) return c;
        }
        throw std::logic_error("no y scale satisfies pi_5 = 1 + 2i");
    }();
    return scale;
}

ECPoint Curve::endo_i(const ECPoint& P) const {
    if (P.is_infinity()) return P;
    require_on_curve(P);
    FFElement c(field_, field_->from_int(endo_i_y_scale()));
    return ECPoint::affine(-P.x(), c * P.y());
}

ECPoint Curve::endo_apply(const GaussInt& z, const ECPoint& P) const {
    require_on_curve(P);
    return add(scalar_mul(z.a, P), scalar_mul(z.b, endo_i(P)));
}

uint64_t Curve::count_points() const {
    uint64_t count = 1; // O
    for (uint64_t x = 0; x < field_->q(); ++x) {
        uint64_t rhs = field_->add(field_->mul(field_->mul(x, x), x), x);
        if (rhs == 0)
            count += 1;
        else if (field_->is_square(rhs))
            count += 2;
    }
    return count;
}

std::vector<ECPoint> Curve::enumerate_points() const {
    std::vector<ECPoint> pts;
    pts.push_back(ECPoint::at_infinity());
    for (uint64_t x = 0; x < field_->q(); ++x) {
        uint64_t rhs = field_->add(field_->mul(field_->mul(x, x), x), x);
        if (rhs == 0) {
            pts.push_back(ECPoint::affine(FFElement(field_, x), FFElement(field_, 0)));
        } else if (auto s = field_->sqrt(rhs)) {
            pts.push_back(ECPoint::affine(FFElement(field_, x), FFElement(field_, *s)));
            pts.push_back(ECPoint::affine(FFElement(field_, x), FFElement(field_, field_->neg(*s))));
        }
    }
    return pts;
}

std::vector<ECPoint> kernel_pi_plus_one(const Curve& ext, int n) {
    if (ext.field()->n() != 2 * n) throw std::invalid_argument("curve must live over F_{5^{2n}}");
    std::vector<ECPoint> out;
    for (const ECPoint& P : ext.enumerate_points())
        if (ext.frobenius(P, n) == ext.neg(P)) out.push_back(P);
    return out;
}

std::vector<ECPoint> special_set(const Curve& ext, int n) {
    const Fq& f = ext.field();
    if (f->n() != 2 * n) throw std::invalid_argument("curve must live over F_{5^{2n}}");
    std::vector<ECPoint> out;
    out.push_back(ECPoint::at_infinity());
    FFElement zero(f, 0);
    for (int64_t c : {0, 2, 3})
        out.push_back(ECPoint::affine(FFElement(f, f->from_int(c)), zero));
    if (n % 2 == 1) {
        auto push_pair = [&](int64_t xc, uint64_t square) {
            auto s = f->sqrt(square);
            if (!s) throw std::logic_error("square root missing in quadratic extension");
            FFElement x(f, f->from_int(xc)), y(f, *s);
            out.push_back(ECPoint::affine(x, y));
            out.push_back(ECPoint::affine(x, -y));
        };
        push_pair(1, f->from_int(2));  // y^2 = 1^3 + 1 = 2
        push_pair(-1, f->from_int(3)); // y^2 = (-1)^3 - 1 = -2
    }
    return out;
}

} // namespace theta
