#pragma once

#include "sgkt/errors.hpp"
#include "sgkt/int.hpp"
#include "sgkt/order.hpp"

#include <ostream>
#include <sstream>
#include <string>

namespace sgkt {

// (x + y*w)/den in lowest terms: gcd(x, y, den) = 1, den >= 1.
// Over Z the w-coordinate is identically zero.
class FieldElement {
public:
    FieldElement() : ord_(), x_(0), y_(0), den_(1) {}

    FieldElement(Order ord, Int x, Int y = 0, Int den = 1)
        : ord_(std::move(ord)), x_(std::move(x)), y_(std::move(y)), den_(std::move(den)) {
        if (den_ == 0) throw domain_error("FieldElement: zero denominator");
        if (ord_.is_zring() && y_ != 0)
            throw domain_error("FieldElement: nonzero w-coordinate over Z");
        normalize();
    }

    static FieldElement zero(const Order& ord) { return FieldElement(ord, 0); }
    static FieldElement one(const Order& ord) { return FieldElement(ord, 1); }
    // Over Z the basis has no second slot; omega degrades to 0 there.
    static FieldElement omega(const Order& ord) {
        return ord.is_zring() ? zero(ord) : FieldElement(ord, 0, 1);
    }

    const Order& order() const { return ord_; }
    const Int& x() const { return x_; }
    const Int& y() const { return y_; }
    const Int& den() const { return den_; }

    bool is_zero() const { return x_ == 0 && y_ == 0; }
    bool is_one() const { return x_ == 1 && y_ == 0 && den_ == 1; }
    bool is_integral() const { return den_ == 1; }

    FieldElement operator-() const { return FieldElement(ord_, -x_, -y_, den_); }

    FieldElement operator+(const FieldElement& o) const {
        check_order(o);
        return FieldElement(ord_, x_ * o.den_ + o.x_ * den_, y_ * o.den_ + o.y_ * den_,
                            den_ * o.den_);
    }

    FieldElement operator-(const FieldElement& o) const { return *this + (-o); }

    FieldElement operator*(const FieldElement& o) const {
        check_order(o);
        const Int& t = ord_.omega_trace();
        const Int& n = ord_.omega_norm();
        Int nx = x_ * o.x_ - n * (y_ * o.y_);
        Int ny = x_ * o.y_ + y_ * o.x_ + t * (y_ * o.y_);
        return FieldElement(ord_, nx, ny, den_ * o.den_);
    }

    FieldElement operator*(const Int& k) const { return FieldElement(ord_, x_ * k, y_ * k, den_); }

    // Galois conjugate: x + y*(t - w).
    FieldElement conj() const {
        return FieldElement(ord_, x_ + ord_.omega_trace() * y_, -y_, den_);
    }

    // Field norm u * conj(u) as an exact rational.
    Rational norm() const {
        return Rational(norm_num(), den_ * den_);
    }

    // Numerator norm x^2 + t*x*y + n*y^2 (the norm of den * u, an integer).
    Int norm_num() const {
        return x_ * x_ + ord_.omega_trace() * x_ * y_ + ord_.omega_norm() * y_ * y_;
    }

    FieldElement inverse() const {
        if (is_zero()) throw domain_error("FieldElement: inversion of zero");
        Int nn = norm_num();
        // 1/u = conj(u) * den^2 / N(den*u); conj() carries 1/den already.
        FieldElement c = conj();
        return FieldElement(ord_, c.x() * den_ * den_, c.y() * den_ * den_, c.den() * nn);
    }

    FieldElement operator/(const FieldElement& o) const { return *this * o.inverse(); }

    bool operator==(const FieldElement& o) const {
        return ord_ == o.ord_ && x_ == o.x_ && y_ == o.y_ && den_ == o.den_;
    }
    bool operator!=(const FieldElement& o) const { return !(*this == o); }

    // Deterministic total order (used for canonical set ordering only).
    bool operator<(const FieldElement& o) const {
        if (den_ != o.den_) return den_ < o.den_;
        if (x_ != o.x_) return x_ < o.x_;
        return y_ < o.y_;
    }

    // Canonical text form "(x+y*w)" with "/den" appended when den > 1.
    std::string str() const {
        std::ostringstream os;
        os << "(" << x_.str();
        if (y_ >= 0)
            os << "+" << y_.str();
        else
            os << "-" << abs_int(y_).str();
        os << "*w)";
        if (den_ != 1) os << "/" << den_.str();
        return os.str();
    }

    friend std::ostream& operator<<(std::ostream& os, const FieldElement& e) {
        return os << e.str();
    }

private:
    void normalize() {
        if (den_ < 0) {
            den_ = -den_;
            x_ = -x_;
            y_ = -y_;
        }
        Int g = gcd_int(gcd_int(x_, y_), den_);
        if (g > 1) {
            x_ /= g;
            y_ /= g;
            den_ /= g;
        }
    }

    void check_order(const FieldElement& o) const {
        if (ord_ != o.ord_) throw domain_error("FieldElement: mixed orders");
    }

    Order ord_;
    Int x_, y_, den_;
};

inline FieldElement elem_mul(const FieldElement& u, const FieldElement& v) { return u * v; }
inline FieldElement elem_inv(const FieldElement& u) { return u.inverse(); }
inline Rational elem_norm(const FieldElement& u) { return u.norm(); }

}  // namespace sgkt
