#pragma once

#include "sgkt/errors.hpp"
#include "sgkt/int.hpp"

#include <string>

namespace sgkt {

enum class OmegaKind { sqrt_d, half_one_plus_sqrt_d };

// An order of a quadratic field Q(sqrt(d)) with integral basis {1, w},
// or the base ring Z (signalled by d == 0). The generator w satisfies
// w^2 = t*w - n where t = trace(w) and n = norm(w); all element and ideal
// arithmetic is written against (t, n) so the two omega conventions share
// one code path.
class Order {
public:
    Order() : d_(0), disc_(1), t_(0), n_(0), kind_(OmegaKind::sqrt_d) {}

    static Order make(const Int& d) {
        if (d == 0) return Order();
        if (d == 1) throw domain_error("make_order: d = 1 does not define a quadratic field");
        if (!is_squarefree(d)) throw domain_error("make_order: d must be squarefree, got " + d.str());
        Order o;
        o.d_ = d;
        if (fmod(d, 4) == 1) {
            o.kind_ = OmegaKind::half_one_plus_sqrt_d;
            o.disc_ = d;
            o.t_ = 1;
            o.n_ = (1 - d) / 4;
        } else {
            o.kind_ = OmegaKind::sqrt_d;
            o.disc_ = 4 * d;
            o.t_ = 0;
            o.n_ = -d;
        }
        return o;
    }

    const Int& d() const { return d_; }
    const Int& disc() const { return disc_; }
    OmegaKind omega_kind() const { return kind_; }

    // w^2 = omega_trace()*w - omega_norm()
    const Int& omega_trace() const { return t_; }
    const Int& omega_norm() const { return n_; }

    bool is_zring() const { return d_ == 0; }
    bool is_imaginary() const { return d_ < 0; }

    // Imaginary quadratic and Z have positive definite norm forms, which is
    // what the by-norm enumerators require.
    bool norm_definite() const { return d_ <= 0; }

    bool operator==(const Order& o) const { return d_ == o.d_; }
    bool operator!=(const Order& o) const { return d_ != o.d_; }

    std::string describe() const {
        if (is_zring()) return "Z";
        return "Z[w], w = " + std::string(kind_ == OmegaKind::sqrt_d ? "sqrt(" : "(1+sqrt(") +
               d_.str() + (kind_ == OmegaKind::sqrt_d ? ")" : "))/2") + ", disc " + disc_.str();
    }

private:
    Int d_;
    Int disc_;
    Int t_, n_;
    OmegaKind kind_;
};

inline Order make_order(const Int& d) { return Order::make(d); }

}  // namespace sgkt
