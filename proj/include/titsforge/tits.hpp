#ifndef TITSFORGE_TITS_HPP
#define TITSFORGE_TITS_HPP

#include <array>
#include <memory>
#include <string>

#include "titsforge/algebra.hpp"

namespace titsforge {

class TitsAlgebra;
using TitsPtr = std::shared_ptr<const TitsAlgebra>;

/// Placement of mu^{-1} (slot 1) and mu (slot 2) in the two cross terms of
/// the product. LL is the standard construction; the other three only differ
/// for noncommutative A, and the builder normalizes them away otherwise.
enum class Variant { LL, LR, RL, RR };

std::string variant_name(Variant v);
Variant variant_from_name(const std::string& name);

class TitsElement;

/// The tripling A0 + A1 + A2 of a degree-3 coefficient algebra with an
/// invertible scaling element mu in A. mu^{-1} = N_A(mu)^{-1} mu^# is
/// computed once at build time; every product uses it.
class TitsAlgebra : public std::enable_shared_from_this<TitsAlgebra> {
public:
    static TitsPtr make(DescriptorPtr A, AlgElement mu, Variant variant = Variant::LL);

    const DescriptorPtr& coeff() const { return A_; }
    const AlgElement& mu() const { return mu_; }
    const AlgElement& mu_inverse() const { return mu_inv_; }
    Variant variant() const { return variant_; }

    /// mu = lambda 1 for some scalar lambda (the classical regime).
    bool mu_in_base_field() const { return mu_scalar_; }
    /// rank{1, mu, mu^2} = 3 over F.
    bool mu_powers_independent() const { return mu_indep_; }

    int dim() const { return 3 * A_->dim(); }

    TitsElement element(AlgElement x0, AlgElement x1, AlgElement x2) const;
    TitsElement zero() const;
    TitsElement unit() const;
    /// Element with a in the given slot and 0 elsewhere.
    TitsElement embed(int slot, const AlgElement& a) const;

    std::string str() const;

private:
    TitsAlgebra(DescriptorPtr A, AlgElement mu, AlgElement mu_inv, Variant v);
    DescriptorPtr A_;
    AlgElement mu_, mu_inv_;
    Variant variant_;
    bool mu_scalar_ = false;
    bool mu_indep_ = false;
};

class TitsElement {
public:
    TitsElement(TitsPtr parent, AlgElement x0, AlgElement x1, AlgElement x2);

    const TitsPtr& parent() const { return parent_; }
    const AlgElement& slot(int i) const { return c_[static_cast<std::size_t>(i)]; }
    bool is_zero() const;

    TitsElement operator-() const;
    friend TitsElement operator+(const TitsElement& a, const TitsElement& b);
    friend TitsElement operator-(const TitsElement& a, const TitsElement& b);
    friend TitsElement operator*(const TitsElement& a, const TitsElement& b);
    friend TitsElement operator*(const Scalar& c, const TitsElement& x);
    friend bool operator==(const TitsElement& a, const TitsElement& b);
    friend bool operator!=(const TitsElement& a, const TitsElement& b) { return !(a == b); }

    std::string str() const;

private:
    TitsPtr parent_;
    std::array<AlgElement, 3> c_;
};

/// The A-valued cubic map N(x) = N_A(x0) + mu N_A(x1) + mu^{-1} N_A(x2)
/// - T_A(x0 x1 x2), scalar terms embedded along the unit.
AlgElement tits_norm(const TitsElement& x);
Scalar tits_trace(const TitsElement& x);
/// The variant's adjoint; slot-0 part is x0^# - x1 x2 for every variant.
TitsElement tits_adjoint(const TitsElement& x);
/// Linearization (x+y)^# - x^# - y^#.
TitsElement tits_sharp(const TitsElement& x, const TitsElement& y);
TitsElement tits_cross(const TitsElement& x, const TitsElement& y);
/// S(x) = N(x; 1) by interpolation; cross-checked against T(x^#) (they must
/// agree whenever the value is scalar, which it always is).
AlgElement tits_s(const TitsElement& x);
AlgElement tits_s_bilinear(const TitsElement& x, const TitsElement& y);
/// T(x, y) = T_A(x0 y0) + T_A(x1 y2) + T_A(x2 y1).
Scalar tits_trace_form(const TitsElement& x, const TitsElement& y);
TitsElement tits_u(const TitsElement& x, const TitsElement& y);
TitsElement tits_u_bilinear(const TitsElement& x, const TitsElement& y, const TitsElement& z);

/// Componentwise left scaling (a x0, a x1, a x2) by a coefficient-algebra
/// element; the meaning of "N(x) x" when N(x) is not scalar.
TitsElement scale_by_coeff(const AlgElement& a, const TitsElement& x);

/// Inverse under the two component patterns that make x x^# = x^# x = N(x) 1:
/// (x0, x1, 0) with x1 mu = mu x1 and N_A(x1) = 0, or (x0, 0, x2) with
/// x0 mu = mu x0 and N_A(x2) = 0, and N(x) != 0. The product with the
/// returned element is verified on both sides before returning.
TitsElement tits_inverse_conditional(const TitsElement& x);

bool commutes_with_mu(const TitsAlgebra& J, const AlgElement& a);

/// The closed-form sharp display for the active variant; tits_sharp must
/// agree with it (that agreement is identity J7).
TitsElement tits_sharp_closed_form(const TitsElement& x, const TitsElement& y);

} // namespace titsforge

#endif
