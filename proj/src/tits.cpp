#include "titsforge/tits.hpp"

#include "titsforge/detail/interpolate.hpp"

namespace titsforge {

std::string variant_name(Variant v) {
    switch (v) {
        case Variant::LL: return "ll";
        case Variant::LR: return "lr";
        case Variant::RL: return "rl";
        case Variant::RR: return "rr";
    }
    return "?";
}

Variant variant_from_name(const std::string& name) {
    if (name == "ll") return Variant::LL;
    if (name == "lr") return Variant::LR;
    if (name == "rl") return Variant::RL;
    if (name == "rr") return Variant::RR;
    throw ParseError("unknown variant '" + name + "' (expected ll, lr, rl, rr)");
}

namespace {
bool descriptor_commutative(const AlgebraDescriptor& d) {
    return d.tag() == AlgebraTag::SplitEtale || d.tag() == AlgebraTag::CyclicCubicField;
}
} // namespace

TitsAlgebra::TitsAlgebra(DescriptorPtr A, AlgElement mu, AlgElement mu_inv, Variant v)
    : A_(std::move(A)), mu_(std::move(mu)), mu_inv_(std::move(mu_inv)), variant_(v) {}

TitsPtr TitsAlgebra::make(DescriptorPtr A, AlgElement mu, Variant variant) {
    if (mu.descriptor().get() != A.get())
        throw SpecMismatch("mu does not live in the coefficient algebra");
    const Scalar n = norm(mu);
    if (n.is_zero()) throw ValidationError("mu not invertible (N_A(mu) = 0)");
    AlgElement mu_inv = n.inverse() * adjoint(mu);
    if (mu * mu_inv != A->unit() || mu_inv * mu != A->unit())
        throw InternalInconsistency("mu * mu_inv != 1 after inversion");
    // positional variants only differ when A is noncommutative
    if (descriptor_commutative(*A)) variant = Variant::LL;

    auto J = std::shared_ptr<TitsAlgebra>(
        new TitsAlgebra(std::move(A), std::move(mu), std::move(mu_inv), variant));
    J->mu_scalar_ = as_scalar(J->mu_).has_value();
    const auto& d = *J->A_;
    std::vector<std::vector<Scalar>> rows = {d.unit().coords(), J->mu_.coords(),
                                             (J->mu_ * J->mu_).coords()};
    J->mu_indep_ = rank_of(rows, d.dim(), d.field()) == 3;
    return J;
}

TitsElement TitsAlgebra::element(AlgElement x0, AlgElement x1, AlgElement x2) const {
    return TitsElement(shared_from_this(), std::move(x0), std::move(x1), std::move(x2));
}

TitsElement TitsAlgebra::zero() const {
    return element(A_->zero(), A_->zero(), A_->zero());
}

TitsElement TitsAlgebra::unit() const {
    return element(A_->unit(), A_->zero(), A_->zero());
}

TitsElement TitsAlgebra::embed(int slot, const AlgElement& a) const {
    auto x0 = slot == 0 ? a : A_->zero();
    auto x1 = slot == 1 ? a : A_->zero();
    auto x2 = slot == 2 ? a : A_->zero();
    return element(std::move(x0), std::move(x1), std::move(x2));
}

std::string TitsAlgebra::str() const {
    return "J(" + A_->str() + ", mu=" + mu_.str() + ", " + variant_name(variant_) + ")";
}

TitsElement::TitsElement(TitsPtr parent, AlgElement x0, AlgElement x1, AlgElement x2)
    : parent_(std::move(parent)), c_{std::move(x0), std::move(x1), std::move(x2)} {
    for (const auto& c : c_)
        if (c.descriptor().get() != parent_->coeff().get())
            throw SpecMismatch("component from a different coefficient algebra");
}

bool TitsElement::is_zero() const {
    return c_[0].is_zero() && c_[1].is_zero() && c_[2].is_zero();
}

TitsElement TitsElement::operator-() const {
    return TitsElement(parent_, -c_[0], -c_[1], -c_[2]);
}

namespace {
void require_same_parent(const TitsElement& a, const TitsElement& b) {
    if (a.parent().get() != b.parent().get())
        throw SpecMismatch("elements of different Tits algebras");
}

// mu (or mu^{-1}) times v, on the side the variant dictates
AlgElement place(const AlgElement& m, const AlgElement& v, bool left) {
    return left ? m * v : v * m;
}
} // namespace

TitsElement operator+(const TitsElement& a, const TitsElement& b) {
    require_same_parent(a, b);
    return TitsElement(a.parent_, a.c_[0] + b.c_[0], a.c_[1] + b.c_[1], a.c_[2] + b.c_[2]);
}

TitsElement operator-(const TitsElement& a, const TitsElement& b) {
    require_same_parent(a, b);
    return TitsElement(a.parent_, a.c_[0] - b.c_[0], a.c_[1] - b.c_[1], a.c_[2] - b.c_[2]);
}

TitsElement operator*(const Scalar& c, const TitsElement& x) {
    return TitsElement(x.parent_, c * x.c_[0], c * x.c_[1], c * x.c_[2]);
}

bool operator==(const TitsElement& a, const TitsElement& b) {
    require_same_parent(a, b);
    return a.c_ == b.c_;
}

std::string TitsElement::str() const {
    return "(" + c_[0].str() + ", " + c_[1].str() + ", " + c_[2].str() + ")";
}

TitsElement operator*(const TitsElement& x, const TitsElement& y) {
    require_same_parent(x, y);
    const auto& J = *x.parent();
    const Variant v = J.variant();
    const bool inv_left = (v == Variant::LL || v == Variant::LR);
    const bool mu_left = (v == Variant::LL || v == Variant::RL);
    const AlgElement &x0 = x.slot(0), &x1 = x.slot(1), &x2 = x.slot(2);
    const AlgElement &y0 = y.slot(0), &y1 = y.slot(1), &y2 = y.slot(2);

    AlgElement s0 = jordan(x0, y0) + bar(x1 * y2) + bar(y1 * x2);
    AlgElement s1 = bar(x0) * y1 + bar(y0) * x1 + place(J.mu_inverse(), cross(x2, y2), inv_left);
    AlgElement s2 = x2 * bar(y0) + y2 * bar(x0) + place(J.mu(), cross(x1, y1), mu_left);
    return TitsElement(x.parent(), std::move(s0), std::move(s1), std::move(s2));
}

AlgElement tits_norm(const TitsElement& x) {
    const auto& J = *x.parent();
    const auto& A = *J.coeff();
    AlgElement out = A.scalar_element(norm(x.slot(0)));
    out = out + norm(x.slot(1)) * J.mu();
    out = out + norm(x.slot(2)) * J.mu_inverse();
    out = out - A.scalar_element(reduced_trace(x.slot(0) * x.slot(1) * x.slot(2)));
    return out;
}

Scalar tits_trace(const TitsElement& x) { return reduced_trace(x.slot(0)); }

TitsElement tits_adjoint(const TitsElement& x) {
    const auto& J = *x.parent();
    const Variant v = J.variant();
    const bool inv_left = (v == Variant::LL || v == Variant::LR);
    const bool mu_left = (v == Variant::LL || v == Variant::RL);
    const AlgElement &x0 = x.slot(0), &x1 = x.slot(1), &x2 = x.slot(2);
    return TitsElement(x.parent(), adjoint(x0) - x1 * x2,
                       place(J.mu_inverse(), adjoint(x2), inv_left) - x0 * x1,
                       place(J.mu(), adjoint(x1), mu_left) - x2 * x0);
}

TitsElement tits_sharp(const TitsElement& x, const TitsElement& y) {
    return tits_adjoint(x + y) - tits_adjoint(x) - tits_adjoint(y);
}

TitsElement tits_sharp_closed_form(const TitsElement& x, const TitsElement& y) {
    const auto& J = *x.parent();
    const Variant v = J.variant();
    const bool inv_left = (v == Variant::LL || v == Variant::LR);
    const bool mu_left = (v == Variant::LL || v == Variant::RL);
    const AlgElement &x0 = x.slot(0), &x1 = x.slot(1), &x2 = x.slot(2);
    const AlgElement &y0 = y.slot(0), &y1 = y.slot(1), &y2 = y.slot(2);
    return TitsElement(x.parent(), sharp(x0, y0) - x1 * y2 - y1 * x2,
                       place(J.mu_inverse(), sharp(x2, y2), inv_left) - x0 * y1 - y0 * x1,
                       place(J.mu(), sharp(x1, y1), mu_left) - x2 * y0 - y2 * x0);
}

TitsElement tits_cross(const TitsElement& x, const TitsElement& y) {
    return small_inverse(2, x.parent()->coeff()->field()) * tits_sharp(x, y);
}

AlgElement tits_s(const TitsElement& x) {
    const auto& J = *x.parent();
    const FieldSpec& f = J.coeff()->field();
    const TitsElement one = J.unit();
    AlgElement s = detail::cubic_linear_coefficient<AlgElement>(
        f, [&](const Scalar& t) { return tits_norm(x + t * one); }, tits_norm(x));
    if (const auto lambda = as_scalar(s)) {
        if (*lambda != tits_trace(tits_adjoint(x)))
            throw InternalInconsistency("S(x) != T(x^#) for x = " + x.str());
    }
    return s;
}

AlgElement tits_s_bilinear(const TitsElement& x, const TitsElement& y) {
    return tits_s(x + y) - tits_s(x) - tits_s(y);
}

Scalar tits_trace_form(const TitsElement& x, const TitsElement& y) {
    require_same_parent(x, y);
    return reduced_trace(x.slot(0) * y.slot(0)) + reduced_trace(x.slot(1) * y.slot(2)) +
           reduced_trace(x.slot(2) * y.slot(1));
}

TitsElement tits_u(const TitsElement& x, const TitsElement& y) {
    return tits_trace_form(x, y) * x - tits_sharp(tits_adjoint(x), y);
}

TitsElement tits_u_bilinear(const TitsElement& x, const TitsElement& y, const TitsElement& z) {
    return tits_u(x + y, z) - tits_u(x, z) - tits_u(y, z);
}

TitsElement scale_by_coeff(const AlgElement& a, const TitsElement& x) {
    return TitsElement(x.parent(), a * x.slot(0), a * x.slot(1), a * x.slot(2));
}

bool commutes_with_mu(const TitsAlgebra& J, const AlgElement& a) {
    return a * J.mu() == J.mu() * a;
}

TitsElement tits_inverse_conditional(const TitsElement& x) {
    const auto& J = *x.parent();
    const AlgElement &x0 = x.slot(0), &x1 = x.slot(1), &x2 = x.slot(2);
    const bool pattern_a =
        x2.is_zero() && commutes_with_mu(J, x1) && norm(x1).is_zero();
    const bool pattern_b =
        x1.is_zero() && commutes_with_mu(J, x0) && norm(x2).is_zero();
    if (!pattern_a && !pattern_b)
        throw HypothesisNotSatisfied("x matches neither (x0, x1, 0) with commuting "
                                     "norm-zero x1 nor (x0, 0, x2) with commuting x0 and "
                                     "norm-zero x2");
    const AlgElement n = tits_norm(x);
    const auto lambda = as_scalar(n);
    if (!lambda)
        throw InternalInconsistency("N(x) not scalar under the inverse hypotheses");
    if (lambda->is_zero()) throw NotInvertible("N(x) = 0 for x = " + x.str());
    const TitsElement inv = lambda->inverse() * tits_adjoint(x);
    if (x * inv != J.unit() || inv * x != J.unit())
        throw InternalInconsistency("inverse verification failed for x = " + x.str());
    return inv;
}

} // namespace titsforge
