#include "titsforge/cyclic.hpp"

#include "titsforge/rng.hpp"
#include "titsforge/serialize.hpp"

namespace titsforge {

CyclicAlgebra::CyclicAlgebra(DescriptorPtr K, AlgElement mu)
    : K_(std::move(K)), mu_(std::move(mu)), mu_scalar_(as_scalar(mu_).has_value()) {}

CyclicPtr CyclicAlgebra::make(DescriptorPtr K, AlgElement mu) {
    if (!K || K->tag() != AlgebraTag::CyclicCubicField || !K->has_sigma())
        throw ValidationError("cyclic algebra needs a cyclic cubic field with Galois action");
    if (mu.descriptor().get() != K.get())
        throw SpecMismatch("mu does not live in K");
    if (mu.is_zero()) throw ValidationError("mu must be nonzero");
    return std::shared_ptr<CyclicAlgebra>(new CyclicAlgebra(std::move(K), std::move(mu)));
}

CyclicElement CyclicAlgebra::element(AlgElement x0, AlgElement x1, AlgElement x2) const {
    return CyclicElement(shared_from_this(), std::move(x0), std::move(x1), std::move(x2));
}

CyclicElement CyclicAlgebra::zero() const { return element(K_->zero(), K_->zero(), K_->zero()); }

CyclicElement CyclicAlgebra::unit() const { return element(K_->unit(), K_->zero(), K_->zero()); }

CyclicElement CyclicAlgebra::embed(int power, const AlgElement& l) const {
    auto x0 = power == 0 ? l : K_->zero();
    auto x1 = power == 1 ? l : K_->zero();
    auto x2 = power == 2 ? l : K_->zero();
    return element(std::move(x0), std::move(x1), std::move(x2));
}

std::string CyclicAlgebra::str() const {
    return "D(" + K_->str() + ", mu=" + mu_.str() + ")";
}

CyclicElement::CyclicElement(CyclicPtr parent, AlgElement x0, AlgElement x1, AlgElement x2)
    : parent_(std::move(parent)), c_{std::move(x0), std::move(x1), std::move(x2)} {
    for (const auto& c : c_)
        if (c.descriptor().get() != parent_->field_ext().get())
            throw SpecMismatch("coefficient from a different field extension");
}

bool CyclicElement::is_zero() const {
    return c_[0].is_zero() && c_[1].is_zero() && c_[2].is_zero();
}

namespace {
void require_same_parent(const CyclicElement& a, const CyclicElement& b) {
    if (a.parent().get() != b.parent().get())
        throw SpecMismatch("elements of different cyclic algebras");
}
} // namespace

CyclicElement operator+(const CyclicElement& a, const CyclicElement& b) {
    require_same_parent(a, b);
    return CyclicElement(a.parent_, a.c_[0] + b.c_[0], a.c_[1] + b.c_[1], a.c_[2] + b.c_[2]);
}

CyclicElement operator-(const CyclicElement& a, const CyclicElement& b) {
    require_same_parent(a, b);
    return CyclicElement(a.parent_, a.c_[0] - b.c_[0], a.c_[1] - b.c_[1], a.c_[2] - b.c_[2]);
}

CyclicElement operator*(const CyclicElement& x, const CyclicElement& y) {
    require_same_parent(x, y);
    const auto& D = *x.parent();
    const auto& K = *D.field_ext();
    std::array<AlgElement, 3> out = {K.zero(), K.zero(), K.zero()};
    // (x_i z^i)(y_j z^j) = x_i sigma^i(y_j) z^{i+j}, z^3 = mu multiplying on
    // the left of the K-coordinate (K is commutative, so this is just a
    // factor of mu when i + j wraps)
    for (int i = 0; i < 3; ++i) {
        if (x.c_[static_cast<std::size_t>(i)].is_zero()) continue;
        for (int j = 0; j < 3; ++j) {
            const auto& yj = y.c_[static_cast<std::size_t>(j)];
            if (yj.is_zero()) continue;
            AlgElement w = x.c_[static_cast<std::size_t>(i)] * sigma_apply(yj, i);
            if (i + j >= 3) w = D.mu() * w;
            const int k = (i + j) % 3;
            out[static_cast<std::size_t>(k)] = out[static_cast<std::size_t>(k)] + w;
        }
    }
    return CyclicElement(x.parent_, std::move(out[0]), std::move(out[1]), std::move(out[2]));
}

bool operator==(const CyclicElement& a, const CyclicElement& b) {
    require_same_parent(a, b);
    return a.c_ == b.c_;
}

std::string CyclicElement::str() const {
    return "(" + c_[0].str() + ", " + c_[1].str() + ", " + c_[2].str() + ")";
}

CyclicElement scale_left(const AlgElement& l, const CyclicElement& x) {
    return CyclicElement(x.parent(), l * x.coeff(0), l * x.coeff(1), l * x.coeff(2));
}

CyclicElement cyclic_jordan(const CyclicElement& x, const CyclicElement& y) {
    const Scalar half = small_inverse(2, x.parent()->field_ext()->field());
    const CyclicElement s = x * y + y * x;
    return CyclicElement(x.parent(), half * s.coeff(0), half * s.coeff(1), half * s.coeff(2));
}

std::vector<std::vector<AlgElement>> right_mult_matrix(const CyclicElement& x) {
    const auto& D = *x.parent();
    std::vector<std::vector<AlgElement>> rows;
    rows.reserve(3);
    for (int i = 0; i < 3; ++i) {
        const CyclicElement zi = D.embed(i, D.field_ext()->unit());
        const CyclicElement img = zi * x;
        rows.push_back({img.coeff(0), img.coeff(1), img.coeff(2)});
    }
    return rows;
}

AlgElement cyclic_norm(const CyclicElement& x) {
    const auto& D = *x.parent();
    const auto& K = *D.field_ext();
    const auto m = right_mult_matrix(x);
    // cofactor expansion along the first row; K is commutative
    const AlgElement det = m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1]) -
                           m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0]) +
                           m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0]);

    const AlgElement& mu = D.mu();
    AlgElement closed = K.scalar_element(norm(x.coeff(0)));
    closed = closed + norm(x.coeff(1)) * mu;
    closed = closed + norm(x.coeff(2)) * (mu * mu);
    const AlgElement w = x.coeff(0) * sigma_apply(x.coeff(1)) * sigma_apply(x.coeff(2), 2);
    closed = closed - reduced_trace(w) * mu;

    if (det != closed)
        throw InternalInconsistency("det(R_x) disagrees with the closed norm form at x = " +
                                    x.str());
    return det;
}

TitsElement embed_g(const CyclicElement& x, const TitsPtr& target) {
    const auto& D = *x.parent();
    if (target->coeff().get() != D.field_ext().get() || target->mu() != D.mu())
        throw SpecMismatch("target J(K, mu) does not match the cyclic algebra's K and mu");
    return target->element(x.coeff(0), sigma_apply(x.coeff(1)),
                           D.mu() * sigma_apply(x.coeff(2), 2));
}

VerificationReport isometry_scan(const CyclicPtr& D, const TitsPtr& J, std::int64_t samples,
                                 std::uint64_t seed) {
    const auto& K = D->field_ext();
    const bool classical = D->mu_in_base_field();

    IdentityResult norm_row;
    norm_row.id = classical ? "G.norm.verify" : "G.norm.tally";
    norm_row.anchor = "the norms of the two nonisomorphic algebras";
    IdentityResult mult_row;
    mult_row.id = classical ? "G.mult.verify" : "G.mult.falsify";
    mult_row.anchor = "G is not an algebra isomorphism";

    auto sample_cyclic = [&](std::uint64_t idx, const char* tag) {
        SampleRng rng(seed, tag, idx);
        return D->element(K->element(sample_coords(K->field(), K->dim(), rng)),
                          K->element(sample_coords(K->field(), K->dim(), rng)),
                          K->element(sample_coords(K->field(), K->dim(), rng)));
    };

    for (std::int64_t i = 0; i < samples; ++i) {
        const CyclicElement x = sample_cyclic(static_cast<std::uint64_t>(i), "isometry.x");
        const CyclicElement y = sample_cyclic(static_cast<std::uint64_t>(i), "isometry.y");

        ++norm_row.samples;
        if (tits_norm(embed_g(x, J)) == cyclic_norm(x)) {
            ++norm_row.passes;
        } else {
            ++norm_row.failures;
            if (norm_row.witness.is_null()) norm_row.witness = cyclic_element_to_json(x);
        }

        ++mult_row.samples;
        const bool mult_ok = embed_g(cyclic_jordan(x, y), J) == embed_g(x, J) * embed_g(y, J);
        if (classical) {
            mult_ok ? ++mult_row.passes : ++mult_row.failures;
            if (!mult_ok && mult_row.witness.is_null())
                mult_row.witness = Json::array({cyclic_element_to_json(x),
                                                cyclic_element_to_json(y)});
        } else {
            // counterexample search: a violation is the expected outcome
            mult_ok ? ++mult_row.failures : ++mult_row.passes;
            if (!mult_ok && mult_row.witness.is_null())
                mult_row.witness = Json::array({cyclic_element_to_json(x),
                                                cyclic_element_to_json(y)});
        }
    }

    VerificationReport rep;
    rep.algebra = D->str() + " vs " + J->str();
    rep.seed = seed;
    rep.results = {std::move(norm_row), std::move(mult_row)};
    return rep;
}

} // namespace titsforge
