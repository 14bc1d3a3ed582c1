#include "titsforge/algebra.hpp"

#include <algorithm>
#include <sstream>

#include "titsforge/detail/interpolate.hpp"

namespace titsforge {

std::string tag_name(AlgebraTag tag) {
    switch (tag) {
        case AlgebraTag::SplitEtale: return "split_etale";
        case AlgebraTag::CyclicCubicField: return "cubic_field";
        case AlgebraTag::Mat3: return "mat3";
        case AlgebraTag::CyclicAssoc: return "cyclic_assoc";
    }
    return "?";
}

// ---- AlgElement ------------------------------------------------------------

AlgElement::AlgElement(DescriptorPtr desc, std::vector<Scalar> coords)
    : desc_(std::move(desc)), coords_(std::move(coords)) {
    if (!desc_) throw Error("element without descriptor");
    if (static_cast<int>(coords_.size()) != desc_->dim())
        throw ValidationError("coordinate vector has length " + std::to_string(coords_.size()) +
                              ", descriptor dimension is " + std::to_string(desc_->dim()));
    for (const Scalar& s : coords_)
        if (s.spec() != desc_->field())
            throw SpecMismatch("coordinate in " + s.spec().name() + " for an algebra over " +
                               desc_->field().name());
}

bool AlgElement::is_zero() const {
    return std::all_of(coords_.begin(), coords_.end(), [](const Scalar& s) { return s.is_zero(); });
}

AlgElement AlgElement::operator-() const {
    std::vector<Scalar> out;
    out.reserve(coords_.size());
    for (const Scalar& s : coords_) out.push_back(-s);
    return AlgElement(desc_, std::move(out));
}

namespace {
void require_same_descriptor(const AlgElement& a, const AlgElement& b) {
    if (a.descriptor().get() != b.descriptor().get())
        throw SpecMismatch("elements of different algebras");
}
} // namespace

AlgElement operator+(const AlgElement& a, const AlgElement& b) {
    require_same_descriptor(a, b);
    std::vector<Scalar> out;
    out.reserve(a.coords_.size());
    for (std::size_t i = 0; i < a.coords_.size(); ++i) out.push_back(a.coords_[i] + b.coords_[i]);
    return AlgElement(a.desc_, std::move(out));
}

AlgElement operator-(const AlgElement& a, const AlgElement& b) {
    require_same_descriptor(a, b);
    std::vector<Scalar> out;
    out.reserve(a.coords_.size());
    for (std::size_t i = 0; i < a.coords_.size(); ++i) out.push_back(a.coords_[i] - b.coords_[i]);
    return AlgElement(a.desc_, std::move(out));
}

AlgElement operator*(const AlgElement& a, const AlgElement& b) {
    return a.descriptor()->multiply(a, b);
}

AlgElement operator*(const Scalar& c, const AlgElement& x) {
    std::vector<Scalar> out;
    out.reserve(x.coords_.size());
    for (const Scalar& s : x.coords_) out.push_back(c * s);
    return AlgElement(x.desc_, std::move(out));
}

bool operator==(const AlgElement& a, const AlgElement& b) {
    require_same_descriptor(a, b);
    return a.coords_ == b.coords_;
}

std::string AlgElement::str() const {
    std::ostringstream os;
    os << "[";
    for (std::size_t i = 0; i < coords_.size(); ++i) {
        if (i) os << ", ";
        os << coords_[i].str();
    }
    os << "]";
    return os.str();
}

// ---- descriptor construction ----------------------------------------------

AlgebraDescriptor::AlgebraDescriptor(FieldSpec field, int dim, AlgebraTag tag)
    : field_(field), dim_(dim), tag_(tag),
      terms_(static_cast<std::size_t>(dim) * dim),
      unit_(dim, Scalar::zero(field)),
      cyclic_c_(Scalar::zero(field)) {}

void AlgebraDescriptor::set_product(int i, int j, const std::vector<Scalar>& coords) {
    auto& slot = terms_[static_cast<std::size_t>(i) * dim_ + j];
    slot.clear();
    for (int k = 0; k < dim_; ++k)
        if (!coords[k].is_zero()) slot.push_back(Term{k, coords[k]});
}

std::span<const AlgebraDescriptor::Term> AlgebraDescriptor::product_terms(int i, int j) const {
    return terms_[static_cast<std::size_t>(i) * dim_ + j];
}

namespace {

std::vector<Scalar> mul_coords(const AlgebraDescriptor& d, const std::vector<Scalar>& x,
                               const std::vector<Scalar>& y) {
    const int n = d.dim();
    std::vector<Scalar> out(n, Scalar::zero(d.field()));
    for (int i = 0; i < n; ++i) {
        if (x[i].is_zero()) continue;
        for (int j = 0; j < n; ++j) {
            if (y[j].is_zero()) continue;
            const Scalar c = x[i] * y[j];
            for (const auto& t : d.product_terms(i, j)) out[t.k] += c * t.c;
        }
    }
    return out;
}

std::vector<Scalar> basis_coords(const FieldSpec& f, int dim, int k) {
    std::vector<Scalar> v(dim, Scalar::zero(f));
    v[k] = Scalar::one(f);
    return v;
}

std::vector<Scalar> pow_coords(const AlgebraDescriptor& d, std::vector<Scalar> base,
                               const std::vector<Scalar>& unit, std::int64_t e) {
    std::vector<Scalar> acc = unit;
    while (e > 0) {
        if (e & 1) acc = mul_coords(d, acc, base);
        base = mul_coords(d, base, base);
        e >>= 1;
    }
    return acc;
}

} // namespace

void AlgebraDescriptor::finalize(bool validate) {
    trace_vec_.assign(dim_, Scalar::zero(field_));
    const Scalar factor = Scalar::from_int(field_, 3) * Scalar::from_int(field_, dim_).inverse();
    for (int i = 0; i < dim_; ++i) {
        Scalar t = Scalar::zero(field_);
        for (int j = 0; j < dim_; ++j)
            for (const auto& term : product_terms(i, j))
                if (term.k == j) t += term.c;
        trace_vec_[static_cast<std::size_t>(i)] = factor * t;
    }
    if (validate) {
        validate_unit_and_associativity();
        if (sigma_) validate_sigma();
    }
}

void AlgebraDescriptor::validate_unit_and_associativity() const {
    for (int i = 0; i < dim_; ++i) {
        const auto e = basis_coords(field_, dim_, i);
        if (mul_coords(*this, unit_, e) != e || mul_coords(*this, e, unit_) != e)
            throw ValidationError("unit is not a two-sided identity at basis index " +
                                  std::to_string(i));
    }
    for (int i = 0; i < dim_; ++i) {
        const auto ei = basis_coords(field_, dim_, i);
        for (int j = 0; j < dim_; ++j) {
            const auto ej = basis_coords(field_, dim_, j);
            const auto eij = mul_coords(*this, ei, ej);
            for (int k = 0; k < dim_; ++k) {
                const auto ek = basis_coords(field_, dim_, k);
                if (mul_coords(*this, eij, ek) !=
                    mul_coords(*this, ei, mul_coords(*this, ej, ek)))
                    throw ValidationError("multiplication not associative at basis triple (" +
                                          std::to_string(i) + "," + std::to_string(j) + "," +
                                          std::to_string(k) + ")");
            }
        }
    }
}

void AlgebraDescriptor::validate_sigma() const {
    const ScalarMatrix& s = *sigma_;
    if (s.rows() != dim_ || s.cols() != dim_)
        throw BadGaloisAction("sigma matrix has wrong shape");
    if (s.apply_row(unit_) != unit_)
        throw BadGaloisAction("sigma does not fix the unit");
    if (s.is_identity())
        throw BadGaloisAction("sigma is the identity");
    const ScalarMatrix s3 = s.times(s).times(s);
    if (!s3.is_identity())
        throw BadGaloisAction("sigma does not have order 3");
    for (int i = 0; i < dim_; ++i)
        for (int j = 0; j < dim_; ++j) {
            const auto lhs = s.apply_row(mul_coords(*this, basis_coords(field_, dim_, i),
                                                    basis_coords(field_, dim_, j)));
            const auto rhs = mul_coords(*this, s.apply_row(basis_coords(field_, dim_, i)),
                                        s.apply_row(basis_coords(field_, dim_, j)));
            if (lhs != rhs)
                throw BadGaloisAction("sigma is not multiplicative on basis pair (" +
                                      std::to_string(i) + "," + std::to_string(j) + ")");
        }
}

AlgElement AlgebraDescriptor::element(std::vector<Scalar> coords) const {
    return AlgElement(shared_from_this(), std::move(coords));
}

AlgElement AlgebraDescriptor::zero() const {
    return element(std::vector<Scalar>(dim_, Scalar::zero(field_)));
}

AlgElement AlgebraDescriptor::unit() const { return element(unit_); }

AlgElement AlgebraDescriptor::basis_element(int k) const {
    return element(basis_coords(field_, dim_, k));
}

AlgElement AlgebraDescriptor::scalar_element(const Scalar& c) const {
    std::vector<Scalar> v(unit_);
    for (auto& s : v) s *= c;
    return element(std::move(v));
}

AlgElement AlgebraDescriptor::multiply(const AlgElement& x, const AlgElement& y) const {
    if (x.descriptor().get() != this || y.descriptor().get() != this)
        throw SpecMismatch("product of elements from different algebras");
    return AlgElement(shared_from_this(), mul_coords(*this, x.coords(), y.coords()));
}

const ScalarMatrix& AlgebraDescriptor::sigma() const {
    if (!sigma_) throw ValidationError("descriptor carries no Galois action");
    return *sigma_;
}

std::string AlgebraDescriptor::str() const {
    return tag_name(tag_) + "/" + field_.name();
}

// ---- builders --------------------------------------------------------------

DescriptorPtr AlgebraDescriptor::split_etale(const FieldSpec& field) {
    auto d = std::shared_ptr<AlgebraDescriptor>(
        new AlgebraDescriptor(field, 3, AlgebraTag::SplitEtale));
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) {
            std::vector<Scalar> prod(3, Scalar::zero(field));
            if (i == j) prod[i] = Scalar::one(field);
            d->set_product(i, j, prod);
        }
    d->unit_.assign(3, Scalar::one(field));
    d->finalize(true);
    return d;
}

namespace {

// Structure constants of F[t]/(f) on the power basis, f monic cubic given by
// (c0, c1, c2).
void fill_power_basis(AlgebraDescriptor& d, const FieldSpec& field, const Scalar& c0,
                      const Scalar& c1, const Scalar& c2,
                      void (AlgebraDescriptor::*set)(int, int, const std::vector<Scalar>&)) {
    // t^3 = -c2 t^2 - c1 t - c0; t^4 = t * t^3
    std::vector<Scalar> t3 = {-c0, -c1, -c2};
    std::vector<Scalar> t4 = {c0 * c2, c1 * c2 - c0, c2 * c2 - c1};
    auto power = [&](int e) -> std::vector<Scalar> {
        if (e <= 2) {
            std::vector<Scalar> v(3, Scalar::zero(field));
            v[e] = Scalar::one(field);
            return v;
        }
        return e == 3 ? t3 : t4;
    };
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) (d.*set)(i, j, power(i + j));
}

bool has_root_mod_p(std::int64_t c0, std::int64_t c1, std::int64_t c2, std::int64_t p) {
    for (std::int64_t x = 0; x < p; ++x) {
        std::int64_t v = (((x + c2) % p * x + c1) % p * x + c0) % p;
        if (v == 0) return true;
    }
    return false;
}

// A cubic is reducible over Q exactly when it has a rational root.
bool has_rational_root(const mpq_class& c0, const mpq_class& c1, const mpq_class& c2) {
    // clear denominators: a3 t^3 + a2 t^2 + a1 t + a0 with integer a_i, a3 > 0
    mpz_class lcm = 1;
    for (const mpq_class* c : {&c0, &c1, &c2})
        mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), c->get_den().get_mpz_t());
    mpz_class a3 = lcm;
    mpz_class a2 = mpq_class(c2 * lcm).get_num();
    mpz_class a1 = mpq_class(c1 * lcm).get_num();
    mpz_class a0 = mpq_class(c0 * lcm).get_num();
    if (a0 == 0) return true;
    auto divisors = [](mpz_class n) {
        n = abs(n);
        std::vector<mpz_class> out;
        for (mpz_class d = 1; d * d <= n; ++d)
            if (n % d == 0) {
                out.push_back(d);
                out.push_back(n / d);
            }
        return out;
    };
    for (const mpz_class& num : divisors(a0))
        for (const mpz_class& den : divisors(a3))
            for (int sign : {1, -1}) {
                mpq_class r(sign * num, den);
                r.canonicalize();
                mpq_class v = ((r + c2) * r + c1) * r + c0;
                if (v == 0) return true;
            }
    return false;
}

} // namespace

DescriptorPtr AlgebraDescriptor::cubic_field(const FieldSpec& field) {
    if (!field.is_prime())
        throw ValidationError("automatic cubic field construction needs a prime field; "
                              "over Q supply a minimal polynomial and sigma");
    const std::int64_t p = field.modulus();
    std::int64_t c0 = -1, c1 = -1, c2 = -1;
    bool found = false;
    for (std::int64_t a0 = 0; a0 < p && !found; ++a0)
        for (std::int64_t a1 = 0; a1 < p && !found; ++a1)
            for (std::int64_t a2 = 0; a2 < p && !found; ++a2)
                if (a0 != 0 && !has_root_mod_p(a0, a1, a2, p)) {
                    c0 = a0; c1 = a1; c2 = a2;
                    found = true;
                }
    if (!found) throw Error("no irreducible cubic found"); // cannot happen for prime p

    auto d = std::shared_ptr<AlgebraDescriptor>(
        new AlgebraDescriptor(field, 3, AlgebraTag::CyclicCubicField));
    fill_power_basis(*d, field, Scalar::residue(c0, p), Scalar::residue(c1, p),
                     Scalar::residue(c2, p), &AlgebraDescriptor::set_product);
    d->unit_ = basis_coords(field, 3, 0);
    d->minpoly_ = {Scalar::residue(c0, p), Scalar::residue(c1, p), Scalar::residue(c2, p)};

    // Frobenius rows: sigma(e_i) = e_i ^ p
    ScalarMatrix frob(3, 3, field);
    for (int i = 0; i < 3; ++i) {
        const auto img = pow_coords(*d, basis_coords(field, 3, i), basis_coords(field, 3, 0), p);
        for (int j = 0; j < 3; ++j) frob.at(i, j) = img[j];
    }
    d->sigma_ = std::move(frob);
    d->finalize(true);
    return d;
}

DescriptorPtr AlgebraDescriptor::cubic_field(const FieldSpec& field, std::vector<Scalar> minpoly,
                                             ScalarMatrix sigma) {
    if (minpoly.size() == 4) {
        if (!minpoly[3].is_one()) throw ValidationError("minimal polynomial must be monic");
        minpoly.pop_back();
    }
    if (minpoly.size() != 3)
        throw ValidationError("minimal polynomial needs 3 low-to-high coefficients");
    for (const Scalar& c : minpoly)
        if (c.spec() != field) throw SpecMismatch("minpoly coefficient field mismatch");

    if (field.is_prime()) {
        if (has_root_mod_p(minpoly[0].residue_value(), minpoly[1].residue_value(),
                           minpoly[2].residue_value(), field.modulus()))
            throw NotIrreducible("cubic has a root over " + field.name());
    } else {
        if (has_rational_root(minpoly[0].rational_value(), minpoly[1].rational_value(),
                              minpoly[2].rational_value()))
            throw NotIrreducible("cubic has a rational root");
    }

    auto d = std::shared_ptr<AlgebraDescriptor>(
        new AlgebraDescriptor(field, 3, AlgebraTag::CyclicCubicField));
    fill_power_basis(*d, field, minpoly[0], minpoly[1], minpoly[2],
                     &AlgebraDescriptor::set_product);
    d->unit_ = basis_coords(field, 3, 0);
    d->minpoly_ = std::move(minpoly);
    d->sigma_ = std::move(sigma);
    d->finalize(true);
    return d;
}

DescriptorPtr AlgebraDescriptor::mat3(const FieldSpec& field) {
    auto d = std::shared_ptr<AlgebraDescriptor>(
        new AlgebraDescriptor(field, 9, AlgebraTag::Mat3));
    // E_ij E_kl = [j == k] E_il, basis index 3i + j
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j)
            for (int k = 0; k < 3; ++k)
                for (int l = 0; l < 3; ++l) {
                    std::vector<Scalar> prod(9, Scalar::zero(field));
                    if (j == k) prod[3 * i + l] = Scalar::one(field);
                    d->set_product(3 * i + j, 3 * k + l, prod);
                }
    for (int i = 0; i < 3; ++i) d->unit_[3 * i + i] = Scalar::one(field);
    d->finalize(true);
    return d;
}

DescriptorPtr AlgebraDescriptor::assoc_cyclic(const DescriptorPtr& K, const Scalar& c) {
    if (!K || K->tag() != AlgebraTag::CyclicCubicField || !K->has_sigma())
        throw ValidationError("assoc_cyclic needs a cyclic cubic field with Galois action");
    if (c.spec() != K->field()) throw SpecMismatch("cyclic constant field mismatch");
    if (c.is_zero()) throw DivisionByZero("cyclic constant c must be nonzero");

    const FieldSpec& field = K->field();
    auto d = std::shared_ptr<AlgebraDescriptor>(
        new AlgebraDescriptor(field, 9, AlgebraTag::CyclicAssoc));
    // basis e_i z^a at index i + 3a; (e_i z^a)(e_j z^b) = e_i sigma^a(e_j) z^{a+b}, z^3 = c
    for (int a = 0; a < 3; ++a)
        for (int b = 0; b < 3; ++b)
            for (int i = 0; i < 3; ++i)
                for (int j = 0; j < 3; ++j) {
                    auto img = basis_coords(field, 3, j);
                    for (int s = 0; s < a; ++s) img = K->sigma().apply_row(img);
                    auto w = mul_coords(*K, basis_coords(field, 3, i), img);
                    std::vector<Scalar> prod(9, Scalar::zero(field));
                    const int zp = (a + b) % 3;
                    const bool wrap = a + b >= 3;
                    for (int k = 0; k < 3; ++k)
                        prod[k + 3 * zp] = wrap ? c * w[k] : w[k];
                    d->set_product(i + 3 * a, j + 3 * b, prod);
                }
    for (int k = 0; k < 3; ++k) d->unit_[k] = K->unit().coords()[k];
    d->underlying_ = K;
    d->cyclic_c_ = c;
    d->finalize(true);
    return d;
}

DescriptorPtr AlgebraDescriptor::with_modified_product(const DescriptorPtr& base, int i, int j,
                                                       std::vector<Scalar> product) {
    auto d = std::shared_ptr<AlgebraDescriptor>(
        new AlgebraDescriptor(base->field_, base->dim_, base->tag_));
    d->terms_ = base->terms_;
    d->unit_ = base->unit_;
    d->sigma_ = base->sigma_;
    d->minpoly_ = base->minpoly_;
    d->underlying_ = base->underlying_;
    d->cyclic_c_ = base->cyclic_c_;
    d->set_product(i, j, product);
    d->finalize(false);
    return d;
}

// ---- degree-3 maps ---------------------------------------------------------

Scalar reduced_trace(const AlgElement& x) {
    const auto& tv = x.descriptor()->trace_vector();
    Scalar t = Scalar::zero(x.descriptor()->field());
    for (int i = 0; i < x.dim(); ++i)
        if (!x[i].is_zero()) t += x[i] * tv[static_cast<std::size_t>(i)];
    return t;
}

Scalar s_quadratic(const AlgElement& x) {
    const Scalar t = reduced_trace(x);
    return small_inverse(2, x.descriptor()->field()) * (t * t - reduced_trace(x * x));
}

AlgElement adjoint(const AlgElement& x) {
    const auto& d = x.descriptor();
    return x * x - reduced_trace(x) * x + d->scalar_element(s_quadratic(x));
}

Scalar norm(const AlgElement& x) {
    const auto& d = x.descriptor();
    const AlgElement p = x * adjoint(x);
    const AlgElement unit = d->unit();
    int anchor = 0;
    while (unit[anchor].is_zero()) ++anchor;
    const Scalar lambda = p[anchor] / unit[anchor];
    if (p != d->scalar_element(lambda))
        throw DegreeThreeViolation("x * adjoint(x) is not scalar for x = " + x.str() + " in " +
                                   d->str());
    return lambda;
}

AlgElement bar(const AlgElement& x) {
    const auto& d = x.descriptor();
    return small_inverse(2, d->field()) * (d->scalar_element(reduced_trace(x)) - x);
}

AlgElement sharp(const AlgElement& x, const AlgElement& y) {
    return adjoint(x + y) - adjoint(x) - adjoint(y);
}

AlgElement cross(const AlgElement& x, const AlgElement& y) {
    return small_inverse(2, x.descriptor()->field()) * sharp(x, y);
}

Scalar trace_form(const AlgElement& x, const AlgElement& y) {
    return reduced_trace(x * y);
}

Scalar norm_linear(const AlgElement& x, const AlgElement& y) {
    const FieldSpec& f = x.descriptor()->field();
    return detail::cubic_linear_coefficient<Scalar>(
        f, [&](const Scalar& t) { return norm(x + t * y); }, norm(x));
}

Scalar norm_trilinear(const AlgElement& x, const AlgElement& y, const AlgElement& z) {
    const Scalar sixth = small_inverse(6, x.descriptor()->field());
    return sixth * (norm(x + y + z) - norm(x + y) - norm(x + z) - norm(y + z) + norm(x) +
                    norm(y) + norm(z));
}

AlgElement u_operator(const AlgElement& x, const AlgElement& y) {
    return trace_form(x, y) * x - sharp(adjoint(x), y);
}

AlgElement jordan(const AlgElement& x, const AlgElement& y) {
    return small_inverse(2, x.descriptor()->field()) * (x * y + y * x);
}

AlgElement inverse(const AlgElement& x) {
    const Scalar n = norm(x);
    if (n.is_zero()) throw NotInvertible("norm is zero for " + x.str());
    return n.inverse() * adjoint(x);
}

AlgElement sigma_apply(const AlgElement& x, int power) {
    const auto& d = x.descriptor();
    auto coords = x.coords();
    for (int i = 0; i < power % 3; ++i) coords = d->sigma().apply_row(coords);
    return d->element(std::move(coords));
}

std::optional<Scalar> as_scalar(const AlgElement& x) {
    const auto& d = x.descriptor();
    const AlgElement unit = d->unit();
    int anchor = 0;
    while (unit[anchor].is_zero()) ++anchor;
    const Scalar lambda = x[anchor] / unit[anchor];
    if (x != d->scalar_element(lambda)) return std::nullopt;
    return lambda;
}

} // namespace titsforge
