#ifndef TITSFORGE_ALGEBRA_HPP
#define TITSFORGE_ALGEBRA_HPP

#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "titsforge/field.hpp"
#include "titsforge/linalg.hpp"

namespace titsforge {

class AlgebraDescriptor;
using DescriptorPtr = std::shared_ptr<const AlgebraDescriptor>;

enum class AlgebraTag { SplitEtale, CyclicCubicField, Mat3, CyclicAssoc };

std::string tag_name(AlgebraTag tag);

/// Element of a coefficient algebra: a coordinate vector tied to its
/// descriptor. Immutable value; all arithmetic returns fresh elements.
class AlgElement {
public:
    AlgElement(DescriptorPtr desc, std::vector<Scalar> coords);

    const DescriptorPtr& descriptor() const { return desc_; }
    const std::vector<Scalar>& coords() const { return coords_; }
    const Scalar& operator[](int i) const { return coords_[static_cast<std::size_t>(i)]; }
    int dim() const { return static_cast<int>(coords_.size()); }
    bool is_zero() const;

    AlgElement operator-() const;
    friend AlgElement operator+(const AlgElement& a, const AlgElement& b);
    friend AlgElement operator-(const AlgElement& a, const AlgElement& b);
    friend AlgElement operator*(const AlgElement& a, const AlgElement& b); // algebra product
    friend AlgElement operator*(const Scalar& c, const AlgElement& x);
    friend bool operator==(const AlgElement& a, const AlgElement& b);
    friend bool operator!=(const AlgElement& a, const AlgElement& b) { return !(a == b); }

    std::string str() const;

private:
    DescriptorPtr desc_;
    std::vector<Scalar> coords_;
};

/// A unital separable associative coefficient algebra of dimension 3 or 9,
/// given by structure constants over the base field. Descriptors are
/// validated eagerly at build time (unit, associativity on every basis
/// triple, Galois action when present) and are immutable afterwards, so all
/// downstream code may assume an associative unital algebra.
class AlgebraDescriptor : public std::enable_shared_from_this<AlgebraDescriptor> {
public:
    struct Term {
        int k;
        Scalar c;
    };

    /// F x F x F with componentwise product on the idempotent basis.
    static DescriptorPtr split_etale(const FieldSpec& field);
    /// F_{p^3} on the power basis of the lexicographically smallest monic
    /// irreducible cubic (coefficients compared low-degree-first), with the
    /// Frobenius x -> x^p as Galois action.
    static DescriptorPtr cubic_field(const FieldSpec& field);
    /// Cubic field from an explicit monic minimal polynomial (coefficients
    /// low-to-high, constant first) and the matrix of sigma in the power
    /// basis, rows holding basis images.
    static DescriptorPtr cubic_field(const FieldSpec& field, std::vector<Scalar> minpoly,
                                     ScalarMatrix sigma);
    /// 3x3 matrices on the basis E_ij in row-major order.
    static DescriptorPtr mat3(const FieldSpec& field);
    /// Associative cyclic algebra on {e_i z^j} with z^3 = c in F* and
    /// z l = sigma(l) z for l in K.
    static DescriptorPtr assoc_cyclic(const DescriptorPtr& K, const Scalar& c);

    /// Fault-injection hook: clone with e_i e_j replaced, skipping build-time
    /// validation. Exists so tests can show the degree-3 validator catching a
    /// corrupted table.
    static DescriptorPtr with_modified_product(const DescriptorPtr& base, int i, int j,
                                               std::vector<Scalar> product);

    const FieldSpec& field() const { return field_; }
    int dim() const { return dim_; }
    AlgebraTag tag() const { return tag_; }

    AlgElement element(std::vector<Scalar> coords) const;
    AlgElement zero() const;
    AlgElement unit() const;
    AlgElement basis_element(int k) const;
    AlgElement scalar_element(const Scalar& c) const; // c * unit

    std::span<const Term> product_terms(int i, int j) const;
    AlgElement multiply(const AlgElement& x, const AlgElement& y) const;

    bool has_sigma() const { return sigma_.has_value(); }
    const ScalarMatrix& sigma() const;
    const std::vector<Scalar>& minpoly() const { return minpoly_; }

    /// For CyclicAssoc: the underlying cubic field K and the constant c.
    const DescriptorPtr& underlying_field() const { return underlying_; }
    const Scalar& cyclic_constant() const { return cyclic_c_; }

    const std::vector<Scalar>& trace_vector() const { return trace_vec_; }

    std::string str() const;

private:
    friend class AlgElementAccess;
    AlgebraDescriptor(FieldSpec field, int dim, AlgebraTag tag);
    void set_product(int i, int j, const std::vector<Scalar>& coords);
    void finalize(bool validate);
    void validate_unit_and_associativity() const;
    void validate_sigma() const;

    FieldSpec field_;
    int dim_;
    AlgebraTag tag_;
    std::vector<std::vector<Term>> terms_; // (i * dim + j) -> sparse product
    std::vector<Scalar> unit_;
    std::vector<Scalar> trace_vec_;
    std::optional<ScalarMatrix> sigma_;
    std::vector<Scalar> minpoly_;
    DescriptorPtr underlying_;
    Scalar cyclic_c_;
};

// ---- degree-3 maps -------------------------------------------------------

/// T_A, computed as (3/dim) * trace of the left regular representation.
Scalar reduced_trace(const AlgElement& x);
/// S_A(x) = (T_A(x)^2 - T_A(x^2)) / 2.
Scalar s_quadratic(const AlgElement& x);
/// x^# = x^2 - T_A(x) x + S_A(x) 1.
AlgElement adjoint(const AlgElement& x);
/// Scalar lambda with x x^# = lambda 1; DegreeThreeViolation if x x^# is not
/// a multiple of the unit.
Scalar norm(const AlgElement& x);
/// (T_A(x) 1 - x) / 2.
AlgElement bar(const AlgElement& x);
/// Linearized adjoint (x+y)^# - x^# - y^#.
AlgElement sharp(const AlgElement& x, const AlgElement& y);
/// x across y = (x # y) / 2.
AlgElement cross(const AlgElement& x, const AlgElement& y);
/// Bilinear trace form T_A(x, y) = T_A(x y).
Scalar trace_form(const AlgElement& x, const AlgElement& y);
/// N_A(x; y): coefficient of t in N_A(x + t y), by exact interpolation at
/// t in {-1, 1, 2}.
Scalar norm_linear(const AlgElement& x, const AlgElement& y);
/// Full trilinearization with the 1/6 inclusion-exclusion formula.
Scalar norm_trilinear(const AlgElement& x, const AlgElement& y, const AlgElement& z);
/// U_x(y) = T_A(x, y) x - x^# # y (equals x y x).
AlgElement u_operator(const AlgElement& x, const AlgElement& y);
/// Jordan product (x y + y x) / 2.
AlgElement jordan(const AlgElement& x, const AlgElement& y);
/// N_A(x)^{-1} x^#; NotInvertible when N_A(x) = 0.
AlgElement inverse(const AlgElement& x);
/// Apply the Galois action (power times, default once).
AlgElement sigma_apply(const AlgElement& x, int power = 1);

/// lambda when x = lambda 1, otherwise nullopt.
std::optional<Scalar> as_scalar(const AlgElement& x);

struct VerificationReport; // defined in report.hpp

/// Runs the degree-3 identity registry entries D1..D13 on seeded random
/// samples; failures are report content, never exceptions.
VerificationReport validate_degree3(const DescriptorPtr& desc, std::int64_t samples,
                                    std::uint64_t seed, int workers = 0);

} // namespace titsforge

#endif
