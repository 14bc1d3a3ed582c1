#ifndef TITSFORGE_CYCLIC_HPP
#define TITSFORGE_CYCLIC_HPP

#include <memory>
#include <vector>

#include "titsforge/report.hpp"
#include "titsforge/tits.hpp"

namespace titsforge {

class CyclicAlgebra;
class CyclicElement;
using CyclicPtr = std::shared_ptr<const CyclicAlgebra>;

/// Degree-3 cyclic algebra K + Kz + Kz^2 with z^3 = mu and z l = sigma(l) z,
/// mu any nonzero element of K. Associative exactly when mu lies in the base
/// field; for mu outside it this is a nonassociative division algebra
/// candidate that the scans probe empirically.
class CyclicAlgebra : public std::enable_shared_from_this<CyclicAlgebra> {
public:
    static CyclicPtr make(DescriptorPtr K, AlgElement mu);

    const DescriptorPtr& field_ext() const { return K_; }
    const AlgElement& mu() const { return mu_; }
    bool mu_in_base_field() const { return mu_scalar_; }

    CyclicElement element(AlgElement x0, AlgElement x1, AlgElement x2) const;
    CyclicElement zero() const;
    CyclicElement unit() const;
    /// l z^power for l in K.
    CyclicElement embed(int power, const AlgElement& l) const;

    std::string str() const;

private:
    CyclicAlgebra(DescriptorPtr K, AlgElement mu);
    DescriptorPtr K_;
    AlgElement mu_;
    bool mu_scalar_;
};

/// x0 + x1 z + x2 z^2 as a left-K coordinate triple.
class CyclicElement {
public:
    CyclicElement(CyclicPtr parent, AlgElement x0, AlgElement x1, AlgElement x2);

    const CyclicPtr& parent() const { return parent_; }
    const AlgElement& coeff(int i) const { return c_[static_cast<std::size_t>(i)]; }
    bool is_zero() const;

    friend CyclicElement operator+(const CyclicElement& a, const CyclicElement& b);
    friend CyclicElement operator-(const CyclicElement& a, const CyclicElement& b);
    friend CyclicElement operator*(const CyclicElement& a, const CyclicElement& b);
    friend bool operator==(const CyclicElement& a, const CyclicElement& b);
    friend bool operator!=(const CyclicElement& a, const CyclicElement& b) { return !(a == b); }

    std::string str() const;

private:
    CyclicPtr parent_;
    std::array<AlgElement, 3> c_;
};

/// Left K-multiplication l * x.
CyclicElement scale_left(const AlgElement& l, const CyclicElement& x);
/// Jordan product (x y + y x) / 2; the product the comparison map respects
/// in the associative regime.
CyclicElement cyclic_jordan(const CyclicElement& x, const CyclicElement& y);

/// Matrix of right multiplication by x: row i holds the K-coordinates of
/// z^i * x in the basis {1, z, z^2}.
std::vector<std::vector<AlgElement>> right_mult_matrix(const CyclicElement& x);

/// det(R_x) over K, cross-checked exactly against the closed form
/// N_K(x0) + mu N_K(x1) + mu^2 N_K(x2) - mu T_K(x0 sigma(x1) sigma^2(x2));
/// disagreement is an InternalInconsistency, never report content.
AlgElement cyclic_norm(const CyclicElement& x);

/// The coordinate map x0 + x1 z + x2 z^2 -> (x0, sigma(x1), mu sigma^2(x2))
/// into J(K, mu) with the same K and mu.
TitsElement embed_g(const CyclicElement& x, const TitsPtr& target);

/// Samples x (and pairs) and tallies, per sample, whether N(G(x)) equals
/// N_D(x) and whether G(x o y) = G(x) G(y) for the Jordan product o. In the
/// scalar-mu regime both rows are verification arms; otherwise
/// multiplicativity is a counterexample search and the norm row is a pure
/// tally with the first mismatch recorded.
VerificationReport isometry_scan(const CyclicPtr& D, const TitsPtr& J, std::int64_t samples,
                                 std::uint64_t seed);

} // namespace titsforge

#endif
