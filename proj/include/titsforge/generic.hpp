#ifndef TITSFORGE_GENERIC_HPP
#define TITSFORGE_GENERIC_HPP

#include <vector>

#include "titsforge/cyclic.hpp"
#include "titsforge/tits.hpp"

namespace titsforge {

/// Uniform flat view of any algebra the library builds: coefficient
/// algebras, Tits triples (coordinates concatenated slot by slot), and
/// cyclic algebras (K-coordinates of 1, z, z^2 concatenated). Structure
/// constants are materialized once from the wrapped product on basis pairs;
/// dimensions stay at most 27.
class GenericAlgebra {
public:
    static GenericAlgebra wrap(const DescriptorPtr& desc);
    static GenericAlgebra wrap(const TitsPtr& J);
    static GenericAlgebra wrap(const CyclicPtr& D);

    int dim() const { return dim_; }
    const FieldSpec& field() const { return field_; }
    const std::vector<Scalar>& unit() const { return unit_; }
    std::vector<Scalar> basis(int k) const;

    std::vector<Scalar> multiply(const std::vector<Scalar>& x,
                                 const std::vector<Scalar>& y) const;
    /// (x y) z - x (y z).
    std::vector<Scalar> associator(const std::vector<Scalar>& x, const std::vector<Scalar>& y,
                                   const std::vector<Scalar>& z) const;

    struct Term {
        int k;
        Scalar c;
    };
    const std::vector<Term>& product_terms(int i, int j) const {
        return terms_[static_cast<std::size_t>(i) * dim_ + j];
    }

    std::string str() const { return label_; }

private:
    GenericAlgebra(int dim, FieldSpec field, std::string label);
    int dim_;
    FieldSpec field_;
    std::string label_;
    std::vector<std::vector<Term>> terms_;
    std::vector<Scalar> unit_;
};

/// Linearly independent coordinate vectors in reduced echelon form; the
/// canonical representation of a subspace of the flat coordinate space.
struct SubspaceBasis {
    int ambient_dim = 0;
    std::vector<std::vector<Scalar>> vectors;

    int dimension() const { return static_cast<int>(vectors.size()); }
    bool contains_unit_only(const std::vector<Scalar>& unit) const;
    /// Every basis vector vanishes outside coordinate range [lo, hi).
    bool supported_on(int lo, int hi) const;
};

enum class NucleusSide { Left, Middle, Right, Full };

NucleusSide nucleus_side_from_name(const std::string& name);
std::string nucleus_side_name(NucleusSide side);

/// Kernel of the stacked associator constraints with the probe in the given
/// slot (Full intersects all three). Exact linear algebra over F.
SubspaceBasis compute_nucleus(const GenericAlgebra& alg, NucleusSide side);
/// Commutation kernel intersected with the full nucleus.
SubspaceBasis compute_center(const GenericAlgebra& alg);

} // namespace titsforge

#endif
