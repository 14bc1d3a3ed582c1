#include "titsforge/generic.hpp"

#include "titsforge/linalg.hpp"

namespace titsforge {

GenericAlgebra::GenericAlgebra(int dim, FieldSpec field, std::string label)
    : dim_(dim), field_(field), label_(std::move(label)),
      terms_(static_cast<std::size_t>(dim) * dim) {}

namespace {

template <class MulFn>
void fill_terms(std::vector<std::vector<GenericAlgebra::Term>>& terms, int dim, MulFn&& mul) {
    for (int i = 0; i < dim; ++i)
        for (int j = 0; j < dim; ++j) {
            const auto prod = mul(i, j);
            auto& slot = terms[static_cast<std::size_t>(i) * dim + j];
            for (int k = 0; k < dim; ++k)
                if (!prod[static_cast<std::size_t>(k)].is_zero())
                    slot.push_back({k, prod[static_cast<std::size_t>(k)]});
        }
}

std::vector<Scalar> concat3(const AlgElement& a, const AlgElement& b, const AlgElement& c) {
    std::vector<Scalar> out;
    out.reserve(static_cast<std::size_t>(3) * a.dim());
    for (const auto* e : {&a, &b, &c})
        out.insert(out.end(), e->coords().begin(), e->coords().end());
    return out;
}

} // namespace

GenericAlgebra GenericAlgebra::wrap(const DescriptorPtr& desc) {
    GenericAlgebra g(desc->dim(), desc->field(), desc->str());
    g.unit_ = desc->unit().coords();
    fill_terms(g.terms_, g.dim_, [&](int i, int j) {
        return (desc->basis_element(i) * desc->basis_element(j)).coords();
    });
    return g;
}

GenericAlgebra GenericAlgebra::wrap(const TitsPtr& J) {
    const auto& A = J->coeff();
    const int d = A->dim();
    GenericAlgebra g(3 * d, A->field(), J->str());
    auto flat_basis = [&](int k) {
        auto a = A->zero().coords();
        a[static_cast<std::size_t>(k % d)] = Scalar::one(A->field());
        auto e = A->element(std::move(a));
        return J->embed(k / d, e);
    };
    g.unit_ = concat3(J->unit().slot(0), J->unit().slot(1), J->unit().slot(2));
    fill_terms(g.terms_, g.dim_, [&](int i, int j) {
        const TitsElement p = flat_basis(i) * flat_basis(j);
        return concat3(p.slot(0), p.slot(1), p.slot(2));
    });
    return g;
}

GenericAlgebra GenericAlgebra::wrap(const CyclicPtr& D) {
    const auto& K = D->field_ext();
    const int d = K->dim();
    GenericAlgebra g(3 * d, K->field(), D->str());
    auto flat_basis = [&](int k) { return D->embed(k / d, K->basis_element(k % d)); };
    g.unit_ = concat3(D->unit().coeff(0), D->unit().coeff(1), D->unit().coeff(2));
    fill_terms(g.terms_, g.dim_, [&](int i, int j) {
        const CyclicElement p = flat_basis(i) * flat_basis(j);
        return concat3(p.coeff(0), p.coeff(1), p.coeff(2));
    });
    return g;
}

std::vector<Scalar> GenericAlgebra::basis(int k) const {
    std::vector<Scalar> v(dim_, Scalar::zero(field_));
    v[static_cast<std::size_t>(k)] = Scalar::one(field_);
    return v;
}

std::vector<Scalar> GenericAlgebra::multiply(const std::vector<Scalar>& x,
                                             const std::vector<Scalar>& y) const {
    std::vector<Scalar> out(dim_, Scalar::zero(field_));
    for (int i = 0; i < dim_; ++i) {
        if (x[static_cast<std::size_t>(i)].is_zero()) continue;
        for (int j = 0; j < dim_; ++j) {
            if (y[static_cast<std::size_t>(j)].is_zero()) continue;
            const Scalar c = x[static_cast<std::size_t>(i)] * y[static_cast<std::size_t>(j)];
            for (const auto& t : product_terms(i, j))
                out[static_cast<std::size_t>(t.k)] += c * t.c;
        }
    }
    return out;
}

std::vector<Scalar> GenericAlgebra::associator(const std::vector<Scalar>& x,
                                               const std::vector<Scalar>& y,
                                               const std::vector<Scalar>& z) const {
    const auto lhs = multiply(multiply(x, y), z);
    const auto rhs = multiply(x, multiply(y, z));
    std::vector<Scalar> out;
    out.reserve(lhs.size());
    for (std::size_t i = 0; i < lhs.size(); ++i) out.push_back(lhs[i] - rhs[i]);
    return out;
}

bool SubspaceBasis::contains_unit_only(const std::vector<Scalar>& unit) const {
    if (vectors.size() != 1) return false;
    const auto& v = vectors[0];
    // equal up to scaling: unit is nonzero, compare after normalizing both
    int anchor = -1;
    for (std::size_t i = 0; i < unit.size(); ++i)
        if (!unit[i].is_zero()) { anchor = static_cast<int>(i); break; }
    if (anchor < 0 || v[static_cast<std::size_t>(anchor)].is_zero()) return false;
    const Scalar f = unit[static_cast<std::size_t>(anchor)] / v[static_cast<std::size_t>(anchor)];
    for (std::size_t i = 0; i < unit.size(); ++i)
        if (f * v[i] != unit[i]) return false;
    return true;
}

bool SubspaceBasis::supported_on(int lo, int hi) const {
    for (const auto& v : vectors)
        for (int i = 0; i < ambient_dim; ++i)
            if ((i < lo || i >= hi) && !v[static_cast<std::size_t>(i)].is_zero()) return false;
    return true;
}

NucleusSide nucleus_side_from_name(const std::string& name) {
    if (name == "left") return NucleusSide::Left;
    if (name == "middle") return NucleusSide::Middle;
    if (name == "right") return NucleusSide::Right;
    if (name == "full") return NucleusSide::Full;
    throw ParseError("unknown nucleus side '" + name + "'");
}

std::string nucleus_side_name(NucleusSide side) {
    switch (side) {
        case NucleusSide::Left: return "left";
        case NucleusSide::Middle: return "middle";
        case NucleusSide::Right: return "right";
        case NucleusSide::Full: return "full";
    }
    return "?";
}

namespace {

// Adds, for every basis pair (i, j), the dim linear constraints saying the
// associator with the probe x in the given slot vanishes. Linearity in x
// turns each (i, j, component) into one row over x-coordinates.
void add_associator_constraints(EchelonAccumulator& acc, const GenericAlgebra& alg, int slot) {
    const int n = alg.dim();
    for (int i = 0; i < n; ++i) {
        const auto ei = alg.basis(i);
        for (int j = 0; j < n; ++j) {
            const auto ej = alg.basis(j);
            std::vector<std::vector<Scalar>> cols;
            cols.reserve(static_cast<std::size_t>(n));
            for (int k = 0; k < n; ++k) {
                const auto ek = alg.basis(k);
                if (slot == 0)
                    cols.push_back(alg.associator(ek, ei, ej));
                else if (slot == 1)
                    cols.push_back(alg.associator(ei, ek, ej));
                else
                    cols.push_back(alg.associator(ei, ej, ek));
            }
            for (int comp = 0; comp < n; ++comp) {
                std::vector<Scalar> row;
                row.reserve(static_cast<std::size_t>(n));
                for (int k = 0; k < n; ++k) row.push_back(cols[static_cast<std::size_t>(k)][static_cast<std::size_t>(comp)]);
                acc.add_row(std::move(row));
            }
        }
    }
}

void add_commutation_constraints(EchelonAccumulator& acc, const GenericAlgebra& alg) {
    const int n = alg.dim();
    for (int i = 0; i < n; ++i) {
        const auto ei = alg.basis(i);
        std::vector<std::vector<Scalar>> cols;
        cols.reserve(static_cast<std::size_t>(n));
        for (int k = 0; k < n; ++k) {
            const auto ek = alg.basis(k);
            const auto a = alg.multiply(ek, ei);
            const auto b = alg.multiply(ei, ek);
            std::vector<Scalar> diff;
            diff.reserve(a.size());
            for (std::size_t t = 0; t < a.size(); ++t) diff.push_back(a[t] - b[t]);
            cols.push_back(std::move(diff));
        }
        for (int comp = 0; comp < n; ++comp) {
            std::vector<Scalar> row;
            row.reserve(static_cast<std::size_t>(n));
            for (int k = 0; k < n; ++k) row.push_back(cols[static_cast<std::size_t>(k)][static_cast<std::size_t>(comp)]);
            acc.add_row(std::move(row));
        }
    }
}

} // namespace

SubspaceBasis compute_nucleus(const GenericAlgebra& alg, NucleusSide side) {
    EchelonAccumulator acc(alg.dim(), alg.field());
    if (side == NucleusSide::Full) {
        for (int s = 0; s < 3; ++s) add_associator_constraints(acc, alg, s);
    } else {
        const int slot = side == NucleusSide::Left ? 0 : side == NucleusSide::Middle ? 1 : 2;
        add_associator_constraints(acc, alg, slot);
    }
    return SubspaceBasis{alg.dim(), acc.kernel_basis()};
}

SubspaceBasis compute_center(const GenericAlgebra& alg) {
    EchelonAccumulator acc(alg.dim(), alg.field());
    add_commutation_constraints(acc, alg);
    for (int s = 0; s < 3; ++s) add_associator_constraints(acc, alg, s);
    return SubspaceBasis{alg.dim(), acc.kernel_basis()};
}

} // namespace titsforge
