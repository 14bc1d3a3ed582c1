#ifndef TITSFORGE_LINALG_HPP
#define TITSFORGE_LINALG_HPP

#include <vector>

#include "titsforge/field.hpp"

namespace titsforge {

/// Dense matrix over an exact field. Only what the algebra layer needs:
/// products, rank, kernels, identity tests. Dimensions here never exceed 27.
class ScalarMatrix {
public:
    ScalarMatrix(int rows, int cols, const FieldSpec& spec);
    static ScalarMatrix identity(int n, const FieldSpec& spec);
    static ScalarMatrix from_rows(std::vector<std::vector<Scalar>> rows, const FieldSpec& spec);

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    const FieldSpec& spec() const { return spec_; }

    Scalar& at(int i, int j) { return data_[static_cast<std::size_t>(i) * cols_ + j]; }
    const Scalar& at(int i, int j) const { return data_[static_cast<std::size_t>(i) * cols_ + j]; }

    ScalarMatrix times(const ScalarMatrix& o) const;
    /// Row vector * matrix (the convention used for basis-image matrices,
    /// where row i holds the image of basis vector i).
    std::vector<Scalar> apply_row(const std::vector<Scalar>& x) const;

    bool is_identity() const;
    friend bool operator==(const ScalarMatrix& a, const ScalarMatrix& b);

private:
    int rows_, cols_;
    FieldSpec spec_;
    std::vector<Scalar> data_;
};

/// Incremental reduced-echelon accumulator for the row space of a constraint
/// matrix. Rows are ingested one at a time (nucleus computations stream dim^2
/// constraint blocks through it). Over Q each stored row is kept as a
/// primitive integer vector and elimination uses cross-multiplication, so no
/// intermediate fractions appear; pivots are normalized to 1 only on output.
class EchelonAccumulator {
public:
    EchelonAccumulator(int cols, const FieldSpec& spec);

    void add_row(std::vector<Scalar> row);
    int rank() const { return static_cast<int>(rows_.size()); }

    /// Canonical RREF basis of the row space.
    std::vector<std::vector<Scalar>> row_basis() const;
    /// Canonical RREF basis of { x : M x = 0 } where M has the ingested rows.
    std::vector<std::vector<Scalar>> kernel_basis() const;

private:
    int cols_;
    FieldSpec spec_;
    std::vector<std::vector<Scalar>> rows_; // echelon rows, pivot columns increasing
    std::vector<int> pivots_;
};

/// Reduce a set of vectors to the canonical RREF basis of their span.
std::vector<std::vector<Scalar>> rref_rows(std::vector<std::vector<Scalar>> rows,
                                           const FieldSpec& spec);

int rank_of(const std::vector<std::vector<Scalar>>& rows, int cols, const FieldSpec& spec);

} // namespace titsforge

#endif
