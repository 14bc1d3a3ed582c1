#include "titsforge/linalg.hpp"

#include <algorithm>

namespace titsforge {

ScalarMatrix::ScalarMatrix(int rows, int cols, const FieldSpec& spec)
    : rows_(rows), cols_(cols), spec_(spec),
      data_(static_cast<std::size_t>(rows) * cols, Scalar::zero(spec)) {}

ScalarMatrix ScalarMatrix::identity(int n, const FieldSpec& spec) {
    ScalarMatrix m(n, n, spec);
    for (int i = 0; i < n; ++i) m.at(i, i) = Scalar::one(spec);
    return m;
}

ScalarMatrix ScalarMatrix::from_rows(std::vector<std::vector<Scalar>> rows, const FieldSpec& spec) {
    int r = static_cast<int>(rows.size());
    int c = r == 0 ? 0 : static_cast<int>(rows[0].size());
    ScalarMatrix m(r, c, spec);
    for (int i = 0; i < r; ++i) {
        if (static_cast<int>(rows[i].size()) != c)
            throw Error("ragged rows in from_rows");
        for (int j = 0; j < c; ++j) m.at(i, j) = std::move(rows[i][j]);
    }
    return m;
}

ScalarMatrix ScalarMatrix::times(const ScalarMatrix& o) const {
    if (cols_ != o.rows_) throw Error("matrix shape mismatch in times()");
    ScalarMatrix out(rows_, o.cols_, spec_);
    for (int i = 0; i < rows_; ++i)
        for (int k = 0; k < cols_; ++k) {
            const Scalar& a = at(i, k);
            if (a.is_zero()) continue;
            for (int j = 0; j < o.cols_; ++j) {
                const Scalar& b = o.at(k, j);
                if (!b.is_zero()) out.at(i, j) += a * b;
            }
        }
    return out;
}

std::vector<Scalar> ScalarMatrix::apply_row(const std::vector<Scalar>& x) const {
    if (static_cast<int>(x.size()) != rows_) throw Error("vector length mismatch in apply_row");
    std::vector<Scalar> out(cols_, Scalar::zero(spec_));
    for (int i = 0; i < rows_; ++i) {
        if (x[i].is_zero()) continue;
        for (int j = 0; j < cols_; ++j) {
            const Scalar& m = at(i, j);
            if (!m.is_zero()) out[j] += x[i] * m;
        }
    }
    return out;
}

bool ScalarMatrix::is_identity() const {
    if (rows_ != cols_) return false;
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j) {
            if (i == j ? !at(i, j).is_one() : !at(i, j).is_zero()) return false;
        }
    return true;
}

bool operator==(const ScalarMatrix& a, const ScalarMatrix& b) {
    if (a.rows_ != b.rows_ || a.cols_ != b.cols_) return false;
    for (std::size_t i = 0; i < a.data_.size(); ++i)
        if (a.data_[i] != b.data_[i]) return false;
    return true;
}

namespace {

// Scale a rational row to a primitive integer vector with positive leading
// entry. Zero rows pass through untouched.
void primitivize(std::vector<Scalar>& row) {
    mpz_class den_lcm = 1;
    for (const Scalar& s : row)
        mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(),
                s.rational_value().get_den().get_mpz_t());
    mpz_class num_gcd = 0;
    std::vector<mpz_class> ints;
    ints.reserve(row.size());
    for (const Scalar& s : row) {
        mpq_class scaled = s.rational_value() * mpq_class(den_lcm);
        ints.push_back(scaled.get_num());
        mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), ints.back().get_mpz_t());
    }
    if (num_gcd == 0) return;
    int lead_sign = 0;
    for (const auto& v : ints)
        if (v != 0) { lead_sign = sgn(v); break; }
    if (lead_sign < 0) num_gcd = -num_gcd;
    for (std::size_t j = 0; j < row.size(); ++j)
        row[j] = Scalar::rational(mpq_class(ints[j] / num_gcd));
}

} // namespace

EchelonAccumulator::EchelonAccumulator(int cols, const FieldSpec& spec)
    : cols_(cols), spec_(spec) {}

void EchelonAccumulator::add_row(std::vector<Scalar> row) {
    if (static_cast<int>(row.size()) != cols_) throw Error("row length mismatch");
    if (rank() == cols_) return; // row space already full
    const bool rational = spec_.is_rational();
    if (rational) primitivize(row);

    for (std::size_t r = 0; r < rows_.size(); ++r) {
        const int pc = pivots_[r];
        if (row[pc].is_zero()) continue;
        if (rational) {
            // integer cross-multiplication keeps everything fraction-free
            const Scalar a = rows_[r][pc];
            const Scalar b = row[pc];
            for (int j = 0; j < cols_; ++j)
                row[j] = a * row[j] - b * rows_[r][j];
            primitivize(row);
        } else {
            const Scalar f = row[pc]; // stored rows have pivot 1
            for (int j = 0; j < cols_; ++j)
                row[j] -= f * rows_[r][j];
        }
    }

    int pivot = -1;
    for (int j = 0; j < cols_; ++j)
        if (!row[j].is_zero()) { pivot = j; break; }
    if (pivot < 0) return;

    if (!rational) {
        const Scalar inv = row[pivot].inverse();
        for (int j = pivot; j < cols_; ++j) row[j] *= inv;
    }

    // back-eliminate the new pivot column from the existing rows
    for (std::size_t r = 0; r < rows_.size(); ++r) {
        if (rows_[r][pivot].is_zero()) continue;
        if (rational) {
            const Scalar a = row[pivot];
            const Scalar b = rows_[r][pivot];
            for (int j = 0; j < cols_; ++j)
                rows_[r][j] = a * rows_[r][j] - b * row[j];
            primitivize(rows_[r]);
        } else {
            const Scalar f = rows_[r][pivot];
            for (int j = 0; j < cols_; ++j)
                rows_[r][j] -= f * row[j];
        }
    }

    auto pos = std::upper_bound(pivots_.begin(), pivots_.end(), pivot);
    auto idx = static_cast<std::size_t>(pos - pivots_.begin());
    pivots_.insert(pos, pivot);
    rows_.insert(rows_.begin() + idx, std::move(row));
}

std::vector<std::vector<Scalar>> EchelonAccumulator::row_basis() const {
    std::vector<std::vector<Scalar>> out = rows_;
    if (spec_.is_rational()) {
        for (std::size_t r = 0; r < out.size(); ++r) {
            const Scalar inv = out[r][pivots_[r]].inverse();
            for (auto& s : out[r]) s *= inv;
        }
    }
    return out;
}

std::vector<std::vector<Scalar>> EchelonAccumulator::kernel_basis() const {
    const auto rref = row_basis();
    std::vector<bool> is_pivot(cols_, false);
    for (int p : pivots_) is_pivot[p] = true;
    std::vector<std::vector<Scalar>> out;
    for (int f = 0; f < cols_; ++f) {
        if (is_pivot[f]) continue;
        std::vector<Scalar> v(cols_, Scalar::zero(spec_));
        v[f] = Scalar::one(spec_);
        for (std::size_t r = 0; r < rref.size(); ++r)
            v[pivots_[r]] = -rref[r][f];
        out.push_back(std::move(v));
    }
    return rref_rows(std::move(out), spec_);
}

std::vector<std::vector<Scalar>> rref_rows(std::vector<std::vector<Scalar>> rows,
                                           const FieldSpec& spec) {
    if (rows.empty()) return rows;
    EchelonAccumulator acc(static_cast<int>(rows[0].size()), spec);
    for (auto& r : rows) acc.add_row(std::move(r));
    return acc.row_basis();
}

int rank_of(const std::vector<std::vector<Scalar>>& rows, int cols, const FieldSpec& spec) {
    EchelonAccumulator acc(cols, spec);
    for (const auto& r : rows) acc.add_row(r);
    return acc.rank();
}

} // namespace titsforge
