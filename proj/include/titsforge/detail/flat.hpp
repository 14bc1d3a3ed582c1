#ifndef TITSFORGE_DETAIL_FLAT_HPP
#define TITSFORGE_DETAIL_FLAT_HPP

#include <cstdint>
#include <vector>

#include "titsforge/generic.hpp"

namespace titsforge::detail {

// Exhaustive scans stream millions of coordinate tuples; boxing every residue
// in a Scalar would dominate the runtime. The flat kernel copies the sparse
// structure constants into plain int64 tables once and works in stack
// buffers. The generic Scalar path stays the reference implementation; the
// two are pinned against each other in the test suite.

struct FlatAlgebra {
    std::int64_t p = 0;
    int dim = 0;
    struct Term {
        std::int32_t k;
        std::int64_t c;
    };
    std::vector<std::vector<Term>> terms; // (i * dim + j)
    std::vector<std::int64_t> unit;
    std::vector<std::int64_t> inv_table; // inverses mod p, index 1..p-1

    static FlatAlgebra from(const GenericAlgebra& g);

    void mul(const std::int64_t* x, const std::int64_t* y, std::int64_t* out) const;
    /// Rank test of left (or right) multiplication by x.
    bool singular(const std::int64_t* x, bool left) const;
};

/// Flat view of a Tits algebra: the coefficient kernel plus mu, mu^{-1},
/// the trace vector and the anchor data for scalar extraction.
struct FlatTits {
    FlatAlgebra A;
    std::vector<std::int64_t> mu, mu_inv, tvec;
    std::int64_t inv2 = 0;
    int anchor = 0;
    std::int64_t anchor_inv = 1;
    bool mu_left_slot1 = true, mu_left_slot2 = true;

    static FlatTits from(const TitsPtr& J);

    std::int64_t trace(const std::int64_t* x) const;
    void adjoint_a(const std::int64_t* x, std::int64_t* out) const;
    std::int64_t norm_a(const std::int64_t* x) const;
    /// N(x) into out[0..dimA), x a flat 3*dimA tuple.
    void tits_norm(const std::int64_t* x, std::int64_t* out) const;
    /// x^# into out[0..3*dimA).
    void tits_adjoint(const std::int64_t* x, std::int64_t* out) const;
};

/// index -> coordinate tuple, most significant digit first, so increasing
/// index is exactly lexicographic order on tuples.
void decode_digits(std::int64_t idx, std::int64_t p, int n, std::int64_t* out);

} // namespace titsforge::detail

#endif
