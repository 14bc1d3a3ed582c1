#include "titsforge/detail/flat.hpp"

#include "titsforge/errors.hpp"

namespace titsforge::detail {

FlatAlgebra FlatAlgebra::from(const GenericAlgebra& g) {
    if (!g.field().is_prime())
        throw InfiniteDomain("exhaustive scans need a finite base field");
    FlatAlgebra f;
    f.p = g.field().modulus();
    f.dim = g.dim();
    f.terms.resize(static_cast<std::size_t>(f.dim) * f.dim);
    for (int i = 0; i < f.dim; ++i)
        for (int j = 0; j < f.dim; ++j)
            for (const auto& t : g.product_terms(i, j))
                f.terms[static_cast<std::size_t>(i) * f.dim + j].push_back(
                    {static_cast<std::int32_t>(t.k), t.c.residue_value()});
    for (const auto& u : g.unit()) f.unit.push_back(u.residue_value());
    f.inv_table.assign(static_cast<std::size_t>(f.p), 0);
    for (std::int64_t a = 1; a < f.p; ++a)
        f.inv_table[static_cast<std::size_t>(a)] = egcd_inverse(a, f.p);
    return f;
}

void FlatAlgebra::mul(const std::int64_t* x, const std::int64_t* y, std::int64_t* out) const {
    for (int k = 0; k < dim; ++k) out[k] = 0;
    for (int i = 0; i < dim; ++i) {
        if (x[i] == 0) continue;
        const std::size_t row = static_cast<std::size_t>(i) * dim;
        for (int j = 0; j < dim; ++j) {
            if (y[j] == 0) continue;
            const std::int64_t c = x[i] * y[j] % p;
            for (const auto& t : terms[row + j]) out[t.k] += c * t.c;
        }
    }
    for (int k = 0; k < dim; ++k) out[k] %= p;
}

bool FlatAlgebra::singular(const std::int64_t* x, bool left) const {
    std::vector<std::int64_t> m(static_cast<std::size_t>(dim) * dim, 0);
    std::vector<std::int64_t> e(static_cast<std::size_t>(dim), 0);
    std::vector<std::int64_t> img(static_cast<std::size_t>(dim), 0);
    for (int j = 0; j < dim; ++j) {
        e.assign(static_cast<std::size_t>(dim), 0);
        e[static_cast<std::size_t>(j)] = 1;
        left ? mul(x, e.data(), img.data()) : mul(e.data(), x, img.data());
        for (int k = 0; k < dim; ++k)
            m[static_cast<std::size_t>(j) * dim + k] = img[static_cast<std::size_t>(k)];
    }
    int rank = 0;
    for (int col = 0; col < dim && rank < dim; ++col) {
        int piv = -1;
        for (int r = rank; r < dim; ++r)
            if (m[static_cast<std::size_t>(r) * dim + col] != 0) { piv = r; break; }
        if (piv < 0) continue;
        for (int k = 0; k < dim; ++k)
            std::swap(m[static_cast<std::size_t>(piv) * dim + k],
                      m[static_cast<std::size_t>(rank) * dim + k]);
        const std::int64_t inv =
            inv_table[static_cast<std::size_t>(m[static_cast<std::size_t>(rank) * dim + col])];
        for (int k = col; k < dim; ++k)
            m[static_cast<std::size_t>(rank) * dim + k] =
                m[static_cast<std::size_t>(rank) * dim + k] * inv % p;
        for (int r = rank + 1; r < dim; ++r) {
            const std::int64_t f = m[static_cast<std::size_t>(r) * dim + col];
            if (f == 0) continue;
            for (int k = col; k < dim; ++k) {
                auto& cell = m[static_cast<std::size_t>(r) * dim + k];
                cell = (cell - f * m[static_cast<std::size_t>(rank) * dim + k]) % p;
                if (cell < 0) cell += p;
            }
        }
        ++rank;
    }
    return rank < dim;
}

FlatTits FlatTits::from(const TitsPtr& J) {
    FlatTits f;
    f.A = FlatAlgebra::from(GenericAlgebra::wrap(J->coeff()));
    for (const auto& s : J->mu().coords()) f.mu.push_back(s.residue_value());
    for (const auto& s : J->mu_inverse().coords()) f.mu_inv.push_back(s.residue_value());
    for (const auto& s : J->coeff()->trace_vector()) f.tvec.push_back(s.residue_value());
    f.inv2 = egcd_inverse(2, f.A.p);
    while (f.A.unit[static_cast<std::size_t>(f.anchor)] == 0) ++f.anchor;
    f.anchor_inv =
        f.A.inv_table[static_cast<std::size_t>(f.A.unit[static_cast<std::size_t>(f.anchor)])];
    const Variant v = J->variant();
    f.mu_left_slot1 = (v == Variant::LL || v == Variant::LR);
    f.mu_left_slot2 = (v == Variant::LL || v == Variant::RL);
    return f;
}

std::int64_t FlatTits::trace(const std::int64_t* x) const {
    std::int64_t t = 0;
    for (int i = 0; i < A.dim; ++i) t += x[i] * tvec[static_cast<std::size_t>(i)];
    return t % A.p;
}

void FlatTits::adjoint_a(const std::int64_t* x, std::int64_t* out) const {
    const int n = A.dim;
    std::vector<std::int64_t> x2(static_cast<std::size_t>(n));
    A.mul(x, x, x2.data());
    const std::int64_t t = trace(x);
    const std::int64_t s = (t * t % A.p - trace(x2.data()) % A.p) % A.p * inv2 % A.p;
    for (int k = 0; k < n; ++k) {
        out[k] = (x2[static_cast<std::size_t>(k)] - t * x[k] +
                  s * A.unit[static_cast<std::size_t>(k)]) %
                 A.p;
        if (out[k] < 0) out[k] += A.p;
    }
}

std::int64_t FlatTits::norm_a(const std::int64_t* x) const {
    const int n = A.dim;
    std::vector<std::int64_t> adj(static_cast<std::size_t>(n)), prod(static_cast<std::size_t>(n));
    adjoint_a(x, adj.data());
    A.mul(x, adj.data(), prod.data());
    const std::int64_t lambda = prod[static_cast<std::size_t>(anchor)] * anchor_inv % A.p;
    for (int k = 0; k < n; ++k) {
        const std::int64_t want = lambda * A.unit[static_cast<std::size_t>(k)] % A.p;
        if (prod[static_cast<std::size_t>(k)] != want)
            throw InternalInconsistency("flat kernel: x x^# not scalar");
    }
    return lambda;
}

void FlatTits::tits_norm(const std::int64_t* x, std::int64_t* out) const {
    const int n = A.dim;
    const std::int64_t n0 = norm_a(x), n1 = norm_a(x + n), n2 = norm_a(x + 2 * n);
    std::vector<std::int64_t> t1(static_cast<std::size_t>(n)), t2(static_cast<std::size_t>(n));
    A.mul(x, x + n, t1.data());
    A.mul(t1.data(), x + 2 * n, t2.data());
    const std::int64_t tr = trace(t2.data());
    for (int k = 0; k < n; ++k) {
        out[k] = (n0 * A.unit[static_cast<std::size_t>(k)] + n1 * mu[static_cast<std::size_t>(k)] +
                  n2 * mu_inv[static_cast<std::size_t>(k)] -
                  tr * A.unit[static_cast<std::size_t>(k)]) %
                 A.p;
        if (out[k] < 0) out[k] += A.p;
    }
}

void FlatTits::tits_adjoint(const std::int64_t* x, std::int64_t* out) const {
    const int n = A.dim;
    const std::int64_t* x0 = x;
    const std::int64_t* x1 = x + n;
    const std::int64_t* x2 = x + 2 * n;
    std::vector<std::int64_t> adj(static_cast<std::size_t>(n)), prod(static_cast<std::size_t>(n)),
        placed(static_cast<std::size_t>(n));
    // slot 0: x0^# - x1 x2
    adjoint_a(x0, adj.data());
    A.mul(x1, x2, prod.data());
    for (int k = 0; k < n; ++k)
        out[k] = ((adj[static_cast<std::size_t>(k)] - prod[static_cast<std::size_t>(k)]) % A.p +
                  A.p) %
                 A.p;
    // slot 1: mu^{-1} x2^# (variant placement) - x0 x1
    adjoint_a(x2, adj.data());
    mu_left_slot1 ? A.mul(mu_inv.data(), adj.data(), placed.data())
                  : A.mul(adj.data(), mu_inv.data(), placed.data());
    A.mul(x0, x1, prod.data());
    for (int k = 0; k < n; ++k)
        out[n + k] = ((placed[static_cast<std::size_t>(k)] - prod[static_cast<std::size_t>(k)]) %
                          A.p +
                      A.p) %
                     A.p;
    // slot 2: mu x1^# (variant placement) - x2 x0
    adjoint_a(x1, adj.data());
    mu_left_slot2 ? A.mul(mu.data(), adj.data(), placed.data())
                  : A.mul(adj.data(), mu.data(), placed.data());
    A.mul(x2, x0, prod.data());
    for (int k = 0; k < n; ++k)
        out[2 * n + k] =
            ((placed[static_cast<std::size_t>(k)] - prod[static_cast<std::size_t>(k)]) % A.p +
             A.p) %
            A.p;
}

void decode_digits(std::int64_t idx, std::int64_t p, int n, std::int64_t* out) {
    for (int k = n - 1; k >= 0; --k) {
        out[k] = idx % p;
        idx /= p;
    }
}

} // namespace titsforge::detail
