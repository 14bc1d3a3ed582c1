#include "titsforge/scans.hpp"

#include <cmath>

#include "titsforge/detail/flat.hpp"
#include "titsforge/detail/sampling.hpp"
#include "titsforge/linalg.hpp"
#include "titsforge/parallel.hpp"
#include "titsforge/serialize.hpp"

namespace titsforge {

ScanMode scan_mode_from_name(const std::string& name) {
    if (name == "exhaustive") return ScanMode::Exhaustive;
    if (name == "random") return ScanMode::Random;
    throw ParseError("unknown scan mode '" + name + "' (expected exhaustive or random)");
}

std::string decided_name(Decided d) {
    switch (d) {
        case Decided::Yes: return "yes";
        case Decided::No: return "no";
        case Decided::Unknown: return "not decided";
    }
    return "?";
}

namespace {

// Exhaustive modes run on the flat int64 kernel (detail/flat.hpp); the
// generic Scalar path below remains the reference for random modes.

using detail::decode_digits;
using detail::FlatAlgebra;
using detail::FlatTits;

std::optional<std::int64_t> state_count_within_ceiling(std::int64_t p, int n) {
    std::int64_t t = 1;
    for (int i = 0; i < n; ++i) {
        if (t > kExhaustiveStateCeiling / p) return std::nullopt;
        t *= p;
    }
    if (t > kExhaustiveStateCeiling) return std::nullopt;
    return t;
}

std::int64_t checked_state_count(std::int64_t p, int n) {
    const auto t = state_count_within_ceiling(p, n);
    if (!t)
        throw InfiniteDomain("state space " + std::to_string(p) + "^" + std::to_string(n) +
                             " exceeds the exhaustive ceiling 2^26; use random mode");
    return *t;
}

Json flat_witness(const std::int64_t* digits, int dim_a) {
    Json out = Json::array();
    for (int s = 0; s < 3; ++s) {
        Json slot = Json::array();
        for (int k = 0; k < dim_a; ++k) slot.push_back(digits[s * dim_a + k]);
        out.push_back(std::move(slot));
    }
    return out;
}

TitsElement tits_from_digits(const TitsPtr& J, const std::int64_t* digits) {
    const auto& A = J->coeff();
    const std::int64_t p = A->field().modulus();
    std::array<std::vector<Scalar>, 3> slots;
    for (int s = 0; s < 3; ++s)
        for (int k = 0; k < A->dim(); ++k)
            slots[static_cast<std::size_t>(s)].push_back(Scalar::residue(digits[s * A->dim() + k], p));
    return J->element(A->element(slots[0]), A->element(slots[1]), A->element(slots[2]));
}

struct ScanPartial {
    std::int64_t scanned = 0;
    std::int64_t hits = 0;
    std::int64_t first_hit = -1;
    std::int64_t consequent_pass = 0;
    std::int64_t consequent_fail = 0;

    static void merge(ScanPartial& a, ScanPartial&& b) {
        a.scanned += b.scanned;
        a.hits += b.hits;
        if (a.first_hit < 0) a.first_hit = b.first_hit;
        a.consequent_pass += b.consequent_pass;
        a.consequent_fail += b.consequent_fail;
    }
};

} // namespace

// ---- decided facts ---------------------------------------------------------

std::optional<std::pair<std::vector<Scalar>, std::vector<Scalar>>>
find_zero_divisor_pair(const DescriptorPtr& A, std::uint64_t seed) {
    const int n = A->dim();
    // basis pairs in lexicographic order first
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            if ((A->basis_element(i) * A->basis_element(j)).is_zero())
                return std::make_pair(A->basis_element(i).coords(), A->basis_element(j).coords());
        }
    // sampled x whose left multiplication has a nontrivial kernel; any kernel
    // vector y gives the pair x y = 0
    for (std::uint64_t attempt = 0; attempt < 200; ++attempt) {
        SampleRng rng(seed, "zero-divisor", attempt);
        const AlgElement x = detail::sample_element(A, rng);
        if (x.is_zero()) continue;
        std::vector<std::vector<Scalar>> sys(static_cast<std::size_t>(n),
                                             std::vector<Scalar>(static_cast<std::size_t>(n),
                                                                 Scalar::zero(A->field())));
        for (int j = 0; j < n; ++j) {
            const auto img = (x * A->basis_element(j)).coords();
            for (int k = 0; k < n; ++k) sys[static_cast<std::size_t>(k)][static_cast<std::size_t>(j)] = img[static_cast<std::size_t>(k)];
        }
        EchelonAccumulator acc(n, A->field());
        for (auto& r : sys) acc.add_row(std::move(r));
        const auto kernel = acc.kernel_basis();
        if (!kernel.empty()) {
            const AlgElement y = A->element(kernel[0]);
            if (!(x * y).is_zero())
                throw InternalInconsistency("kernel vector is not annihilated");
            return std::make_pair(x.coords(), kernel[0]);
        }
    }
    return std::nullopt;
}

Decided coeff_is_division(const DescriptorPtr& A) {
    if (A->tag() == AlgebraTag::CyclicCubicField) return Decided::Yes; // a field
    if (find_zero_divisor_pair(A, 0)) return Decided::No;
    if (A->field().is_prime()) {
        const std::int64_t p = A->field().modulus();
        const auto total = state_count_within_ceiling(p, A->dim());
        if (!total) return Decided::Unknown;
        const FlatAlgebra flat = FlatAlgebra::from(GenericAlgebra::wrap(A));
        std::vector<std::int64_t> digits(static_cast<std::size_t>(A->dim()));
        for (std::int64_t idx = 1; idx < *total; ++idx) {
            decode_digits(idx, p, A->dim(), digits.data());
            if (flat.singular(digits.data(), true)) return Decided::No;
        }
        return Decided::Yes;
    }
    return Decided::Unknown;
}

Decided mu_is_norm(const TitsPtr& J) {
    const auto scalar_mu = as_scalar(J->mu());
    if (!scalar_mu) return Decided::No; // norms land in F 1
    const auto& A = J->coeff();
    if (!A->field().is_prime()) return Decided::Unknown;
    const std::int64_t lambda = scalar_mu->residue_value();

    // cheap constructive probes: norms of the embedded maximal subfield (or
    // of diagonal-type elements) usually hit every scalar over F_p
    const DescriptorPtr probe_space =
        A->tag() == AlgebraTag::CyclicAssoc ? A->underlying_field() : nullptr;
    if (probe_space) {
        const std::int64_t p = probe_space->field().modulus();
        const std::int64_t total = checked_state_count(p, probe_space->dim());
        std::vector<std::int64_t> digits(static_cast<std::size_t>(probe_space->dim()));
        for (std::int64_t idx = 1; idx < total; ++idx) {
            decode_digits(idx, p, probe_space->dim(), digits.data());
            std::vector<Scalar> coords;
            for (auto d : digits) coords.push_back(Scalar::residue(d, p));
            std::vector<Scalar> emb(static_cast<std::size_t>(A->dim()), Scalar::zero(A->field()));
            for (int k = 0; k < probe_space->dim(); ++k) emb[static_cast<std::size_t>(k)] = coords[static_cast<std::size_t>(k)];
            if (norm(A->element(emb)).residue_value() == lambda) return Decided::Yes;
        }
    }

    const std::int64_t p = A->field().modulus();
    const auto total = state_count_within_ceiling(p, A->dim());
    if (!total) return Decided::Unknown;
    const FlatTits flat = FlatTits::from(J);
    std::vector<std::int64_t> digits(static_cast<std::size_t>(A->dim()));
    for (std::int64_t idx = 1; idx < *total; ++idx) {
        decode_digits(idx, p, A->dim(), digits.data());
        if (flat.norm_a(digits.data()) == lambda) return Decided::Yes;
    }
    return Decided::No;
}

// ---- anisotropy ------------------------------------------------------------

VerificationReport anisotropy_scan(const TitsPtr& J, const ScanOptions& opt) {
    VerificationReport rep;
    rep.algebra = J->str();
    rep.seed = opt.seed;
    IdentityResult row;
    row.id = "anisotropy.tally";
    row.anchor = "M(x)=0 implies that x=0";
    const int dim = J->dim();
    const int dim_a = J->coeff()->dim();

    if (opt.mode == ScanMode::Exhaustive) {
        if (!J->coeff()->field().is_prime())
            throw InfiniteDomain("exhaustive anisotropy scan over Q");
        const std::int64_t p = J->coeff()->field().modulus();
        const std::int64_t total = checked_state_count(p, dim);
        const FlatTits flat = FlatTits::from(J);

        auto work = [&](std::int64_t b, std::int64_t e) {
            ScanPartial part;
            std::vector<std::int64_t> digits(static_cast<std::size_t>(dim));
            std::vector<std::int64_t> nval(static_cast<std::size_t>(dim_a));
            for (std::int64_t idx = std::max<std::int64_t>(b, 1); idx < e; ++idx) {
                decode_digits(idx, p, dim, digits.data());
                flat.tits_norm(digits.data(), nval.data());
                bool zero = true;
                for (int k = 0; k < dim_a; ++k)
                    if (nval[static_cast<std::size_t>(k)] != 0) { zero = false; break; }
                ++part.scanned;
                if (zero) {
                    ++part.hits;
                    if (part.first_hit < 0) part.first_hit = idx;
                }
            }
            return part;
        };
        ScanPartial all = parallel_reduce<ScanPartial>(total, opt.workers, work, ScanPartial::merge);
        row.samples = all.scanned;
        row.failures = all.hits;     // isotropic vectors found
        row.passes = all.scanned - all.hits;
        if (all.first_hit >= 0) {
            std::vector<std::int64_t> digits(static_cast<std::size_t>(dim));
            decode_digits(all.first_hit, p, dim, digits.data());
            row.witness = flat_witness(digits.data(), dim_a);
        }
    } else {
        auto work = [&](std::int64_t b, std::int64_t e) {
            ScanPartial part;
            for (std::int64_t idx = b; idx < e; ++idx) {
                SampleRng rng(opt.seed, "anisotropy", static_cast<std::uint64_t>(idx));
                const TitsElement x = detail::sample_tits_element(J, rng);
                if (x.is_zero()) continue;
                ++part.scanned;
                if (tits_norm(x).is_zero()) {
                    ++part.hits;
                    if (part.first_hit < 0) part.first_hit = idx;
                }
            }
            return part;
        };
        ScanPartial all = parallel_reduce<ScanPartial>(opt.samples, opt.workers, work,
                                                       ScanPartial::merge);
        row.samples = all.scanned;
        row.failures = all.hits;
        row.passes = all.scanned - all.hits;
        if (all.first_hit >= 0) {
            SampleRng rng(opt.seed, "anisotropy", static_cast<std::uint64_t>(all.first_hit));
            row.witness = tits_element_to_json(detail::sample_tits_element(J, rng));
        }
    }
    rep.results.push_back(std::move(row));
    return rep;
}

// ---- division --------------------------------------------------------------

VerificationReport division_scan(const GenericAlgebra& alg, const ScanOptions& opt) {
    VerificationReport rep;
    rep.algebra = alg.str();
    rep.seed = opt.seed;
    IdentityResult row;
    row.id = "division.tally";
    row.anchor = "the left multiplication with a, L_a(x)=ax, and the right multiplication";
    const int dim = alg.dim();

    if (opt.mode == ScanMode::Exhaustive) {
        if (!alg.field().is_prime())
            throw InfiniteDomain("exhaustive division scan over Q");
        const std::int64_t p = alg.field().modulus();
        const std::int64_t total = checked_state_count(p, dim);
        const FlatAlgebra flat = FlatAlgebra::from(alg);

        auto work = [&](std::int64_t b, std::int64_t e) {
            ScanPartial part;
            std::vector<std::int64_t> digits(static_cast<std::size_t>(dim));
            for (std::int64_t idx = std::max<std::int64_t>(b, 1); idx < e; ++idx) {
                decode_digits(idx, p, dim, digits.data());
                ++part.scanned;
                if (flat.singular(digits.data(), true) || flat.singular(digits.data(), false)) {
                    ++part.hits;
                    if (part.first_hit < 0) {
                        part.first_hit = idx;
                        break; // chunk-local early exit; merge keeps index order
                    }
                }
            }
            return part;
        };
        ScanPartial all = parallel_reduce<ScanPartial>(total, opt.workers, work, ScanPartial::merge);
        row.samples = all.scanned;
        row.failures = all.hits;
        row.passes = all.scanned - all.hits;
        if (all.first_hit >= 0) {
            std::vector<std::int64_t> digits(static_cast<std::size_t>(dim));
            decode_digits(all.first_hit, p, dim, digits.data());
            Json w = Json::array();
            for (int k = 0; k < dim; ++k) w.push_back(digits[static_cast<std::size_t>(k)]);
            row.witness = std::move(w);
        }
    } else {
        auto sample_flat = [&](std::uint64_t idx) {
            SampleRng rng(opt.seed, "division", idx);
            return sample_coords(alg.field(), dim, rng);
        };
        auto work = [&](std::int64_t b, std::int64_t e) {
            ScanPartial part;
            for (std::int64_t idx = b; idx < e; ++idx) {
                const auto x = sample_flat(static_cast<std::uint64_t>(idx));
                bool zero = true;
                for (const auto& s : x)
                    if (!s.is_zero()) { zero = false; break; }
                if (zero) continue;
                ++part.scanned;
                EchelonAccumulator lacc(dim, alg.field());
                EchelonAccumulator racc(dim, alg.field());
                for (int j = 0; j < dim; ++j) {
                    lacc.add_row(alg.multiply(x, alg.basis(j)));
                    racc.add_row(alg.multiply(alg.basis(j), x));
                }
                if (lacc.rank() < dim || racc.rank() < dim) {
                    ++part.hits;
                    if (part.first_hit < 0) part.first_hit = idx;
                }
            }
            return part;
        };
        ScanPartial all = parallel_reduce<ScanPartial>(opt.samples, opt.workers, work,
                                                       ScanPartial::merge);
        row.samples = all.scanned;
        row.failures = all.hits;
        row.passes = all.scanned - all.hits;
        if (all.first_hit >= 0)
            row.witness = coords_to_json(sample_flat(static_cast<std::uint64_t>(all.first_hit)));
    }
    rep.results.push_back(std::move(row));
    return rep;
}

// ---- sharp-zero ------------------------------------------------------------

namespace {

// Verifies the six product equations and the theorem's disjunction for a
// witness with x^# = 0. Returns Unknown when the division/norm facts cannot
// be decided over the base field.
Decided sharp_zero_consequent(const TitsPtr& J, const TitsElement& x, Decided a_division,
                              Decided mu_norm) {
    const auto& A = J->coeff();
    const AlgElement &x0 = x.slot(0), &x1 = x.slot(1), &x2 = x.slot(2);
    const AlgElement n0 = A->scalar_element(norm(x0));
    const AlgElement n1 = A->scalar_element(norm(x1));
    const AlgElement n2 = A->scalar_element(norm(x2));
    const bool six = n0 == x1 * x2 * x0 && n0 == x0 * (x1 * x2) &&
                     J->mu_inverse() * n2 == x0 * x1 * x2 &&
                     J->mu_inverse() * n2 == x2 * x0 * x1 &&
                     J->mu() * n1 == x2 * x0 * x1 && J->mu() * n1 == x1 * x2 * x0;
    if (!six) return Decided::No;
    if (a_division == Decided::No) return Decided::Yes;
    if (a_division == Decided::Yes) {
        if (mu_norm == Decided::Yes) return Decided::Yes;
        if (mu_norm == Decided::No) return Decided::No;
    }
    return Decided::Unknown;
}

} // namespace

VerificationReport sharp_zero_search(const TitsPtr& J, const ScanOptions& opt) {
    VerificationReport rep;
    rep.algebra = J->str();
    rep.seed = opt.seed;
    IdentityResult search;
    search.id = "sharp-zero.tally";
    search.anchor = "x^{\\sharp } = 0 implies that A has zero divisors";
    IdentityResult consequent;
    consequent.id = "sharp-zero.consequent";
    consequent.anchor = "N_{A}(x_{0}) = x_{1}x_{2}x_{0}";

    const int dim = J->dim();
    const int dim_a = J->coeff()->dim();
    const Decided a_div = coeff_is_division(J->coeff());
    const Decided mu_n = mu_is_norm(J);

    auto check_witness = [&](const TitsElement& x, ScanPartial& part) {
        const Decided ok = sharp_zero_consequent(J, x, a_div, mu_n);
        if (ok == Decided::Yes) ++part.consequent_pass;
        if (ok == Decided::No) ++part.consequent_fail;
    };

    if (opt.mode == ScanMode::Exhaustive) {
        if (!J->coeff()->field().is_prime())
            throw InfiniteDomain("exhaustive sharp-zero search over Q");
        const std::int64_t p = J->coeff()->field().modulus();
        const std::int64_t total = checked_state_count(p, dim);
        const FlatTits flat = FlatTits::from(J);

        auto work = [&](std::int64_t b, std::int64_t e) {
            ScanPartial part;
            std::vector<std::int64_t> digits(static_cast<std::size_t>(dim));
            std::vector<std::int64_t> adj(static_cast<std::size_t>(dim));
            for (std::int64_t idx = std::max<std::int64_t>(b, 1); idx < e; ++idx) {
                decode_digits(idx, p, dim, digits.data());
                flat.tits_adjoint(digits.data(), adj.data());
                bool zero = true;
                for (int k = 0; k < dim; ++k)
                    if (adj[static_cast<std::size_t>(k)] != 0) { zero = false; break; }
                ++part.scanned;
                if (zero) {
                    ++part.hits;
                    if (part.first_hit < 0) part.first_hit = idx;
                    check_witness(tits_from_digits(J, digits.data()), part);
                }
            }
            return part;
        };
        ScanPartial all = parallel_reduce<ScanPartial>(total, opt.workers, work, ScanPartial::merge);
        search.samples = all.scanned;
        search.failures = all.hits;
        search.passes = all.scanned - all.hits;
        if (all.first_hit >= 0) {
            std::vector<std::int64_t> digits(static_cast<std::size_t>(dim));
            decode_digits(all.first_hit, p, dim, digits.data());
            search.witness = flat_witness(digits.data(), dim_a);
        }
        consequent.samples = all.consequent_pass + all.consequent_fail;
        consequent.passes = all.consequent_pass;
        consequent.failures = all.consequent_fail;
        consequent.vacuous = all.hits == 0;
        consequent.witness = search.witness;
    } else {
        auto work = [&](std::int64_t b, std::int64_t e) {
            ScanPartial part;
            for (std::int64_t idx = b; idx < e; ++idx) {
                SampleRng rng(opt.seed, "sharp-zero", static_cast<std::uint64_t>(idx));
                const TitsElement x = detail::sample_tits_element(J, rng);
                if (x.is_zero()) continue;
                ++part.scanned;
                if (tits_adjoint(x).is_zero()) {
                    ++part.hits;
                    if (part.first_hit < 0) part.first_hit = idx;
                    check_witness(x, part);
                }
            }
            return part;
        };
        ScanPartial all = parallel_reduce<ScanPartial>(opt.samples, opt.workers, work,
                                                       ScanPartial::merge);
        search.samples = all.scanned;
        search.failures = all.hits;
        search.passes = all.scanned - all.hits;
        if (all.first_hit >= 0) {
            SampleRng rng(opt.seed, "sharp-zero", static_cast<std::uint64_t>(all.first_hit));
            search.witness = tits_element_to_json(detail::sample_tits_element(J, rng));
        }
        consequent.samples = all.consequent_pass + all.consequent_fail;
        consequent.passes = all.consequent_pass;
        consequent.failures = all.consequent_fail;
        consequent.vacuous = all.hits == 0;
        consequent.witness = search.witness;
    }
    rep.results = {std::move(search), std::move(consequent)};
    return rep;
}

// ---- weak Jordan composition ------------------------------------------------

namespace {

bool composition_holds(const TitsPtr& J, const TitsElement& x, const TitsElement& y) {
    const AlgElement nx = tits_norm(x);
    return tits_norm(tits_u(x, y)) == nx * nx * tits_norm(y);
}

} // namespace

VerificationReport weak_jordan_check(const TitsPtr& J, std::int64_t samples, std::uint64_t seed,
                                     int workers) {
    const auto& A = J->coeff();
    VerificationReport rep;
    rep.algebra = J->str();
    rep.seed = seed;

    struct ArmDef {
        const char* id;
        const char* tag;
        int kind; // 0: y_i = 0 pattern, 1: trace filter, 2: product filter, 3: unconstrained
    };
    const ArmDef arms[] = {{"C9.hyp3", "wj.h3", 0},
                           {"C9.hyp1", "wj.h1", 1},
                           {"C9.hyp2", "wj.h2", 2},
                           {"C9.explore", "wj.x", 3}};

    for (const auto& arm : arms) {
        IdentityResult row;
        row.id = arm.id;
        row.anchor = "N(U_{x}(y)) = N(x)^{2}N(y)";

        struct Partial {
            std::int64_t samples = 0, passes = 0, failures = 0;
            std::int64_t first_fail = -1;
            static void merge(Partial& a, Partial&& b) {
                a.samples += b.samples;
                a.passes += b.passes;
                a.failures += b.failures;
                if (a.first_fail < 0) a.first_fail = b.first_fail;
            }
        };

        auto generate = [&, arm](std::uint64_t idx)
            -> std::optional<std::pair<TitsElement, TitsElement>> {
            if (arm.kind == 3) {
                SampleRng rng(seed, arm.tag, idx);
                auto x = detail::sample_tits_element(J, rng);
                auto y = detail::sample_tits_element(J, rng);
                return std::make_pair(std::move(x), std::move(y));
            }
            const int max_attempts = arm.kind == 0 ? 1 : 256;
            for (int attempt = 0; attempt < max_attempts; ++attempt) {
                SampleRng rng(seed, arm.tag, idx * 1024 + static_cast<std::uint64_t>(attempt));
                const AlgElement x0 = detail::sample_element(A, rng);
                const TitsElement x = J->embed(0, x0);
                TitsElement y = detail::sample_tits_element(J, rng);
                if (arm.kind == 0) {
                    const int drop = static_cast<int>(idx % 3);
                    y = J->element(drop == 0 ? A->zero() : y.slot(0),
                                   drop == 1 ? A->zero() : y.slot(1),
                                   drop == 2 ? A->zero() : y.slot(2));
                    return std::make_pair(x, y);
                }
                const AlgElement x0s = adjoint(x0);
                const AlgElement chain = x0s * y.slot(1) * y.slot(2) * x0s;
                const AlgElement rhs = norm(y.slot(0)) * chain;
                const AlgElement lhs = y.slot(0) * y.slot(1) * y.slot(2);
                const bool keep = arm.kind == 1
                                      ? reduced_trace(lhs) == reduced_trace(rhs)
                                      : lhs == rhs;
                if (keep) return std::make_pair(x, y);
            }
            return std::nullopt;
        };

        auto work = [&](std::int64_t b, std::int64_t e) {
            Partial part;
            for (std::int64_t idx = b; idx < e; ++idx) {
                const auto pair = generate(static_cast<std::uint64_t>(idx));
                if (!pair) continue;
                ++part.samples;
                if (composition_holds(J, pair->first, pair->second)) {
                    ++part.passes;
                } else {
                    ++part.failures;
                    if (part.first_fail < 0) part.first_fail = idx;
                }
            }
            return part;
        };
        Partial all = parallel_reduce<Partial>(samples, workers, work, Partial::merge);
        row.samples = all.samples;
        row.passes = all.passes;
        row.failures = all.failures;
        row.vacuous = all.samples == 0;
        if (all.first_fail >= 0) {
            const auto pair = generate(static_cast<std::uint64_t>(all.first_fail));
            row.witness = Json::array({tits_element_to_json(pair->first),
                                       tits_element_to_json(pair->second)});
        }
        rep.results.push_back(std::move(row));
    }
    return rep;
}

} // namespace titsforge
