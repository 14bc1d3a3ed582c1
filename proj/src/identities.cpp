#include "titsforge/identities.hpp"

#include <algorithm>
#include <functional>
#include <optional>

#include "titsforge/detail/sampling.hpp"
#include "titsforge/linalg.hpp"
#include "titsforge/parallel.hpp"
#include "titsforge/serialize.hpp"

namespace titsforge {

namespace {

const std::vector<IdentityInfo>& registry_storage() {
    static const std::vector<IdentityInfo> reg = {
        {"D1", "(degree 3 identity)", true},
        {"D2", "(trace-sharp formula)", true},
        {"D3", "(trace-product formula)", true},
        {"D4", "xx^{\\sharp } = x^{\\sharp }x = N_{A}(x)1", true},
        {"D5", "(xy)^{\\sharp } = y^{\\sharp }x^{\\sharp }", true},
        {"D6", "T_{A}(x^{\\sharp }) = ... = S_{A}(x)", true},
        {"D7", "2S_{A}(x) = T_{A}(x)^{2}-T_{A}(x^{2})", true},
        {"D8", "x\\sharp y = 2(x \\cdot y) -T_{A}(x)y", true},
        {"D9", "xyx = T_{A}(x,y)x-x^{\\sharp }\\sharp y", true},
        {"D10", "x \\times x = ... = x^{\\sharp }", true},
        {"D11", "(x^{\\sharp })^{\\sharp } = N_{A}(x)x", true},
        {"D12", "N_A(x^\\sharp) = N_A(x)^2", true},
        {"D13", "T_{A}(xy) = T_{A}(yx)", true},
        {"J1", "S(x)= T(x^\\sharp)", false},
        {"J2", "T(x,y) = T(xy)", false},
        {"J3", "x\\sharp 1 = T(x)1-x", false},
        {"J4", "x^\\sharp=x^2-T(x)x+S(x)1", false},
        {"J5", "T(x\\times y)=\\frac{1}{2}(T(x)T(y)-T(xy))", false},
        {"J6", "xy = \\frac{1}{2}U_{x,y}(1)", false},
        {"J7", "x\\sharp y = (x_{0}\\sharp y_{0}-x_{1}y_{2}-y_{1}x_{2}, ...", false},
        {"C1", "xx^{\\sharp } = x^{\\sharp }x = N(x)1", false},
        {"C2", "if and only if \\mu \\in F^{\\times}", false},
        {"C3", "x^{-1}= N(x)^{-1}x^{\\sharp }", false},
        {"C4", "x^{3} - T(x)x^{2}+S(x)x-N(x)1 = 0", false},
        {"C5", "holds for all x \\in J(A,\\mu) if and only if \\mu \\in F^{\\times}", false},
        {"C6", "(x^{\\#})^{\\#} = N(x)x", false},
        {"C7", "if and only if N_{A}(\\mu) = \\mu^{3}", false},
        {"C8", "if and only if \\mu \\in F^{\\times}", false},
        {"C9", "N(U_{x}(y)) = N(x)^{2}N(y)", false},
        {"C10", "T(x \\times y, z) = T(x, y \\times z)", false},
        {"C11", "\\mu \\notin N_{A}(A^\\times) and A is a division algebra", false},
        {"C12", "Nuc_l(J(A,\\mu)) = Nuc_r(J(A,\\mu)) = F", false},
        {"L1", "such that A^{+} is a division algebra", true},
    };
    return reg;
}

enum class Arm { Verify, Falsify };

// One sampled evaluation: did the underlying statement hold, and for which
// input. nullopt = hypothesis generation found nothing at this index.
using SampleFn = std::function<std::optional<std::pair<bool, Json>>(std::uint64_t)>;

IdentityResult run_sampled(const std::string& result_id, const std::string& anchor, Arm arm,
                           const SampleFn& sample, std::int64_t samples, int workers) {
    struct Partial {
        std::int64_t evaluated = 0, held = 0, violated = 0;
        std::int64_t first_violation = -1;
        Json witness;
        static void merge(Partial& a, Partial&& b) {
            a.evaluated += b.evaluated;
            a.held += b.held;
            a.violated += b.violated;
            if (a.first_violation < 0 && b.first_violation >= 0) {
                a.first_violation = b.first_violation;
                a.witness = std::move(b.witness);
            }
        }
    };
    auto work = [&](std::int64_t b, std::int64_t e) {
        Partial part;
        for (std::int64_t idx = b; idx < e; ++idx) {
            std::optional<std::pair<bool, Json>> r;
            try {
                r = sample(static_cast<std::uint64_t>(idx));
            } catch (const Error& err) {
                r = std::make_pair(false, Json(err.what()));
            }
            if (!r) continue;
            ++part.evaluated;
            if (r->first) {
                ++part.held;
            } else {
                ++part.violated;
                if (part.first_violation < 0) {
                    part.first_violation = idx;
                    part.witness = std::move(r->second);
                }
            }
        }
        return part;
    };
    Partial all = parallel_reduce<Partial>(samples, workers, work, Partial::merge);

    IdentityResult row;
    row.id = result_id;
    row.anchor = anchor;
    row.samples = all.evaluated;
    row.vacuous = all.evaluated == 0;
    row.witness = std::move(all.witness);
    if (arm == Arm::Falsify) {
        row.passes = all.violated; // the violations are the predicted outcome
        row.failures = all.held;
    } else {
        row.passes = all.held;
        row.failures = all.violated;
    }
    return row;
}

// ---- coefficient-level identities -------------------------------------------

// Unnormalized trilinearization N_A(x, y, z) = N_A(x+z; y) - N_A(x; y)
// - N_A(z; y); equals 6 times the 1/6-normalized symmetric form.
Scalar norm_trilinear_raw(const AlgElement& x, const AlgElement& y, const AlgElement& z) {
    return norm_linear(x + z, y) - norm_linear(x, y) - norm_linear(z, y);
}

bool check_descriptor_identity(const std::string& id, const DescriptorPtr& A,
                               const AlgElement& x, const AlgElement& y) {
    const FieldSpec& f = A->field();
    if (id == "D1") {
        const AlgElement x2 = x * x;
        return (x2 * x - reduced_trace(x) * x2 + s_quadratic(x) * x -
                A->scalar_element(norm(x)))
            .is_zero();
    }
    if (id == "D2") return trace_form(adjoint(x), y) == norm_linear(x, y);
    if (id == "D3")
        return reduced_trace(x) * reduced_trace(y) - norm_trilinear_raw(A->unit(), x, y) ==
               trace_form(x, y);
    if (id == "D4") {
        const AlgElement xs = adjoint(x);
        const AlgElement n = A->scalar_element(norm(x));
        return x * xs == n && xs * x == n;
    }
    if (id == "D5") return adjoint(x * y) == adjoint(y) * adjoint(x);
    if (id == "D6") return reduced_trace(adjoint(x)) == s_quadratic(x);
    if (id == "D7") {
        const Scalar t = reduced_trace(x);
        return Scalar::from_int(f, 2) * s_quadratic(x) == t * t - reduced_trace(x * x);
    }
    if (id == "D8") {
        const AlgElement j = jordan(x, y);
        const Scalar tx = reduced_trace(x), ty = reduced_trace(y);
        return sharp(x, y) == Scalar::from_int(f, 2) * j - tx * y - ty * x +
                                  A->scalar_element(tx * ty - reduced_trace(j));
    }
    if (id == "D9") return x * y * x == u_operator(x, y);
    if (id == "D10") return cross(x, x) == adjoint(x);
    if (id == "D11") return adjoint(adjoint(x)) == norm(x) * x;
    if (id == "D12") return norm(adjoint(x)) == norm(x) * norm(x);
    if (id == "D13") return reduced_trace(x * y) == reduced_trace(y * x);
    throw UnknownIdentity("unknown coefficient-level identity " + id);
}

// ---- Tits-level machinery -----------------------------------------------------

struct TitsCtx {
    TitsPtr J;
    std::uint64_t seed = 0;
    std::vector<std::vector<Scalar>> centralizer; // of mu in A
    bool commutative = false;
    bool mu_scalar = false;
    bool mu_cubed_norm = false; // N_A(mu) 1 = mu^3
    bool central_simple = false;
    bool field_coeff = false;   // A is a field: no nonzero norm-zero elements
};

TitsCtx make_tits_ctx(const TitsPtr& J, std::uint64_t seed) {
    TitsCtx ctx;
    ctx.J = J;
    ctx.seed = seed;
    const auto& A = J->coeff();
    ctx.commutative =
        A->tag() == AlgebraTag::SplitEtale || A->tag() == AlgebraTag::CyclicCubicField;
    ctx.mu_scalar = J->mu_in_base_field();
    ctx.mu_cubed_norm = A->scalar_element(norm(J->mu())) == J->mu() * J->mu() * J->mu();
    ctx.central_simple = A->tag() == AlgebraTag::Mat3 || A->tag() == AlgebraTag::CyclicAssoc;
    ctx.field_coeff = A->tag() == AlgebraTag::CyclicCubicField;

    if (ctx.commutative) {
        for (int k = 0; k < A->dim(); ++k) ctx.centralizer.push_back(A->basis_element(k).coords());
    } else {
        // kernel of a -> a mu - mu a
        std::vector<std::vector<Scalar>> sys(
            static_cast<std::size_t>(A->dim()),
            std::vector<Scalar>(static_cast<std::size_t>(A->dim()), Scalar::zero(A->field())));
        for (int k = 0; k < A->dim(); ++k) {
            const auto diff =
                (A->basis_element(k) * J->mu() - J->mu() * A->basis_element(k)).coords();
            for (int c = 0; c < A->dim(); ++c)
                sys[static_cast<std::size_t>(c)][static_cast<std::size_t>(k)] =
                    diff[static_cast<std::size_t>(c)];
        }
        EchelonAccumulator acc(A->dim(), A->field());
        for (auto& r : sys) acc.add_row(std::move(r));
        ctx.centralizer = acc.kernel_basis();
    }
    return ctx;
}

AlgElement sample_combination(const DescriptorPtr& A,
                              const std::vector<std::vector<Scalar>>& basis, SampleRng& rng) {
    std::vector<Scalar> coords(static_cast<std::size_t>(A->dim()), Scalar::zero(A->field()));
    for (const auto& v : basis) {
        const Scalar c = sample_scalar(A->field(), rng);
        if (c.is_zero()) continue;
        for (int k = 0; k < A->dim(); ++k)
            coords[static_cast<std::size_t>(k)] += c * v[static_cast<std::size_t>(k)];
    }
    return A->element(std::move(coords));
}

// Nonzero mu-commuting element (the whole algebra when A is commutative).
std::optional<AlgElement> sample_commuting(const TitsCtx& ctx, SampleRng& rng,
                                           bool require_nonzero_norm) {
    const auto& A = ctx.J->coeff();
    for (int attempt = 0; attempt < 64; ++attempt) {
        const AlgElement a = ctx.commutative ? detail::sample_element(A, rng)
                                             : sample_combination(A, ctx.centralizer, rng);
        if (a.is_zero()) continue;
        if (require_nonzero_norm && norm(a).is_zero()) continue;
        return a;
    }
    return std::nullopt;
}

// Nonzero element with N_A = 0, optionally inside the centralizer of mu.
// Fields have none, so the caller records the class as vacuous.
std::optional<AlgElement> sample_norm_zero(const TitsCtx& ctx, SampleRng& rng,
                                           bool within_centralizer) {
    const auto& A = ctx.J->coeff();
    if (ctx.field_coeff) return std::nullopt;
    for (int attempt = 0; attempt < 64; ++attempt) {
        AlgElement a = A->zero();
        if (A->tag() == AlgebraTag::SplitEtale) {
            auto coords = sample_coords(A->field(), A->dim(), rng);
            coords[static_cast<std::size_t>(rng.below(3))] = Scalar::zero(A->field());
            a = A->element(std::move(coords));
        } else if (A->tag() == AlgebraTag::Mat3 && !within_centralizer &&
                   A->field().is_rational()) {
            // rejection over Q never hits a singular matrix; zero out a row
            auto coords = sample_coords(A->field(), A->dim(), rng);
            const int r = static_cast<int>(rng.below(3));
            for (int c = 0; c < 3; ++c)
                coords[static_cast<std::size_t>(3 * r + c)] = Scalar::zero(A->field());
            a = A->element(std::move(coords));
        } else {
            a = within_centralizer && !ctx.commutative
                    ? sample_combination(A, ctx.centralizer, rng)
                    : detail::sample_element(A, rng);
        }
        if (a.is_zero()) continue;
        if (within_centralizer && !commutes_with_mu(*ctx.J, a)) continue;
        if (!norm(a).is_zero()) continue;
        return a;
    }
    return std::nullopt;
}

bool sharp_identity_holds(const TitsPtr& J, const TitsElement& x) {
    const TitsElement xs = tits_adjoint(x);
    const TitsElement rhs = J->embed(0, tits_norm(x));
    return x * xs == rhs && xs * x == rhs;
}

bool adjoint_identity_holds(const TitsElement& x) {
    return tits_adjoint(tits_adjoint(x)) == scale_by_coeff(tits_norm(x), x);
}

bool composition_law_holds(const TitsPtr& J, const TitsElement& x, const TitsElement& y) {
    const AlgElement nx = tits_norm(x);
    return tits_norm(tits_u(x, y)) == nx * nx * tits_norm(y);
}

// ---- direct (fact) rows --------------------------------------------------------

enum class Fact { True, False, Unknown };

Fact to_fact(Decided d) {
    return d == Decided::Yes ? Fact::True : d == Decided::No ? Fact::False : Fact::Unknown;
}

const char* fact_text(Fact f) {
    return f == Fact::True ? "yes" : f == Fact::False ? "no" : "not decided";
}

IdentityResult run_c11(const TitsCtx& ctx, const IdentityInfo& info) {
    const TitsPtr& J = ctx.J;
    const Fact a_div = to_fact(coeff_is_division(J->coeff()));
    const Fact mu_norm = to_fact(mu_is_norm(J));
    const Fact indep = J->mu_powers_independent() ? Fact::True : Fact::False;

    Fact anisotropic = Fact::Unknown;
    Fact j_division = Fact::Unknown;
    if (J->coeff()->field().is_prime()) {
        ScanOptions opt;
        opt.mode = ScanMode::Exhaustive;
        try {
            anisotropic = anisotropy_scan(J, opt).results[0].failures == 0 ? Fact::True
                                                                           : Fact::False;
            j_division = division_scan(GenericAlgebra::wrap(J), opt).results[0].failures == 0
                             ? Fact::True
                             : Fact::False;
        } catch (const InfiniteDomain&) {
            // state space above the ceiling; facts stay undecided
        }
    }
    bool sharp_consistent = true;
    bool sharp_decided = false;
    try {
        ScanOptions sopt;
        sopt.mode = J->coeff()->field().is_prime() ? ScanMode::Exhaustive : ScanMode::Random;
        sopt.samples = 2000;
        const auto srep = sharp_zero_search(J, sopt);
        sharp_consistent = srep.results[1].failures == 0;
        sharp_decided = true;
    } catch (const InfiniteDomain&) {
    }

    auto both = [](Fact a, Fact b) {
        if (a == Fact::False || b == Fact::False) return Fact::False;
        if (a == Fact::True && b == Fact::True) return Fact::True;
        return Fact::Unknown;
    };
    auto neg = [](Fact a) {
        return a == Fact::True ? Fact::False : a == Fact::False ? Fact::True : Fact::Unknown;
    };
    struct Imp {
        const char* name;
        Fact premise;
        Fact conclusion;
    };
    const std::vector<Imp> imps = {
        {"J-division => mu not a norm and A division", j_division, both(neg(mu_norm), a_div)},
        {"A division and independent powers => N anisotropic", both(a_div, indep), anisotropic},
        {"N anisotropic => A division and mu not a norm", anisotropic,
         both(a_div, neg(mu_norm))},
    };

    IdentityResult row;
    row.id = info.id;
    row.anchor = info.anchor;
    Json facts;
    facts["A_division"] = fact_text(a_div);
    facts["mu_in_norm_image"] = fact_text(mu_norm);
    facts["mu_powers_independent"] = indep == Fact::True;
    facts["N_anisotropic"] = fact_text(anisotropic);
    facts["J_division"] = fact_text(j_division);

    auto record = [&](bool ok, const char* name) {
        ++row.samples;
        ok ? ++row.passes : ++row.failures;
        if (!ok && row.witness.is_null()) {
            Json w = facts;
            w["violated"] = name;
            row.witness = std::move(w);
        }
    };
    for (const auto& imp : imps) {
        if (imp.premise == Fact::Unknown) continue;
        if (imp.premise == Fact::False) {
            record(true, imp.name); // materially true
            continue;
        }
        if (imp.conclusion == Fact::Unknown) continue;
        record(imp.conclusion == Fact::True, imp.name);
    }
    if (sharp_decided) record(sharp_consistent, "sharp-zero consequent");
    row.vacuous = row.samples == 0;
    return row;
}

IdentityResult run_c12(const TitsCtx& ctx, const IdentityInfo& info) {
    const TitsPtr& J = ctx.J;
    const GenericAlgebra g = GenericAlgebra::wrap(J);
    const SubspaceBasis left = compute_nucleus(g, NucleusSide::Left);
    const SubspaceBasis right = compute_nucleus(g, NucleusSide::Right);
    const SubspaceBasis middle = compute_nucleus(g, NucleusSide::Middle);

    IdentityResult row;
    row.id = info.id;
    row.anchor = info.anchor;
    auto check = [&](bool ok, const char* what) {
        ++row.samples;
        ok ? ++row.passes : ++row.failures;
        if (!ok && row.witness.is_null()) {
            Json w;
            w["violated"] = what;
            w["nucleus_dims"] =
                Json::array({left.dimension(), middle.dimension(), right.dimension()});
            row.witness = std::move(w);
        }
    };
    check(left.dimension() == 1 && left.contains_unit_only(g.unit()), "Nuc_l = F");
    check(right.dimension() == 1 && right.contains_unit_only(g.unit()), "Nuc_r = F");
    const AlgebraTag tag = J->coeff()->tag();
    if (tag == AlgebraTag::Mat3 || tag == AlgebraTag::CyclicAssoc) {
        check(middle.dimension() == 1, "Nuc_m = F for central simple A");
    } else if (tag == AlgebraTag::CyclicCubicField) {
        check(middle.supported_on(0, J->coeff()->dim()), "Nuc_m inside the A0 copy of K");
    }
    return row;
}

IdentityResult run_l1(const DescriptorPtr& A, const IdentityInfo& info, std::uint64_t seed) {
    IdentityResult row;
    row.id = info.id;
    row.anchor = info.anchor;
    std::vector<std::pair<AlgElement, AlgElement>> pairs;
    for (int i = 0; i < A->dim(); ++i)
        for (int j = 0; j < A->dim(); ++j) {
            const AlgElement x = A->basis_element(i), y = A->basis_element(j);
            if ((x * y).is_zero()) pairs.emplace_back(x, y);
        }
    if (pairs.empty()) {
        if (const auto found = find_zero_divisor_pair(A, seed))
            pairs.emplace_back(A->element(found->first), A->element(found->second));
    }
    for (const auto& [x, y] : pairs) {
        ++row.samples;
        // xy = 0 transfers to the Jordan product: (yx)(yx) = y(xy)x = 0, so
        // either yx is a nonzero element with vanishing Jordan square, or
        // yx = 0 and already x o y = 0
        const AlgElement u = y * x;
        const bool ok = u.is_zero() ? jordan(x, y).is_zero()
                                    : jordan(u, u).is_zero() && (u * u).is_zero();
        ok ? ++row.passes : ++row.failures;
        if (!ok && row.witness.is_null())
            row.witness = Json::array({element_to_json(x), element_to_json(y)});
    }
    row.vacuous = row.samples == 0;
    return row;
}

// ---- per-identity runners -------------------------------------------------------

IdentityResult run_descriptor_identity(const IdentityInfo& info, const DescriptorPtr& A,
                                       std::int64_t samples, std::uint64_t seed, int workers) {
    if (info.id == "L1") return run_l1(A, info, seed);
    const std::string id = info.id;
    SampleFn fn = [id, A, seed](std::uint64_t idx) -> std::optional<std::pair<bool, Json>> {
        SampleRng rng(seed, id, idx);
        const AlgElement x = detail::sample_element(A, rng);
        const AlgElement y = detail::sample_element(A, rng);
        const bool held = check_descriptor_identity(id, A, x, y);
        return std::make_pair(held, Json::array({element_to_json(x), element_to_json(y)}));
    };
    return run_sampled(id, info.anchor, Arm::Verify, fn, samples, workers);
}

IdentityResult run_tits_identity(const TitsCtx& ctx, const IdentityInfo& info,
                                 std::int64_t samples, int workers) {
    const TitsPtr J = ctx.J;
    const std::uint64_t seed = ctx.seed;
    const std::string id = info.id;

    auto pair_json = [](const TitsElement& x, const TitsElement& y) {
        return Json::array({tits_element_to_json(x), tits_element_to_json(y)});
    };

    // unconditional construction-level identities
    if (id[0] == 'J') {
        SampleFn fn = [&, id](std::uint64_t idx) -> std::optional<std::pair<bool, Json>> {
            SampleRng rng(seed, id, idx);
            const TitsElement x = detail::sample_tits_element(J, rng);
            const TitsElement y = detail::sample_tits_element(J, rng);
            const auto& A = *J->coeff();
            bool held = false;
            if (id == "J1") {
                held = tits_s(x) == A.scalar_element(tits_trace(tits_adjoint(x)));
                const Scalar rhs = tits_trace(x) * tits_trace(y) - tits_trace_form(x, y);
                held = held && tits_s_bilinear(x, y) == A.scalar_element(rhs);
            } else if (id == "J2") {
                held = tits_trace_form(x, y) == tits_trace(x * y);
            } else if (id == "J3") {
                held = tits_sharp(x, J->unit()) == tits_trace(x) * J->unit() - x;
            } else if (id == "J4") {
                const auto s = as_scalar(tits_s(x));
                held = s && tits_adjoint(x) == x * x - tits_trace(x) * x + *s * J->unit();
            } else if (id == "J5") {
                const Scalar half = small_inverse(2, A.field());
                held = tits_trace(tits_cross(x, y)) ==
                       half * (tits_trace(x) * tits_trace(y) - tits_trace(x * y));
            } else if (id == "J6") {
                const Scalar half = small_inverse(2, A.field());
                held = x * y == half * tits_u_bilinear(x, y, J->unit());
            } else if (id == "J7") {
                held = tits_sharp(x, y) == tits_sharp_closed_form(x, y);
            } else {
                throw UnknownIdentity("unknown construction-level identity " + id);
            }
            return std::make_pair(held, pair_json(x, y));
        };
        return run_sampled(id, info.anchor, Arm::Verify, fn, samples, workers);
    }

    if (id == "C11") return run_c11(ctx, info);
    if (id == "C12") return run_c12(ctx, info);

    const auto& A = J->coeff();

    if (id == "C1" || id == "C4") {
        const bool cubic = id == "C4";
        SampleFn fn = [&, id, cubic](std::uint64_t idx) -> std::optional<std::pair<bool, Json>> {
            SampleRng rng(seed, id, idx);
            std::optional<TitsElement> x;
            if (idx % 2 == 0) {
                // (x0, 0, x2) with x0 mu = mu x0 and N_A(x2) = 0
                const auto x0 = sample_commuting(ctx, rng, false);
                const auto x2 = sample_norm_zero(ctx, rng, false);
                if (x0 && x2) x = J->element(*x0, A->zero(), *x2);
            } else {
                // (x0, x1, 0) with x1 mu = mu x1 and N_A(x1) = 0
                const auto x1 = sample_norm_zero(ctx, rng, true);
                if (x1) x = J->element(detail::sample_element(A, rng), *x1, A->zero());
            }
            if (!x) return std::nullopt;
            bool held;
            if (!cubic) {
                held = sharp_identity_holds(J, *x);
            } else {
                const auto n = as_scalar(tits_norm(*x));
                const auto s = as_scalar(tits_s(*x));
                if (!n || !s) {
                    held = false;
                } else {
                    const TitsElement x2 = *x * *x;
                    const TitsElement rhs =
                        tits_trace(*x) * x2 - *s * *x + *n * J->unit();
                    held = x2 * *x == rhs && *x * x2 == rhs;
                }
            }
            return std::make_pair(held, tits_element_to_json(*x));
        };
        return run_sampled(id, info.anchor, Arm::Verify, fn, samples, workers);
    }

    if (id == "C2") {
        const Arm arm = ctx.mu_scalar ? Arm::Verify : Arm::Falsify;
        SampleFn fn = [&](std::uint64_t idx) -> std::optional<std::pair<bool, Json>> {
            SampleRng rng(seed, "C2", idx);
            std::optional<TitsElement> x;
            if (idx % 2 == 0) {
                // (x0, 0, x2), x0 commuting, N_A(x2) != 0
                const auto x0 = sample_commuting(ctx, rng, false);
                std::optional<AlgElement> x2;
                for (int a = 0; a < 64 && !x2; ++a) {
                    AlgElement cand = detail::sample_element(A, rng);
                    if (!norm(cand).is_zero()) x2 = std::move(cand);
                }
                if (x0 && x2) x = J->element(*x0, A->zero(), *x2);
            } else {
                // (x0, x1, 0), x1 commuting with N_A(x1) != 0
                const auto x1 = sample_commuting(ctx, rng, true);
                if (x1) x = J->element(detail::sample_element(A, rng), *x1, A->zero());
            }
            if (!x) return std::nullopt;
            return std::make_pair(sharp_identity_holds(J, *x), tits_element_to_json(*x));
        };
        return run_sampled(id + (arm == Arm::Verify ? ".verify" : ".falsify"), info.anchor, arm,
                           fn, samples, workers);
    }

    if (id == "C3") {
        SampleFn fn = [&](std::uint64_t idx) -> std::optional<std::pair<bool, Json>> {
            SampleRng rng(seed, "C3", idx);
            std::optional<AlgElement> x0;
            for (int a = 0; a < 64 && !x0; ++a) {
                AlgElement cand = detail::sample_element(A, rng);
                if (!norm(cand).is_zero()) x0 = std::move(cand);
            }
            if (!x0) return std::nullopt;
            std::optional<TitsElement> x;
            switch (idx % 3) {
                case 0: // the A-case (x0, 0, 0)
                    x = J->element(*x0, A->zero(), A->zero());
                    break;
                case 1: { // (x0, x1, 0), x1 commuting norm-zero
                    const auto x1 = sample_norm_zero(ctx, rng, true);
                    if (x1) x = J->element(*x0, *x1, A->zero());
                    break;
                }
                default: { // (x0, 0, x2), x0 commuting, x2 norm-zero
                    if (!commutes_with_mu(*J, *x0)) {
                        const auto c = sample_commuting(ctx, rng, true);
                        if (!c) return std::nullopt;
                        x0 = *c;
                    }
                    const auto x2 = sample_norm_zero(ctx, rng, false);
                    if (x2) x = J->element(*x0, A->zero(), *x2);
                    break;
                }
            }
            if (!x) return std::nullopt;
            bool held = false;
            try {
                const TitsElement inv = tits_inverse_conditional(*x);
                held = *x * inv == J->unit() && inv * *x == J->unit();
            } catch (const Error&) {
                held = false;
            }
            return std::make_pair(held, tits_element_to_json(*x));
        };
        return run_sampled(id, info.anchor, Arm::Verify, fn, samples, workers);
    }

    if (id == "C5") {
        const Arm arm = ctx.mu_scalar ? Arm::Verify : Arm::Falsify;
        SampleFn fn = [&](std::uint64_t idx) -> std::optional<std::pair<bool, Json>> {
            SampleRng rng(seed, "C5", idx);
            const TitsElement x = idx == 0 ? J->embed(1, A->unit())
                                           : detail::sample_tits_element(J, rng);
            return std::make_pair(sharp_identity_holds(J, x), tits_element_to_json(x));
        };
        return run_sampled(id + (arm == Arm::Verify ? ".verify" : ".falsify"), info.anchor, arm,
                           fn, samples, workers);
    }

    if (id == "C6") {
        SampleFn fn = [&](std::uint64_t idx) -> std::optional<std::pair<bool, Json>> {
            SampleRng rng(seed, "C6", idx);
            std::optional<TitsElement> x;
            switch (idx % 3) {
                case 0: { // (0, x1, 0), N_A(x1) = 0
                    const auto x1 = sample_norm_zero(ctx, rng, false);
                    if (x1) x = J->embed(1, *x1);
                    break;
                }
                case 1: { // (x0, x1, 0), N_A(x1) = 0, x1 commuting
                    const auto x1 = sample_norm_zero(ctx, rng, true);
                    if (x1) x = J->element(detail::sample_element(A, rng), *x1, A->zero());
                    break;
                }
                default: { // (x0, 0, x2), N_A(x2) = 0, x0 commuting
                    const auto x0 = sample_commuting(ctx, rng, false);
                    const auto x2 = sample_norm_zero(ctx, rng, false);
                    if (x0 && x2) x = J->element(*x0, A->zero(), *x2);
                    break;
                }
            }
            if (!x) return std::nullopt;
            return std::make_pair(adjoint_identity_holds(*x), tits_element_to_json(*x));
        };
        return run_sampled(id, info.anchor, Arm::Verify, fn, samples, workers);
    }

    if (id == "C7") {
        const Arm arm = ctx.mu_cubed_norm ? Arm::Verify : Arm::Falsify;
        SampleFn fn = [&](std::uint64_t idx) -> std::optional<std::pair<bool, Json>> {
            SampleRng rng(seed, "C7", idx);
            const auto x0 = sample_commuting(ctx, rng, false);
            const auto xi = sample_commuting(ctx, rng, true); // nonzero norm
            if (!x0 || !xi) return std::nullopt;
            const TitsElement x = idx % 2 == 0 ? J->element(*x0, *xi, A->zero())
                                               : J->element(*x0, A->zero(), *xi);
            return std::make_pair(adjoint_identity_holds(x), tits_element_to_json(x));
        };
        return run_sampled(id + (arm == Arm::Verify ? ".verify" : ".falsify"), info.anchor, arm,
                           fn, samples, workers);
    }

    if (id == "C8") {
        if (!ctx.central_simple) {
            IdentityResult row;
            row.id = id;
            row.anchor = info.anchor;
            row.vacuous = true;
            return row;
        }
        const Arm arm = ctx.mu_scalar ? Arm::Verify : Arm::Falsify;
        SampleFn fn = [&, arm](std::uint64_t idx) -> std::optional<std::pair<bool, Json>> {
            SampleRng rng(seed, "C8", idx);
            std::optional<TitsElement> x;
            if (arm == Arm::Verify) {
                x = detail::sample_tits_element(J, rng);
            } else {
                for (int a = 0; a < 64 && !x; ++a) {
                    AlgElement x0 = detail::sample_element(A, rng);
                    if (!commutes_with_mu(*J, x0))
                        x = J->element(std::move(x0), A->unit(), A->zero());
                }
            }
            if (!x) return std::nullopt;
            return std::make_pair(adjoint_identity_holds(*x), tits_element_to_json(*x));
        };
        return run_sampled(id + (arm == Arm::Verify ? ".verify" : ".falsify"), info.anchor, arm,
                           fn, samples, workers);
    }

    if (id == "C9") {
        SampleFn fn = [&](std::uint64_t idx) -> std::optional<std::pair<bool, Json>> {
            SampleRng rng(seed, "C9", idx);
            TitsElement x = ctx.mu_scalar
                                ? detail::sample_tits_element(J, rng)
                                : J->embed(0, detail::sample_element(A, rng));
            TitsElement y = detail::sample_tits_element(J, rng);
            if (!ctx.mu_scalar) {
                const int drop = static_cast<int>(idx % 3);
                y = J->element(drop == 0 ? A->zero() : y.slot(0),
                               drop == 1 ? A->zero() : y.slot(1),
                               drop == 2 ? A->zero() : y.slot(2));
            }
            return std::make_pair(composition_law_holds(J, x, y), pair_json(x, y));
        };
        return run_sampled(id, info.anchor, Arm::Verify, fn, samples, workers);
    }

    if (id == "C10") {
        SampleFn fn = [&](std::uint64_t idx) -> std::optional<std::pair<bool, Json>> {
            SampleRng rng(seed, "C10", idx);
            std::array<TitsElement, 3> v = {detail::sample_tits_element(J, rng),
                                            detail::sample_tits_element(J, rng),
                                            detail::sample_tits_element(J, rng)};
            const auto drop_slot = [&](int which, int slot) {
                const TitsElement& e = v[static_cast<std::size_t>(which)];
                v[static_cast<std::size_t>(which)] =
                    J->element(slot == 0 ? A->zero() : e.slot(0),
                               slot == 1 ? A->zero() : e.slot(1),
                               slot == 2 ? A->zero() : e.slot(2));
            };
            drop_slot(static_cast<int>(rng.below(3)), 1);
            drop_slot(static_cast<int>(rng.below(3)), 2);
            const bool held = tits_trace_form(tits_cross(v[0], v[1]), v[2]) ==
                              tits_trace_form(v[0], tits_cross(v[1], v[2]));
            return std::make_pair(held,
                                  Json::array({tits_element_to_json(v[0]),
                                               tits_element_to_json(v[1]),
                                               tits_element_to_json(v[2])}));
        };
        return run_sampled(id, info.anchor, Arm::Verify, fn, samples, workers);
    }

    throw UnknownIdentity("unknown identity id '" + id + "'");
}

} // namespace

// ---- public API ------------------------------------------------------------------

const std::vector<IdentityInfo>& identity_registry() { return registry_storage(); }

const IdentityInfo& identity_info(const std::string& id) {
    for (const auto& info : registry_storage())
        if (info.id == id) return info;
    throw UnknownIdentity("unknown identity id '" + id + "'");
}

std::vector<std::string> default_identity_ids(const DescriptorPtr&) {
    std::vector<std::string> out;
    for (const auto& info : registry_storage())
        if (info.coefficient_level) out.push_back(info.id);
    return out;
}

std::vector<std::string> default_identity_ids(const TitsPtr& target) {
    std::vector<std::string> out;
    for (const auto& info : registry_storage()) {
        if (info.coefficient_level) continue;
        // the conditional lemmas are statements about the standard placement
        if (target->variant() != Variant::LL && info.id[0] == 'C') continue;
        out.push_back(info.id);
    }
    return out;
}

VerificationReport run_identity_suite(const DescriptorPtr& target,
                                      const std::vector<std::string>& ids, std::int64_t samples,
                                      std::uint64_t seed, int workers) {
    VerificationReport rep;
    rep.algebra = target->str();
    rep.seed = seed;
    for (const auto& id : ids) {
        const IdentityInfo& info = identity_info(id);
        if (!info.coefficient_level)
            throw UnknownIdentity("identity " + id + " needs a Tits algebra target");
        rep.results.push_back(run_descriptor_identity(info, target, samples, seed, workers));
    }
    return rep;
}

VerificationReport run_identity_suite(const TitsPtr& target, const std::vector<std::string>& ids,
                                      std::int64_t samples, std::uint64_t seed, int workers) {
    VerificationReport rep;
    rep.algebra = target->str();
    rep.seed = seed;
    const TitsCtx ctx = make_tits_ctx(target, seed);
    for (const auto& id : ids) {
        const IdentityInfo& info = identity_info(id);
        rep.results.push_back(info.coefficient_level
                                  ? run_descriptor_identity(info, target->coeff(), samples, seed,
                                                            workers)
                                  : run_tits_identity(ctx, info, samples, workers));
    }
    return rep;
}

VerificationReport validate_degree3(const DescriptorPtr& desc, std::int64_t samples,
                                    std::uint64_t seed, int workers) {
    std::vector<std::string> ids;
    for (const auto& info : identity_registry())
        if (info.id[0] == 'D') ids.push_back(info.id);
    return run_identity_suite(desc, ids, samples, seed, workers);
}

} // namespace titsforge
