#include <doctest.h>

#include "titsforge/detail/sampling.hpp"
#include "titsforge/identities.hpp"
#include "titsforge/tits.hpp"

using namespace titsforge;

namespace {

const FieldSpec Q = FieldSpec::rationals();

AlgElement qvec(const DescriptorPtr& d, std::initializer_list<long> vals) {
    std::vector<Scalar> out;
    for (long v : vals) out.push_back(Scalar::from_int(d->field(), v));
    return d->element(std::move(out));
}

TitsPtr make_etale_j(std::initializer_list<long> mu_vals = {1, 2, 4}) {
    auto E = AlgebraDescriptor::split_etale(Q);
    return TitsAlgebra::make(E, qvec(E, mu_vals));
}

} // namespace

TEST_CASE("construction validates mu") {
    auto E = AlgebraDescriptor::split_etale(Q);
    CHECK_THROWS_AS(TitsAlgebra::make(E, qvec(E, {1, 0, 2})), ValidationError);
    auto J = make_etale_j();
    CHECK(J->mu() * J->mu_inverse() == J->coeff()->unit());
    CHECK_FALSE(J->mu_in_base_field());
    CHECK(J->mu_powers_independent());
    auto J2 = TitsAlgebra::make(E, qvec(E, {2, 2, 2}));
    CHECK(J2->mu_in_base_field());
    CHECK_FALSE(J2->mu_powers_independent());
}

TEST_CASE("unitality and the basic products") {
    auto J = make_etale_j();
    const auto& E = J->coeff();
    for (std::uint64_t i = 0; i < 100; ++i) {
        SampleRng rng(29, "unital", i);
        const TitsElement x = detail::sample_tits_element(J, rng);
        CHECK(J->unit() * x == x);
        CHECK(x * J->unit() == x);
    }
    const TitsElement e1 = J->embed(1, E->unit());
    CHECK(e1 * e1 == J->embed(2, J->mu())); // third slot mu (1 x 1) = mu
    auto J1 = TitsAlgebra::make(E, E->unit());
    const TitsElement f1 = J1->embed(1, E->unit());
    const TitsElement f2 = J1->embed(2, E->unit());
    CHECK(f1 * f2 == J1->unit()); // first slot bar(1) = 1 when mu = 1
}

TEST_CASE("norm, trace and adjoint on the distinguished elements") {
    auto J = make_etale_j();
    const auto& E = J->coeff();
    CHECK(tits_norm(J->unit()) == E->unit());
    CHECK(tits_norm(J->embed(1, E->unit())) == J->mu());
    const AlgElement x0 = qvec(E, {2, -1, 3});
    CHECK(tits_norm(J->embed(0, x0)) == E->scalar_element(norm(x0)));
    CHECK(tits_trace(J->unit()).str() == "3");
    CHECK(tits_trace(J->element(E->zero(), x0, x0)).is_zero());
    CHECK(tits_adjoint(J->unit()) == J->unit());
    CHECK(tits_adjoint(J->embed(1, E->unit())) == J->embed(2, J->mu()));
    // (x0, 1, 0)^# = (x0^#, -x0, mu)
    const TitsElement y = J->element(x0, E->unit(), E->zero());
    CHECK(tits_adjoint(y) == J->element(adjoint(x0), -x0, J->mu()));
}

TEST_CASE("sharp bilinear examples") {
    auto J = make_etale_j();
    const auto& E = J->coeff();
    const TitsElement one = J->unit();
    CHECK(tits_sharp(one, one) == Scalar::rational(2) * one);
    // (0,1,0) # (0,0,1) = (-1, 0, 0)
    CHECK(tits_sharp(J->embed(1, E->unit()), J->embed(2, E->unit())) == -one);
    for (std::uint64_t i = 0; i < 100; ++i) {
        SampleRng rng(31, "sharp1", i);
        const TitsElement x = detail::sample_tits_element(J, rng);
        CHECK(tits_sharp(x, one) == tits_trace(x) * one - x);
        CHECK(tits_cross(x, x) == tits_adjoint(x));
    }
}

TEST_CASE("bilinear trace") {
    auto J = make_etale_j();
    const auto& E = J->coeff();
    CHECK(tits_trace_form(J->unit(), J->unit()).str() == "3");
    CHECK(tits_trace_form(J->embed(1, E->unit()), J->embed(2, E->unit())).str() == "3");
    for (std::uint64_t i = 0; i < 200; ++i) {
        SampleRng rng(37, "tform", i);
        const TitsElement x = detail::sample_tits_element(J, rng);
        const TitsElement y = detail::sample_tits_element(J, rng);
        CHECK(tits_trace_form(x, y) == tits_trace(x * y));
    }
}

TEST_CASE("S map") {
    auto J = make_etale_j();
    const auto& E = J->coeff();
    CHECK(as_scalar(tits_s(J->unit())).value().str() == "3");
    for (std::uint64_t i = 0; i < 100; ++i) {
        SampleRng rng(41, "smap", i);
        const TitsElement x = detail::sample_tits_element(J, rng);
        // S((x0,x1,x2)) = S_A(x0) - T_A(x1 x2)
        const Scalar expect = s_quadratic(x.slot(0)) - reduced_trace(x.slot(1) * x.slot(2));
        CHECK(tits_s(x) == E->scalar_element(expect));
    }
}

TEST_CASE("U operators") {
    auto J = make_etale_j();
    const auto& E = J->coeff();
    const Scalar half = small_inverse(2, Q);
    for (std::uint64_t i = 0; i < 200; ++i) {
        SampleRng rng(43, "uop", i);
        const TitsElement x = detail::sample_tits_element(J, rng);
        const TitsElement y = detail::sample_tits_element(J, rng);
        CHECK(tits_u(J->unit(), y) == y);
        CHECK(half * tits_u_bilinear(x, y, J->unit()) == x * y);
    }
    // U_{(x0,0,0)}(y) = (U_{x0}(y0), x0^# y1, y2 x0^#)
    for (std::uint64_t i = 0; i < 50; ++i) {
        SampleRng rng(47, "uslot", i);
        const AlgElement x0 = detail::sample_element(E, rng);
        const TitsElement x = J->embed(0, x0);
        const TitsElement y = detail::sample_tits_element(J, rng);
        CHECK(tits_u(x, y) == J->element(u_operator(x0, y.slot(0)), adjoint(x0) * y.slot(1),
                                         y.slot(2) * adjoint(x0)));
    }
}

TEST_CASE("norm homogeneity") {
    auto J = make_etale_j();
    for (std::uint64_t i = 0; i < 100; ++i) {
        SampleRng rng(53, "homog", i);
        const TitsElement x = detail::sample_tits_element(J, rng);
        const Scalar a = sample_scalar(Q, rng);
        CHECK(tits_norm(a * x) == (a * a * a) * tits_norm(x));
    }
}

TEST_CASE("classical regime: mu in F recovers the Jordan identities") {
    auto E = AlgebraDescriptor::split_etale(Q);
    auto J = TitsAlgebra::make(E, Scalar::rational(2) * E->unit());
    REQUIRE(J->mu_in_base_field());
    for (std::uint64_t i = 0; i < 200; ++i) {
        SampleRng rng(59, "classical", i);
        const TitsElement x = detail::sample_tits_element(J, rng);
        const TitsElement y = detail::sample_tits_element(J, rng);
        const TitsElement xs = tits_adjoint(x);
        const TitsElement n1 = J->embed(0, tits_norm(x));
        CHECK(x * xs == n1);
        CHECK(xs * x == n1);
        CHECK(tits_adjoint(xs) == scale_by_coeff(tits_norm(x), x));
        const AlgElement nx = tits_norm(x);
        CHECK(tits_norm(tits_u(x, y)) == nx * nx * tits_norm(y));
        CHECK(x * y == y * x); // the classical construction is commutative
    }
}

TEST_CASE("mu outside F: the canonical witness breaks x x^# = N(x) 1") {
    auto J = make_etale_j({1, 2, 4});
    const TitsElement w = J->embed(1, J->coeff()->unit());
    const TitsElement lhs = w * tits_adjoint(w);
    CHECK(lhs != J->embed(0, tits_norm(w)));
}

TEST_CASE("positional variants on the matrix algebra") {
    auto M = AlgebraDescriptor::mat3(Q);
    std::vector<Scalar> mu_coords(9, Scalar::rational(0));
    mu_coords[0] = Scalar::rational(1);
    mu_coords[4] = Scalar::rational(2);
    mu_coords[8] = Scalar::rational(3);
    const AlgElement mu = M->element(mu_coords);
    for (Variant v : {Variant::LL, Variant::LR, Variant::RL, Variant::RR}) {
        auto J = TitsAlgebra::make(M, mu, v);
        CHECK(J->variant() == v);
        for (std::uint64_t i = 0; i < 60; ++i) {
            SampleRng rng(61, "variant", i);
            const TitsElement x = detail::sample_tits_element(J, rng);
            const TitsElement y = detail::sample_tits_element(J, rng);
            CHECK(J->unit() * x == x);
            CHECK(x * J->unit() == x);
            CHECK(tits_sharp(x, J->unit()) == tits_trace(x) * J->unit() - x);
            CHECK(tits_sharp(x, y) == tits_sharp_closed_form(x, y));
        }
    }
    // distinct variants really multiply differently for noncentral mu:
    // (E12 + E23)^# = E13, and mu E13 != E13 mu
    auto Jll = TitsAlgebra::make(M, mu, Variant::LL);
    auto Jrr = TitsAlgebra::make(M, mu, Variant::RR);
    const AlgElement a = M->basis_element(1) + M->basis_element(5);
    const TitsElement xl = Jll->embed(1, a);
    const TitsElement xr = Jrr->embed(1, a);
    CHECK((xl * xl).slot(2) != (xr * xr).slot(2));
}

TEST_CASE("commutative coefficients collapse the variants") {
    auto E = AlgebraDescriptor::split_etale(Q);
    auto J = TitsAlgebra::make(E, qvec(E, {1, 2, 4}), Variant::RR);
    CHECK(J->variant() == Variant::LL);
}

TEST_CASE("conditional inverse") {
    auto J = make_etale_j({1, 2, 4});
    const auto& E = J->coeff();
    // the A-case
    const TitsElement a = J->embed(0, qvec(E, {1, 2, 3}));
    const TitsElement ai = tits_inverse_conditional(a);
    CHECK(a * ai == J->unit());
    CHECK(ai == J->embed(0, inverse(qvec(E, {1, 2, 3}))));
    // (1, 0, x2) with N_A(x2) = 0, x2 nonzero
    const TitsElement b = J->element(E->unit(), E->zero(), qvec(E, {0, 1, 1}));
    const TitsElement bi = tits_inverse_conditional(b);
    CHECK(b * bi == J->unit());
    CHECK(bi * b == J->unit());
    // (0,1,0) satisfies neither pattern
    CHECK_THROWS_AS(tits_inverse_conditional(J->embed(1, E->unit())), HypothesisNotSatisfied);
    // norm-zero instance inside the pattern
    const TitsElement c = J->element(qvec(E, {0, 1, 1}), E->zero(), qvec(E, {0, 1, 1}));
    CHECK_THROWS_AS(tits_inverse_conditional(c), NotInvertible);
    // parent mismatch
    auto J2 = make_etale_j({1, 2, 3});
    CHECK_THROWS_AS(a * J2->unit(), SpecMismatch);
}

TEST_CASE("identity suite passes on J(Mat3(F5), mu = E11 + 2 E22 + 3 E33)") {
    auto M = AlgebraDescriptor::mat3(FieldSpec::prime(5));
    std::vector<Scalar> mu_coords(9, Scalar::residue(0, 5));
    mu_coords[0] = Scalar::residue(1, 5);
    mu_coords[4] = Scalar::residue(2, 5);
    mu_coords[8] = Scalar::residue(3, 5);
    auto J = TitsAlgebra::make(M, M->element(mu_coords));
    const auto rep = run_identity_suite(J, {"J1", "J2", "J3", "J4", "J5", "J6", "J7"}, 300, 0);
    for (const auto& r : rep.results) {
        CHECK(r.failures == 0);
        CHECK(r.samples == 300);
    }
}
