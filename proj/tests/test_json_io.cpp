#include <doctest.h>

#include "titsforge/json_io.hpp"

using namespace titsforge;

TEST_CASE("field round trip") {
    for (const FieldSpec& f : {FieldSpec::rationals(), FieldSpec::prime(7)})
        CHECK(field_from_json(field_to_json(f)) == f);
    CHECK_THROWS_AS(field_from_json(parse_json_text(R"({"kind":"Fp","p":3})")),
                    ValidationError);
    CHECK_THROWS_AS(field_from_json(parse_json_text(R"({"kind":"R"})")), ParseError);
}

TEST_CASE("scalar and element round trips") {
    const FieldSpec q = FieldSpec::rationals();
    const Scalar s = Scalar::rational(-3, 2);
    CHECK(scalar_from_json(scalar_to_json(s), q) == s);
    CHECK(scalar_to_json(s).dump() == "\"-3/2\"");
    CHECK(scalar_to_json(Scalar::residue(4, 5)).dump() == "4");

    auto E = AlgebraDescriptor::split_etale(q);
    const AlgElement x = E->element({Scalar::rational(1, 2), Scalar::rational(-2),
                                     Scalar::rational(0)});
    CHECK(element_from_json(element_to_json(x), E) == x);
}

TEST_CASE("algebra spec round trips") {
    const std::vector<std::string> specs = {
        R"({"field":{"kind":"Q"},"construction":"split_etale"})",
        R"({"field":{"kind":"Fp","p":5},"construction":"mat3"})",
        R"({"field":{"kind":"Fp","p":5},"construction":"cubic_field"})",
    };
    for (const auto& text : specs) {
        const DescriptorPtr d = algebra_from_json(parse_json_text(text));
        const DescriptorPtr d2 = algebra_from_json(algebra_to_json(d));
        CHECK(d2->tag() == d->tag());
        CHECK(d2->field() == d->field());
        CHECK(algebra_to_json(d2) == algebra_to_json(d));
    }
    // the automatic F_125 spec serializes with its minimal polynomial and sigma
    const DescriptorPtr k =
        algebra_from_json(parse_json_text(R"({"field":{"kind":"Fp","p":5},"construction":"cubic_field"})"));
    const Json out = algebra_to_json(k);
    CHECK(out.contains("minpoly"));
    CHECK(out.contains("sigma"));
    const DescriptorPtr k2 = algebra_from_json(out);
    CHECK(k2->sigma().times(k2->sigma()).times(k2->sigma()).is_identity());
}

TEST_CASE("cyclic_assoc spec") {
    const auto text = R"({"construction":"cyclic_assoc",
                          "K":{"field":{"kind":"Fp","p":5},"construction":"cubic_field"},
                          "c":2})";
    const DescriptorPtr d = algebra_from_json(parse_json_text(text));
    CHECK(d->tag() == AlgebraTag::CyclicAssoc);
    CHECK(d->dim() == 9);
    const DescriptorPtr d2 = algebra_from_json(algebra_to_json(d));
    CHECK(algebra_to_json(d2) == algebra_to_json(d));
}

TEST_CASE("tits spec round trip and validation failures") {
    const auto text = R"({"A":{"field":{"kind":"Q"},"construction":"split_etale"},
                          "mu":["1","2","4"],"variant":"ll"})";
    const TitsPtr J = tits_from_json(parse_json_text(text));
    CHECK(J->mu_powers_independent());
    CHECK(tits_to_json(tits_from_json(tits_to_json(J))) == tits_to_json(J));

    const auto bad_mu = R"({"A":{"field":{"kind":"Q"},"construction":"split_etale"},
                            "mu":["1","0","2"]})";
    CHECK_THROWS_AS(tits_from_json(parse_json_text(bad_mu)), ValidationError);
    const auto char3 = R"({"field":{"kind":"Fp","p":3},"construction":"mat3"})";
    CHECK_THROWS_AS(algebra_from_json(parse_json_text(char3)), ValidationError);
    CHECK_THROWS_AS(parse_json_text("{nope"), ParseError);
}

TEST_CASE("cyclic spec round trip") {
    const auto text = R"({"K":{"field":{"kind":"Fp","p":5},"construction":"cubic_field"},
                          "mu":[0,1,0]})";
    const CyclicPtr D = cyclic_from_json(parse_json_text(text));
    CHECK_FALSE(D->mu_in_base_field());
    CHECK(cyclic_to_json(cyclic_from_json(cyclic_to_json(D))) == cyclic_to_json(D));
}

TEST_CASE("spec dispatch") {
    CHECK(std::holds_alternative<DescriptorPtr>(algebra_spec_from_json(
        parse_json_text(R"({"field":{"kind":"Q"},"construction":"mat3"})"))));
    CHECK(std::holds_alternative<TitsPtr>(algebra_spec_from_json(parse_json_text(
        R"({"A":{"field":{"kind":"Q"},"construction":"split_etale"},"mu":["1","2","4"]})"))));
    CHECK(std::holds_alternative<CyclicPtr>(algebra_spec_from_json(parse_json_text(
        R"({"K":{"field":{"kind":"Fp","p":5},"construction":"cubic_field"},"mu":[0,1,0]})"))));
    CHECK_THROWS_AS(algebra_spec_from_json(parse_json_text("{}")), ParseError);
}

TEST_CASE("fingerprints are stable and spec-sensitive") {
    const Json a = parse_json_text(R"({"field":{"kind":"Q"},"construction":"mat3"})");
    const Json b = parse_json_text(R"({"field":{"kind":"Q"},"construction":"split_etale"})");
    CHECK(spec_fingerprint(a) == spec_fingerprint(a));
    CHECK(spec_fingerprint(a) != spec_fingerprint(b));
    CHECK(spec_fingerprint(a).size() == 16);
}

TEST_CASE("report JSON carries the canonical key order") {
    VerificationReport rep;
    rep.algebra = "abc";
    rep.seed = 7;
    IdentityResult row;
    row.id = "D1";
    row.anchor = "x";
    row.samples = 3;
    row.passes = 3;
    rep.results.push_back(row);
    const std::string dumped = rep.to_json().dump();
    CHECK(dumped ==
          R"({"algebra":"abc","seed":7,"results":[{"id":"D1","anchor":"x","samples":3,)"
          R"("passes":3,"failures":0,"witness":null,"vacuous":false}],"timing_ms":null})");
    rep.timing_ms = 12;
    CHECK(rep.to_json(true).dump().find("\"timing_ms\":12") != std::string::npos);
    CHECK(rep.to_json(false).dump().find("\"timing_ms\":null") != std::string::npos);
}
