#include "titsforge/json_io.hpp"

#include <fstream>
#include <sstream>

#include "titsforge/rng.hpp"

namespace titsforge {

Json field_to_json(const FieldSpec& f) {
    Json j;
    if (f.is_rational()) {
        j["kind"] = "Q";
    } else {
        j["kind"] = "Fp";
        j["p"] = f.modulus();
    }
    return j;
}

FieldSpec field_from_json(const Json& j) {
    if (!j.is_object() || !j.contains("kind"))
        throw ParseError("field spec needs a \"kind\"");
    const std::string kind = j.at("kind").get<std::string>();
    if (kind == "Q") return FieldSpec::rationals();
    if (kind == "Fp") {
        if (!j.contains("p")) throw ParseError("prime field spec needs \"p\"");
        const std::int64_t p = j.at("p").get<std::int64_t>();
        if (p == 2 || p == 3)
            throw ValidationError("characteristic " + std::to_string(p) + " not supported");
        return FieldSpec::prime(p);
    }
    throw ParseError("unknown field kind '" + kind + "'");
}

Scalar scalar_from_json(const Json& j, const FieldSpec& spec) {
    if (spec.is_prime()) {
        if (j.is_number_integer()) return Scalar::residue(j.get<std::int64_t>(), spec.modulus());
        if (j.is_string()) return Scalar::parse(spec, j.get<std::string>());
        throw ParseError("prime-field scalar must be an integer");
    }
    if (j.is_string()) return Scalar::parse(spec, j.get<std::string>());
    if (j.is_number_integer()) return Scalar::from_int(spec, j.get<std::int64_t>());
    throw ParseError("rational scalar must be text like \"-3/2\" or an integer");
}

std::vector<Scalar> coords_from_json(const Json& j, const FieldSpec& spec, int dim) {
    if (!j.is_array() || static_cast<int>(j.size()) != dim)
        throw ParseError("expected a coordinate array of length " + std::to_string(dim));
    std::vector<Scalar> out;
    out.reserve(static_cast<std::size_t>(dim));
    for (const auto& entry : j) out.push_back(scalar_from_json(entry, spec));
    return out;
}

AlgElement element_from_json(const Json& j, const DescriptorPtr& desc) {
    return desc->element(coords_from_json(j, desc->field(), desc->dim()));
}

TitsElement tits_element_from_json(const Json& j, const TitsPtr& J) {
    if (!j.is_array() || j.size() != 3)
        throw ParseError("a Tits element is three coordinate arrays");
    return J->element(element_from_json(j[0], J->coeff()), element_from_json(j[1], J->coeff()),
                      element_from_json(j[2], J->coeff()));
}

CyclicElement cyclic_element_from_json(const Json& j, const CyclicPtr& D) {
    if (!j.is_array() || j.size() != 3)
        throw ParseError("a cyclic-algebra element is three coordinate arrays");
    return D->element(element_from_json(j[0], D->field_ext()),
                      element_from_json(j[1], D->field_ext()),
                      element_from_json(j[2], D->field_ext()));
}

Json algebra_to_json(const DescriptorPtr& desc) {
    Json j;
    j["field"] = field_to_json(desc->field());
    j["construction"] = tag_name(desc->tag());
    switch (desc->tag()) {
        case AlgebraTag::SplitEtale:
        case AlgebraTag::Mat3:
            break;
        case AlgebraTag::CyclicCubicField: {
            j["minpoly"] = coords_to_json(desc->minpoly());
            Json rows = Json::array();
            for (int i = 0; i < desc->dim(); ++i) {
                Json row = Json::array();
                for (int k = 0; k < desc->dim(); ++k)
                    row.push_back(scalar_to_json(desc->sigma().at(i, k)));
                rows.push_back(std::move(row));
            }
            j["sigma"] = std::move(rows);
            break;
        }
        case AlgebraTag::CyclicAssoc:
            j["K"] = algebra_to_json(desc->underlying_field());
            j["c"] = scalar_to_json(desc->cyclic_constant());
            break;
    }
    return j;
}

DescriptorPtr algebra_from_json(const Json& j) {
    if (!j.is_object() || !j.contains("construction"))
        throw ParseError("algebra spec needs a \"construction\"");
    const std::string kind = j.at("construction").get<std::string>();
    if (kind == "cyclic_assoc") {
        if (!j.contains("K") || !j.contains("c"))
            throw ParseError("cyclic_assoc spec needs \"K\" and \"c\"");
        const DescriptorPtr K = algebra_from_json(j.at("K"));
        return AlgebraDescriptor::assoc_cyclic(K, scalar_from_json(j.at("c"), K->field()));
    }
    const FieldSpec field = field_from_json(j.at("field"));
    if (kind == "split_etale") return AlgebraDescriptor::split_etale(field);
    if (kind == "mat3") return AlgebraDescriptor::mat3(field);
    if (kind == "cubic_field") {
        if (!j.contains("minpoly") && !j.contains("sigma")) {
            if (field.is_rational())
                throw ParseError("cubic_field over Q needs \"minpoly\" and \"sigma\"");
            return AlgebraDescriptor::cubic_field(field);
        }
        if (!j.contains("minpoly") || !j.contains("sigma"))
            throw ParseError("explicit cubic_field needs both \"minpoly\" and \"sigma\"");
        std::vector<Scalar> minpoly;
        for (const auto& c : j.at("minpoly")) minpoly.push_back(scalar_from_json(c, field));
        const Json& rows = j.at("sigma");
        if (!rows.is_array() || rows.size() != 3)
            throw ParseError("sigma must be a 3x3 matrix (rows of basis images)");
        ScalarMatrix sigma(3, 3, field);
        for (int i = 0; i < 3; ++i) {
            if (!rows[static_cast<std::size_t>(i)].is_array() || rows[static_cast<std::size_t>(i)].size() != 3)
                throw ParseError("sigma must be a 3x3 matrix (rows of basis images)");
            for (int k = 0; k < 3; ++k)
                sigma.at(i, k) = scalar_from_json(rows[static_cast<std::size_t>(i)][static_cast<std::size_t>(k)], field);
        }
        return AlgebraDescriptor::cubic_field(field, std::move(minpoly), std::move(sigma));
    }
    throw ParseError("unknown construction '" + kind + "'");
}

Json tits_to_json(const TitsPtr& J) {
    Json j;
    j["A"] = algebra_to_json(J->coeff());
    j["mu"] = element_to_json(J->mu());
    j["variant"] = variant_name(J->variant());
    return j;
}

TitsPtr tits_from_json(const Json& j) {
    if (!j.is_object() || !j.contains("A") || !j.contains("mu"))
        throw ParseError("Tits spec needs \"A\" and \"mu\"");
    const DescriptorPtr A = algebra_from_json(j.at("A"));
    const AlgElement mu = element_from_json(j.at("mu"), A);
    const Variant v = j.contains("variant")
                          ? variant_from_name(j.at("variant").get<std::string>())
                          : Variant::LL;
    return TitsAlgebra::make(A, mu, v);
}

Json cyclic_to_json(const CyclicPtr& D) {
    Json j;
    j["K"] = algebra_to_json(D->field_ext());
    j["mu"] = element_to_json(D->mu());
    return j;
}

CyclicPtr cyclic_from_json(const Json& j) {
    if (!j.is_object() || !j.contains("K") || !j.contains("mu"))
        throw ParseError("cyclic spec needs \"K\" and \"mu\"");
    const DescriptorPtr K = algebra_from_json(j.at("K"));
    return CyclicAlgebra::make(K, element_from_json(j.at("mu"), K));
}

std::string spec_fingerprint(const Json& spec) {
    const std::uint64_t h = fnv1a(spec.dump());
    char buf[17];
    std::snprintf(buf, sizeof(buf), "%016llx", static_cast<unsigned long long>(h));
    return std::string(buf);
}

LoadedAlgebra algebra_spec_from_json(const Json& j) {
    if (!j.is_object()) throw ParseError("algebra spec must be a JSON object");
    if (j.contains("construction")) return algebra_from_json(j);
    if (j.contains("A")) return tits_from_json(j);
    if (j.contains("K")) return cyclic_from_json(j);
    throw ParseError("spec is neither a coefficient algebra (\"construction\"), "
                     "a Tits algebra (\"A\"), nor a cyclic algebra (\"K\")");
}

Json parse_json_text(const std::string& text) {
    try {
        return Json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw ParseError(e.what());
    }
}

Json read_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return parse_json_text(ss.str());
}

LoadedAlgebra load_spec_file(const std::string& path) {
    return algebra_spec_from_json(read_json_file(path));
}

} // namespace titsforge
