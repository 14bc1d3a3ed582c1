#include <pybind11/pybind11.h>

#include "titsforge/identities.hpp"
#include "titsforge/json_io.hpp"
#include "titsforge/scans.hpp"

namespace py = pybind11;
using namespace titsforge;

// Thin JSON-string surface mirroring the CLI verbs. Structured specs go in,
// reports come out; exact values never touch floating point.

namespace {

std::vector<std::string> split_ids(const std::string& csv) {
    std::vector<std::string> out;
    std::string cur;
    for (char c : csv) {
        if (c == ',') {
            if (!cur.empty()) out.push_back(cur);
            cur.clear();
        } else if (!isspace(static_cast<unsigned char>(c))) {
            cur += c;
        }
    }
    if (!cur.empty()) out.push_back(cur);
    return out;
}

std::string finalize(VerificationReport rep, const Json& spec) {
    rep.algebra = spec_fingerprint(spec);
    return rep.to_json().dump();
}

std::string py_validate(const std::string& spec_text, std::int64_t samples, std::uint64_t seed) {
    const Json spec = parse_json_text(spec_text);
    const auto loaded = algebra_spec_from_json(spec);
    if (const auto* desc = std::get_if<DescriptorPtr>(&loaded))
        return finalize(validate_degree3(*desc, samples, seed), spec);
    throw ValidationError("validate expects a coefficient-algebra spec");
}

std::string py_verify(const std::string& spec_text, const std::string& ids_csv,
                      std::int64_t samples, std::uint64_t seed) {
    const Json spec = parse_json_text(spec_text);
    const auto loaded = algebra_spec_from_json(spec);
    const auto ids = split_ids(ids_csv);
    if (const auto* desc = std::get_if<DescriptorPtr>(&loaded)) {
        return finalize(run_identity_suite(
                            *desc, ids.empty() ? default_identity_ids(*desc) : ids, samples, seed),
                        spec);
    }
    if (const auto* J = std::get_if<TitsPtr>(&loaded)) {
        return finalize(run_identity_suite(
                            *J, ids.empty() ? default_identity_ids(*J) : ids, samples, seed),
                        spec);
    }
    throw ValidationError("verify expects a coefficient or Tits algebra spec");
}

std::string py_tits_eval(const std::string& spec_text, const std::string& op,
                         const std::string& x_text, const std::string& y_text) {
    const Json spec = parse_json_text(spec_text);
    const TitsPtr J = tits_from_json(spec);
    const TitsElement x = tits_element_from_json(parse_json_text(x_text), J);
    auto need_y = [&] { return tits_element_from_json(parse_json_text(y_text), J); };
    Json out;
    if (op == "mul") out = tits_element_to_json(x * need_y());
    else if (op == "norm") out = element_to_json(tits_norm(x));
    else if (op == "trace") out = scalar_to_json(tits_trace(x));
    else if (op == "adjoint") out = tits_element_to_json(tits_adjoint(x));
    else if (op == "sharp") out = tits_element_to_json(tits_sharp(x, need_y()));
    else if (op == "cross") out = tits_element_to_json(tits_cross(x, need_y()));
    else if (op == "s") out = element_to_json(tits_s(x));
    else if (op == "trace-form") out = scalar_to_json(tits_trace_form(x, need_y()));
    else if (op == "u") out = tits_element_to_json(tits_u(x, need_y()));
    else if (op == "inverse") out = tits_element_to_json(tits_inverse_conditional(x));
    else throw ParseError("unknown op '" + op + "'");
    return out.dump();
}

std::string py_nucleus(const std::string& spec_text, const std::string& side) {
    const Json spec = parse_json_text(spec_text);
    const auto loaded = algebra_spec_from_json(spec);
    const GenericAlgebra g = std::visit(
        [](const auto& a) { return GenericAlgebra::wrap(a); }, loaded);
    Json out;
    out["algebra"] = spec_fingerprint(spec);
    const SubspaceBasis basis =
        side == "center" ? compute_center(g) : compute_nucleus(g, nucleus_side_from_name(side));
    out["side"] = side;
    out["ambient_dim"] = basis.ambient_dim;
    out["dimension"] = basis.dimension();
    Json rows = Json::array();
    for (const auto& v : basis.vectors) rows.push_back(coords_to_json(v));
    out["basis"] = std::move(rows);
    return out.dump();
}

std::string py_scan(const std::string& spec_text, const std::string& kind,
                    const std::string& mode, std::int64_t samples, std::uint64_t seed) {
    const Json spec = parse_json_text(spec_text);
    const auto loaded = algebra_spec_from_json(spec);
    ScanOptions opt;
    opt.mode = scan_mode_from_name(mode);
    opt.samples = samples;
    opt.seed = seed;
    if (kind == "division") {
        const GenericAlgebra g =
            std::visit([](const auto& a) { return GenericAlgebra::wrap(a); }, loaded);
        return finalize(division_scan(g, opt), spec);
    }
    const auto* J = std::get_if<TitsPtr>(&loaded);
    if (!J) throw ValidationError(kind + " scan expects a Tits algebra spec");
    if (kind == "anisotropy") return finalize(anisotropy_scan(*J, opt), spec);
    if (kind == "sharp-zero") return finalize(sharp_zero_search(*J, opt), spec);
    if (kind == "weak-jordan") return finalize(weak_jordan_check(*J, samples, seed), spec);
    throw ParseError("unknown scan kind '" + kind + "'");
}

std::string py_compare_cyclic(const std::string& spec_text, std::int64_t samples,
                              std::uint64_t seed) {
    const Json spec = parse_json_text(spec_text);
    const auto loaded = algebra_spec_from_json(spec);
    const auto* D = std::get_if<CyclicPtr>(&loaded);
    if (!D) throw ValidationError("compare-cyclic expects a cyclic algebra spec");
    const TitsPtr J = TitsAlgebra::make((*D)->field_ext(), (*D)->mu());
    return finalize(isometry_scan(*D, J, samples, seed), spec);
}

} // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Exact constructions J(A, mu) over Q and F_p with identity "
              "verification, nucleus computation and finite-field scans.";
    m.def("validate_algebra", &py_validate, py::arg("spec"), py::arg("samples") = 500,
          py::arg("seed") = 0,
          "Run the degree-3 identity checks on a coefficient-algebra spec; returns report JSON.");
    m.def("run_suite", &py_verify, py::arg("spec"), py::arg("ids") = "",
          py::arg("samples") = 500, py::arg("seed") = 0,
          "Run identity checks (comma-separated ids, empty = defaults); returns report JSON.");
    m.def("tits_eval", &py_tits_eval, py::arg("spec"), py::arg("op"), py::arg("x"),
          py::arg("y") = "", "Evaluate one operation in J(A, mu); returns the result as JSON.");
    m.def("nucleus", &py_nucleus, py::arg("spec"), py::arg("side") = "full",
          "Compute a nucleus (or 'center') basis; returns JSON.");
    m.def("scan", &py_scan, py::arg("spec"), py::arg("kind"), py::arg("mode") = "random",
          py::arg("samples") = 500, py::arg("seed") = 0,
          "Run an anisotropy / division / sharp-zero / weak-jordan scan; returns report JSON.");
    m.def("compare_cyclic", &py_compare_cyclic, py::arg("spec"), py::arg("samples") = 500,
          py::arg("seed") = 0,
          "Compare a cyclic algebra with J(K, mu) through the coordinate map; returns report JSON.");
    m.def("registry_ids", [] {
        py::list out;
        for (const auto& info : identity_registry()) out.append(info.id);
        return out;
    }, "All identity ids the verifier knows.");

    py::register_exception<Error>(m, "TitsForgeError");
}
