#include <fstream>
#include <iostream>

#include <CLI11.hpp>

#include "titsforge/identities.hpp"
#include "titsforge/json_io.hpp"
#include "titsforge/scans.hpp"

using namespace titsforge;

namespace {

struct CommonOpts {
    std::string algebra_path;
    std::string output_path;
    std::uint64_t seed = 0;
    std::int64_t samples = 500;
    int threads = 0;
    bool pretty = false;
    bool timing = false;
};

void add_common(CLI::App* cmd, CommonOpts& o, bool with_samples = true) {
    cmd->add_option("--algebra", o.algebra_path, "JSON spec of the algebra")->required();
    cmd->add_option("-o,--output", o.output_path, "write the result to a file");
    cmd->add_option("--seed", o.seed, "sampling seed (default 0)");
    if (with_samples) cmd->add_option("--samples", o.samples, "sample count (default 500)");
    cmd->add_option("--threads", o.threads,
                    "worker cap (default: TITS_FORGE_THREADS, else hardware)");
    cmd->add_flag("--pretty", o.pretty, "human-readable table instead of JSON");
    cmd->add_flag("--timing", o.timing, "include measured timing_ms in the JSON report");
}

std::string pretty_report(const VerificationReport& rep) {
    std::ostringstream os;
    os << "algebra " << rep.algebra << "  seed " << rep.seed << "\n";
    for (const auto& r : rep.results) {
        os << "  " << (r.satisfied() ? "ok  " : "FAIL") << "  " << r.id;
        for (std::size_t pad = r.id.size(); pad < 22; ++pad) os << ' ';
        os << " samples " << r.samples << "  passes " << r.passes << "  failures "
           << r.failures;
        if (r.vacuous) os << "  (vacuous)";
        if (!r.witness.is_null()) os << "\n        witness: " << r.witness.dump();
        os << "\n";
    }
    return os.str();
}

int write_output(const std::string& text, const CommonOpts& o) {
    if (o.output_path.empty()) {
        std::cout << text;
        return 0;
    }
    std::ofstream out(o.output_path);
    if (!out) {
        std::cerr << "error: cannot write " << o.output_path << "\n";
        return 3;
    }
    out << text;
    if (!out.good()) {
        std::cerr << "error: short write to " << o.output_path << "\n";
        return 3;
    }
    return 0;
}

int emit_report(VerificationReport rep, const Json& spec, const CommonOpts& o) {
    rep.algebra = spec_fingerprint(spec);
    const std::string text =
        o.pretty ? pretty_report(rep) : rep.to_json(o.timing).dump(2) + "\n";
    const int io = write_output(text, o);
    if (io != 0) return io;
    return rep.all_satisfied() ? 0 : 1;
}

Json load_inline_or_file(const std::string& value) {
    if (!value.empty() && value[0] == '@') return read_json_file(value.substr(1));
    return parse_json_text(value);
}

int run_verify(const CommonOpts& o, const std::string& ids_csv) {
    const Json spec = read_json_file(o.algebra_path);
    const auto loaded = algebra_spec_from_json(spec);
    std::vector<std::string> ids;
    {
        std::string cur;
        for (char c : ids_csv + ",") {
            if (c == ',') {
                if (!cur.empty()) ids.push_back(cur);
                cur.clear();
            } else if (!isspace(static_cast<unsigned char>(c))) {
                cur += c;
            }
        }
    }
    VerificationReport rep;
    if (const auto* desc = std::get_if<DescriptorPtr>(&loaded)) {
        rep = run_identity_suite(*desc, ids.empty() ? default_identity_ids(*desc) : ids,
                                 o.samples, o.seed, o.threads);
    } else if (const auto* J = std::get_if<TitsPtr>(&loaded)) {
        rep = run_identity_suite(*J, ids.empty() ? default_identity_ids(*J) : ids, o.samples,
                                 o.seed, o.threads);
    } else {
        std::cerr << "error: verify expects a coefficient or Tits algebra spec\n";
        return 2;
    }
    return emit_report(std::move(rep), spec, o);
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact generalized first Tits constructions: build, evaluate, verify, scan"};
    app.require_subcommand(1);

    CommonOpts validate_o, eval_o, verify_o, nucleus_o, aniso_o, division_o, sharp_o, cyclic_o;
    std::string ids_csv, side = "full", mode_aniso = "random", mode_div = "random",
                mode_sharp = "random", op, x_text, y_text;

    auto* validate = app.add_subcommand("algebra-validate",
                                        "build a coefficient algebra and run the degree-3 checks");
    add_common(validate, validate_o);

    auto* eval = app.add_subcommand("tits-eval", "evaluate one operation in J(A, mu)");
    add_common(eval, eval_o, false);
    eval->add_option("--op", op,
                     "mul|norm|trace|adjoint|sharp|cross|s|trace-form|u|inverse")
        ->required();
    eval->add_option("--x", x_text, "element as JSON text or @file")->required();
    eval->add_option("--y", y_text, "second element for binary ops");

    auto* verify = app.add_subcommand("verify", "run identity suites against an algebra");
    add_common(verify, verify_o);
    verify->add_option("--ids", ids_csv, "comma-separated identity ids (default: all that apply)");

    auto* nucleus = app.add_subcommand("nucleus", "compute nucleus or center subspaces");
    add_common(nucleus, nucleus_o, false);
    nucleus->add_option("--side", side, "left|middle|right|full|center (default full)");

    auto* aniso = app.add_subcommand("scan-anisotropy", "search for nonzero x with N(x) = 0");
    add_common(aniso, aniso_o);
    aniso->add_option("--mode", mode_aniso, "exhaustive|random (default random)");

    auto* division = app.add_subcommand("scan-division",
                                        "search for x with singular left or right multiplication");
    add_common(division, division_o);
    division->add_option("--mode", mode_div, "exhaustive|random (default random)");

    auto* sharp = app.add_subcommand("scan-sharp-zero", "search for nonzero x with x^# = 0");
    add_common(sharp, sharp_o);
    sharp->add_option("--mode", mode_sharp, "exhaustive|random (default random)");

    auto* cyclic = app.add_subcommand("compare-cyclic",
                                      "compare a cyclic algebra with J(K, mu) via the coordinate map");
    add_common(cyclic, cyclic_o);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        if (*validate) {
            const Json spec = read_json_file(validate_o.algebra_path);
            const auto loaded = algebra_spec_from_json(spec);
            const auto* desc = std::get_if<DescriptorPtr>(&loaded);
            if (!desc) {
                std::cerr << "error: algebra-validate expects a coefficient-algebra spec\n";
                return 2;
            }
            return emit_report(validate_degree3(*desc, validate_o.samples, validate_o.seed,
                                                validate_o.threads),
                               spec, validate_o);
        }
        if (*eval) {
            const Json spec = read_json_file(eval_o.algebra_path);
            const TitsPtr J = tits_from_json(spec);
            const TitsElement x = tits_element_from_json(load_inline_or_file(x_text), J);
            auto need_y = [&] {
                if (y_text.empty()) throw ParseError("op '" + op + "' needs --y");
                return tits_element_from_json(load_inline_or_file(y_text), J);
            };
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
            else {
                std::cerr << "error: unknown op '" << op << "'\n";
                return 2;
            }
            return write_output(out.dump(2) + "\n", eval_o);
        }
        if (*verify) return run_verify(verify_o, ids_csv);
        if (*nucleus) {
            const Json spec = read_json_file(nucleus_o.algebra_path);
            const auto loaded = algebra_spec_from_json(spec);
            const GenericAlgebra g =
                std::visit([](const auto& a) { return GenericAlgebra::wrap(a); }, loaded);
            const SubspaceBasis basis = side == "center"
                                            ? compute_center(g)
                                            : compute_nucleus(g, nucleus_side_from_name(side));
            Json out;
            out["algebra"] = spec_fingerprint(spec);
            out["side"] = side;
            out["ambient_dim"] = basis.ambient_dim;
            out["dimension"] = basis.dimension();
            Json rows = Json::array();
            for (const auto& v : basis.vectors) rows.push_back(coords_to_json(v));
            out["basis"] = std::move(rows);
            return write_output(out.dump(2) + "\n", nucleus_o);
        }
        auto run_scan = [&](const CommonOpts& o, const std::string& mode,
                            const std::string& kind) -> int {
            const Json spec = read_json_file(o.algebra_path);
            const auto loaded = algebra_spec_from_json(spec);
            ScanOptions opt;
            opt.mode = scan_mode_from_name(mode);
            opt.samples = o.samples;
            opt.seed = o.seed;
            opt.workers = o.threads;
            if (kind == "division") {
                const GenericAlgebra g =
                    std::visit([](const auto& a) { return GenericAlgebra::wrap(a); }, loaded);
                return emit_report(division_scan(g, opt), spec, o);
            }
            const auto* J = std::get_if<TitsPtr>(&loaded);
            if (!J) {
                std::cerr << "error: this scan expects a Tits algebra spec\n";
                return 2;
            }
            return emit_report(kind == "anisotropy" ? anisotropy_scan(*J, opt)
                                                    : sharp_zero_search(*J, opt),
                               spec, o);
        };
        if (*aniso) return run_scan(aniso_o, mode_aniso, "anisotropy");
        if (*division) return run_scan(division_o, mode_div, "division");
        if (*sharp) return run_scan(sharp_o, mode_sharp, "sharp-zero");
        if (*cyclic) {
            const Json spec = read_json_file(cyclic_o.algebra_path);
            const auto loaded = algebra_spec_from_json(spec);
            const auto* D = std::get_if<CyclicPtr>(&loaded);
            if (!D) {
                std::cerr << "error: compare-cyclic expects a cyclic algebra spec\n";
                return 2;
            }
            const TitsPtr J = TitsAlgebra::make((*D)->field_ext(), (*D)->mu());
            return emit_report(isometry_scan(*D, J, cyclic_o.samples, cyclic_o.seed), spec,
                               cyclic_o);
        }
    } catch (const ParseError& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return 2;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
