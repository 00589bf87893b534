#include "cli.hpp"

#include <cstdlib>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "braidfoq/error.hpp"
#include "braidfoq/fusion.hpp"
#include "braidfoq/presentation.hpp"
#include "braidfoq/suite.hpp"
#include "braidfoq/transform.hpp"
#include "braidfoq/verify.hpp"

namespace braidfoq::cli {

namespace {

struct IoError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct Settings {
    std::string field;
    int bound = 3;
    std::size_t row_cap = MembershipOptions::kDefaultRowCap;
    std::uint64_t seed = 42;
    unsigned workers = 1;
    std::string out;
    std::string emit_cert;
    std::string config;
};

json read_json(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw IoError("cannot open " + path);
    try {
        return json::parse(in);
    } catch (const json::exception& e) {
        throw ParseError(path + ": " + e.what());
    }
}

void write_file(const std::string& path, const std::string& text) {
    std::ofstream f(path);
    if (!f) throw IoError("cannot write " + path);
    f << text;
}

std::pair<int, int> parse_label(const std::string& text) {
    const auto comma = text.find(',');
    if (comma == std::string::npos) throw ParseError("label must be k,l: " + text);
    try {
        return {std::stoi(text.substr(0, comma)), std::stoi(text.substr(comma + 1))};
    } catch (const std::exception&) {
        throw ParseError("label must be k,l: " + text);
    }
}

OmegaData load_omega(const std::string& path, const Settings& s) {
    json j = read_json(path);
    if (!j.contains("field")) {
        if (s.field.empty()) throw ParseError(path + ": no field given (use --field)");
        j["field"] = s.field;
    }
    OmegaData data = omega_from_json(j);
    if (!s.field.empty()) {
        const FieldSpec target = FieldSpec::parse(s.field);
        if (target != data.field()) data = data.embed(target);
    }
    return data;
}

struct Outcome {
    json report;
    int code = kOk;
};

Outcome cmd_validate(const OmegaData& data) {
    const ValidationReport rep = validate(data);
    return {to_json(rep), rep.holds ? kOk : kFailure};
}

Outcome cmd_solve(const std::string& path, const Settings& s) {
    json j = read_json(path);
    try {
        const FieldSpec f = FieldSpec::parse(j.contains("field") ? j.at("field").get<std::string>() : s.field);
        const GradedSpace space(j.at("degrees").get<std::vector<int>>(), scalar_from_json(j.at("zeta"), f));
        std::map<int, ScalarMatrix> blocks;
        if (j.contains("blocks"))
            for (const auto& [key, m] : j.at("blocks").items()) blocks.emplace(std::stoi(key), matrix_from_json(m, f));
        std::optional<Scalar> c;
        if (j.contains("c") && !j.at("c").is_null()) c = scalar_from_json(j.at("c"), f);
        const SolveResult r = solve_omega(space, j.at("d").get<int>(), blocks, c);
        return {json{{"omega", to_json(r.data)}, {"c", r.c.to_string()}, {"c_exact", to_json(r.c)}, {"c_chosen", r.c_chosen}},
                kOk};
    } catch (const json::exception& e) {
        throw ParseError(std::string("malformed solve input: ") + e.what());
    }
}

Outcome cmd_irreducible(const OmegaData& data) {
    const IrreducibilityResult r = irreducibility_test(data.space(), data.omega(), data.d());
    json rep{{"irreducible", r.irreducible}};
    rep["c"] = r.c ? json(r.c->to_string()) : json(nullptr);
    return {rep, r.irreducible ? kOk : kFailure};
}

Outcome cmd_trivrel(const OmegaData& data, bool scan) {
    const auto violation = triviality_violation(data);
    json rep{{"holds", !violation.has_value()}};
    if (violation) {
        json t = json::array();
        for (auto x : *violation) t.push_back(x + 1);
        rep["violation"] = t;
    } else {
        rep["violation"] = nullptr;
    }
    if (scan) {
        const std::size_t n = data.n();
        const auto table = triviality_table(data);
        json vals = json::array();
        for (std::size_t idx = 0; idx < table.size(); ++idx) {
            const std::size_t l = idx % n, k = idx / n % n, j = idx / n / n % n, i = idx / n / n / n;
            vals.push_back({{"ijkl", {i + 1, j + 1, k + 1, l + 1}}, {"value", table[idx].to_string()}});
        }
        rep["table"] = vals;
    }
    return {rep, violation ? kFailure : kOk};
}

Outcome cmd_present(const OmegaData& data, const std::string& target) {
    if (target == "braided") return {serialize(braided_presentation(data)), kOk};
    if (target == "boson") return {serialize(bosonisation_presentation(data)), kOk};
    if (target == "tform") return {serialize(t_form_presentation(data)), kOk};
    if (target == "aof") {
        const ReductionTrace r = reduce_to_degree_zero(data);
        return {serialize(aof_presentation(f_matrix(r.final_data))), kOk};
    }
    throw ParseError("unknown target " + target);
}

Outcome cmd_verify(const std::string& path, const std::string& check, const Settings& s) {
    const Presentation p = deserialize(read_json(path));
    if (check == "coassoc") {
        const CoassociativityReport rep = coassociativity_report(p);
        return {json{{"check", check}, {"ok", rep.ok}, {"failures", rep.failures}}, rep.ok ? kOk : kFailure};
    }
    if (check == "intertwiner") {
        if (!p.meta) throw InvalidData("presentation carries no omega data");
        const bool ok = intertwiner_check(*p.meta, p.f);
        return {json{{"check", check}, {"ok", ok}}, ok ? kOk : kFailure};
    }
    if (check == "welldef") {
        const WellDefinednessReport rep = well_definedness_check(p, {s.bound, s.row_cap, s.workers});
        json out = to_json(rep);
        out["check"] = check;
        if (!s.emit_cert.empty()) {
            json certs = json::object();
            for (const auto& e : rep.entries) certs[e.label] = to_json(e.certificate);
            write_file(s.emit_cert, certs.dump(2) + "\n");
        }
        const int code = rep.all_in_ideal() ? kOk : rep.any_undecided() ? kUndecided : kFailure;
        return {out, code};
    }
    throw ParseError("unknown check " + check);
}

std::optional<std::size_t> env_row_cap() {
    const char* v = std::getenv("BRAIDFOQ_ROW_CAP");
    if (!v || !*v) return std::nullopt;
    try {
        return static_cast<std::size_t>(std::stoull(v));
    } catch (const std::exception&) {
        throw ParseError(std::string("BRAIDFOQ_ROW_CAP is not a number: ") + v);
    }
}

void apply_config(Settings& s, const CLI::App& app) {
    if (!s.config.empty()) {
        const json c = read_json(s.config);
        auto unset = [&](const char* flag) { return app.count(flag) == 0; };
        if (c.contains("field") && unset("--field")) s.field = c.at("field").get<std::string>();
        if (c.contains("degree_bound") && unset("--bound")) s.bound = c.at("degree_bound").get<int>();
        if (c.contains("row_cap")) s.row_cap = c.at("row_cap").get<std::size_t>();
        if (c.contains("seed") && unset("--seed")) s.seed = c.at("seed").get<std::uint64_t>();
        if (c.contains("output") && unset("--out")) s.out = c.at("output").get<std::string>();
    }
    if (auto cap = env_row_cap()) s.row_cap = *cap;
    if (!s.field.empty()) FieldSpec::parse(s.field);
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Braided free orthogonal quantum group toolkit", "braidfoq"};
    app.require_subcommand(1);
    app.fallthrough();
    Settings s;
    app.add_option("--field", s.field, "Coefficient field: cyclo:N or float:tol");
    app.add_option("--bound", s.bound, "Leg-degree bound for membership certificates");
    app.add_option("--seed", s.seed, "Seed for randomized suites");
    app.add_option("--workers", s.workers, "Worker threads")->check(CLI::PositiveNumber);
    app.add_option("--out", s.out, "Write the report here instead of stdout");
    app.add_option("--emit-cert", s.emit_cert, "Write membership certificates here");
    app.add_option("--config", s.config, "JSON run configuration");

    std::string input;
    bool scan = false;
    int shift_s = 0;
    std::string target = "braided", check = "coassoc", label_a, label_b, parity = "even";
    int fuse_n = 2, dims_k = 0, dims_n = 2;
    std::function<Outcome()> action;

    auto with_input = [&](CLI::App* sub) { sub->add_option("input", input, "Input JSON file")->required(); };
    auto omega_cmd = [&](const char* name, const char* help, std::function<Outcome(const OmegaData&)> f) {
        CLI::App* sub = app.add_subcommand(name, help);
        with_input(sub);
        sub->callback([&, f] { action = [&, f] { return f(load_omega(input, s)); }; });
        return sub;
    };

    omega_cmd("validate", "Check the block condition", cmd_validate);
    auto* solve = app.add_subcommand("solve", "Complete omega from its free blocks");
    with_input(solve);
    solve->callback([&] { action = [&] { return cmd_solve(input, s); }; });
    omega_cmd("irreducible", "Irreducibility criterion", cmd_irreducible);
    auto* triv = omega_cmd("trivrel", "Triviality identity", [&](const OmegaData& d) { return cmd_trivrel(d, scan); });
    triv->add_flag("--scan", scan, "Report all n^4 values");
    auto* shift = omega_cmd("shift", "Degree shift", [&](const OmegaData& d) {
        return Outcome{to_json(degree_shift(d, shift_s)), kOk};
    });
    shift->add_option("--s", shift_s, "Shift amount")->required();
    omega_cmd("cover", "Double cover", [](const OmegaData& d) {
        const CoverResult r = double_cover(d);
        json rep{{"data", to_json(r.data)}};
        rep["warning"] = r.warning ? json(*r.warning) : json(nullptr);
        return Outcome{rep, kOk};
    });
    omega_cmd("reduce", "Reduce to homogeneity degree zero", [](const OmegaData& d) {
        return Outcome{to_json(reduce_to_degree_zero(d)), kOk};
    });
    auto* present = omega_cmd("present", "Emit a presentation", [&](const OmegaData& d) { return cmd_present(d, target); });
    present->add_option("--target", target, "braided|boson|tform|aof")
        ->check(CLI::IsMember({"braided", "boson", "tform", "aof"}));
    auto* verify = app.add_subcommand("verify", "Symbolic checks on a presentation");
    with_input(verify);
    verify->add_option("--check", check, "coassoc|welldef|intertwiner")
        ->check(CLI::IsMember({"coassoc", "welldef", "intertwiner"}));
    verify->callback([&] { action = [&] { return cmd_verify(input, check, s); }; });
    auto* fusecmd = app.add_subcommand("fuse", "Decompose a tensor product of irreducibles");
    fusecmd->add_option("--a", label_a, "k,l")->required();
    fusecmd->add_option("--b", label_b, "k,l")->required();
    fusecmd->add_option("--parity", parity, "even|odd")->check(CLI::IsMember({"even", "odd"}));
    fusecmd->add_option("--n", fuse_n, "Dimension of V")->check(CLI::Range(2, 1 << 20));
    fusecmd->callback([&] {
        action = [&] {
            const auto [k, l] = parse_label(label_a);
            const auto [m, j] = parse_label(label_b);
            const FusionContext ctx{fuse_n, parse_parity(parity)};
            const FusionDecomposition x = fuse(IrrepLabel{k, l}, IrrepLabel{m, j}, ctx);
            json rep = to_json(x);
            rep["dim"] = total_dim(x, ctx).get_str();
            return Outcome{rep, kOk};
        };
    });
    auto* dims = app.add_subcommand("dims", "Dimensions of r_k for k = 0..K");
    dims->add_option("--k", dims_k, "Largest k")->required()->check(CLI::Range(0, 100000));
    dims->add_option("--n", dims_n, "Dimension of V")->required()->check(CLI::Range(2, 1 << 20));
    dims->callback([&] {
        action = [&] {
            json list = json::array();
            for (int k = 0; k <= dims_k; ++k) {
                const mpz_class v = dim(IrrepLabel{k, 0}, FusionContext{dims_n, Parity::Even});
                list.push_back(v.fits_slong_p() ? json(v.get_si()) : json(v.get_str()));
            }
            return Outcome{json{{"n", dims_n}, {"dims", list}}, kOk};
        };
    });
    omega_cmd("qparam", "Monoidal-equivalence q parameter", [](const OmegaData& d) {
        return Outcome{to_json(q_parameter(d)), kOk};
    });
    auto* suite = app.add_subcommand("suite", "Run the property battery");
    suite->callback([&] {
        action = [&] {
            const json rep = run_suite({s.seed, s.workers, s.bound, s.row_cap});
            return Outcome{rep, rep.at("passed").get<bool>() ? kOk : kFailure};
        };
    });

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kOk;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n";
        return kUsage;
    }

    Outcome result;
    try {
        apply_config(s, app);
        result = action();
    } catch (const IoError& e) {
        result = {json{{"error", e.what()}}, kUsage};
    } catch (const ParseError& e) {
        result = {json{{"error", e.what()}}, kUsage};
    } catch (const json::exception& e) {
        result = {json{{"error", e.what()}}, kUsage};
    } catch (const Error& e) {
        result = {json{{"error", e.what()}}, kFailure};
    }
    if (result.report.contains("error")) err << "error: " << result.report.at("error").get<std::string>() << "\n";
    result.report["exit"] = result.code;
    const std::string text = result.report.dump(2) + "\n";
    if (s.out.empty()) {
        out << text;
    } else {
        try {
            write_file(s.out, text);
        } catch (const IoError& e) {
            err << "error: " << e.what() << "\n";
            return kUsage;
        }
    }
    return result.code;
}

}  // namespace braidfoq::cli
