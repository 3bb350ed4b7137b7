//  (C) Copyright 2026 the mpolylog authors.
//  Use, modification and distribution are subject to the
//  Boost Software License, Version 1.0. (See accompanying file
//  LICENSE_1_0.txt or copy at http://www.boost.org/LICENSE_1_0.txt)

//  Command-line front end: evaluation, regularisation, Laurent expansion and
//  identity verification, with machine-readable output.
//
//  Exit codes: 0 success, 2 verification residual exceeded, 3 invalid input,
//  4 pole or degenerate configuration.

#include <mpolylog/numerics.hpp>
#include <mpolylog/suites.hpp>
#include <mpolylog/textio.hpp>

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iostream>
#include <string>

namespace {

using namespace mpolylog;
using nlohmann::json;

constexpr int kExitOk = 0;
constexpr int kExitResidual = 2;
constexpr int kExitInvalid = 3;
constexpr int kExitPole = 4;

struct CommonOpts {
    std::string z_spec;
    std::string format = "text";
    std::string config_file;
    int precision = int(kWorkingDigits);
    std::string tolerance;
    std::string delta;
    long long grid_span = 0;
    long long averaging_base = 0;
    unsigned seed = 0;
};

void add_common(CLI::App* cmd, CommonOpts& o, bool with_z = true) {
    if (with_z)
        cmd->add_option("--z", o.z_spec,
                        "roots of unity: 1, -1, i, -i or turn fractions p/q, comma separated")
            ->required();
    cmd->add_option("--format", o.format, "output format: text or json")
        ->check(CLI::IsMember({"text", "json"}));
    cmd->add_option("--precision", o.precision, "working decimal digits (30..60)");
    cmd->add_option("--tolerance", o.tolerance, "identity residual tolerance");
    cmd->add_option("--delta", o.delta, "pole-avoidance offset");
    cmd->add_option("--grid-span", o.grid_span, "largest fit sample N");
    cmd->add_option("--averaging-base", o.averaging_base, "window start for evaluation");
    cmd->add_option("--seed", o.seed, "seed for deterministic sampling");
    cmd->add_option("--config", o.config_file, "key=value file overriding the defaults");
}

numerics::EvalConfig build_config(const CommonOpts& o) {
    numerics::EvalConfig cfg;
    if (!o.config_file.empty()) {
        std::ifstream in(o.config_file);
        if (!in) throw std::invalid_argument("config file not readable: " + o.config_file);
        std::string line;
        while (std::getline(in, line)) {
            if (line.empty() || line[0] == '#') continue;
            auto eq = line.find('=');
            if (eq == std::string::npos)
                throw std::invalid_argument("config line without '=': " + line);
            std::string key = line.substr(0, eq), val = line.substr(eq + 1);
            if (key == "precision") cfg.precision = std::stoi(val);
            else if (key == "tolerance") cfg.tolerance = Real(val);
            else if (key == "delta") cfg.delta = Real(val);
            else if (key == "grid_start") cfg.grid_start = std::stoll(val);
            else if (key == "grid_span") cfg.grid_span = std::stoll(val);
            else if (key == "n_max") cfg.n_max = std::stoll(val);
            else if (key == "taylor_degree") cfg.taylor_degree = std::stoi(val);
            else if (key == "averaging_base") cfg.averaging_base = std::stoll(val);
            else if (key == "averaging_passes") cfg.averaging_passes = std::stoi(val);
            else if (key == "seed") cfg.seed = unsigned(std::stoul(val));
            else throw std::invalid_argument("unknown config key: " + key);
        }
    }
    cfg.precision = o.precision;
    if (!o.tolerance.empty()) cfg.tolerance = Real(o.tolerance);
    if (!o.delta.empty()) cfg.delta = Real(o.delta);
    if (o.grid_span > 0) cfg.grid_span = o.grid_span;
    if (o.averaging_base > 0) cfg.averaging_base = o.averaging_base;
    if (o.seed != 0) cfg.seed = o.seed;
    cfg.validate();
    return cfg;
}

void emit(const json& j, const std::string& format) {
    if (format == "json") {
        std::cout << j.dump(2) << "\n";
        return;
    }
    // text: one line per top-level scalar, pretty-printed nested values
    for (auto it = j.begin(); it != j.end(); ++it) {
        if (it->is_structured())
            std::cout << it.key() << ": " << it->dump() << "\n";
        else if (it->is_string())
            std::cout << it.key() << ": " << it->get<std::string>() << "\n";
        else
            std::cout << it.key() << ": " << it->dump() << "\n";
    }
}

int reports_exit(const std::vector<numerics::VerifyReport>& reports) {
    for (const auto& r : reports)
        if (!r.pass) return kExitResidual;
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"multiple polylogarithm values, regularised values and Laurent-type expansions"};
    app.require_subcommand(1);

    CommonOpts eval_o, reg_o, expand_o, verify_o, poles_o, domains_o;
    std::string eval_s, reg_a, reg_k, expand_a, expand_mode = "auto";
    std::string verify_suite = "all", verify_z, verify_a, verify_s;
    std::string domains_a;
    int verify_depth = 0;
    long long verify_N = 40;

    auto* eval_cmd = app.add_subcommand("eval", "evaluate Li_z(s)");
    add_common(eval_cmd, eval_o);
    eval_cmd->add_option("--s", eval_s, "evaluation point, comma separated reals")->required();

    std::string reg_dump;
    auto* reg_cmd = app.add_subcommand("reg", "regularised value l_[k]^(a)(z)");
    add_common(reg_cmd, reg_o);
    reg_cmd->add_option("--a", reg_a, "integer anchor, comma separated")->required();
    reg_cmd->add_option("--k", reg_k, "log powers, comma separated (default all zero)");
    reg_cmd->add_option("--dump-samples", reg_dump,
                        "write the primary-grid (N, partial sum) samples as CSV");

    auto* expand_cmd = app.add_subcommand("expand", "Laurent-type expansion around an integer anchor");
    add_common(expand_cmd, expand_o);
    expand_cmd->add_option("--a", expand_a, "integer anchor")->required();
    expand_cmd->add_option("--mode", expand_mode, "boundary, general or auto")
        ->check(CLI::IsMember({"boundary", "general", "auto"}));

    auto* verify_cmd = app.add_subcommand("verify", "run identity verification suites");
    add_common(verify_cmd, verify_o, false);
    verify_cmd->add_option("--suite", verify_suite,
                           "translation|combi|boundary|general|vrz|all")
        ->check(CLI::IsMember({"translation", "combi", "boundary", "general", "vrz", "all"}));
    verify_cmd->add_option("--z", verify_z, "roots for a single-point check");
    verify_cmd->add_option("--a", verify_a, "anchor for a single expansion check");
    verify_cmd->add_option("--s", verify_s, "point for a single translation/cutoff check");
    verify_cmd->add_option("--depth", verify_depth, "restrict random sampling to one depth");
    verify_cmd->add_option("--N", verify_N, "cutoff for translation/cutoff checks");

    auto* poles_cmd = app.add_subcommand("poles", "candidate polar hyperplanes of Li_z");
    add_common(poles_cmd, poles_o);

    auto* domains_cmd = app.add_subcommand("domains", "index sets and membership data");
    add_common(domains_cmd, domains_o);
    domains_cmd->add_option("--a", domains_a, "integer anchor for I(z,a)/I'(z,a)");

    CLI11_PARSE(app, argc, argv);

    try {
        if (eval_cmd->parsed()) {
            auto cfg = build_config(eval_o);
            auto z = textio::parse_roots(eval_o.z_spec);
            auto s = textio::parse_reals(eval_s);
            if (s.size() != z.size())
                throw std::invalid_argument("--s length must match --z length");
            Complex v = numerics::li_value(z, s, cfg);
            json j;
            j["z"] = eval_o.z_spec;
            j["s"] = eval_s;
            j["value_re"] = real(v).str(30);
            j["value_im"] = imag(v).str(30);
            emit(j, eval_o.format);
            return kExitOk;
        }
        if (reg_cmd->parsed()) {
            auto cfg = build_config(reg_o);
            auto z = textio::parse_roots(reg_o.z_spec);
            auto a = textio::parse_ints(reg_a);
            std::vector<unsigned> k(z.size(), 0);
            if (!reg_k.empty()) k = textio::parse_uints(reg_k);
            if (a.size() != z.size() || k.size() != z.size())
                throw std::invalid_argument("--a/--k length must match --z length");
            auto rv = numerics::regularized_value(z, a, k, cfg);
            if (!reg_dump.empty()) textio::write_samples_csv(reg_dump, rv.samples);
            emit(textio::regvalue_json(rv), reg_o.format);
            if (!rv.ok) {
                std::cerr << "regularisation diagnostics: " << rv.message << "\n";
                return kExitResidual;
            }
            return kExitOk;
        }
        if (expand_cmd->parsed()) {
            auto cfg = build_config(expand_o);
            auto z = textio::parse_roots(expand_o.z_spec);
            auto a = textio::parse_ints(expand_a);
            if (a.size() != z.size())
                throw std::invalid_argument("--a length must match --z length");
            domains::IndexProfile profile(z);
            ratfield::ExpansionMode mode;
            if (expand_mode == "boundary") mode = ratfield::ExpansionMode::Boundary;
            else if (expand_mode == "general") mode = ratfield::ExpansionMode::General;
            else
                mode = domains::in_closure_U_z(profile, a)
                           ? ratfield::ExpansionMode::Boundary
                           : ratfield::ExpansionMode::General;
            auto e = ratfield::laurent_expansion(profile, a, mode);
            emit(textio::expansion_json(e), expand_o.format);
            return kExitOk;
        }
        if (verify_cmd->parsed()) {
            auto cfg = build_config(verify_o);
            std::vector<numerics::VerifyReport> reports;
            auto run_into = [&](suites::SuiteResult r) {
                for (auto& rep : r.reports) reports.push_back(std::move(rep));
            };
            const bool single_point = !verify_z.empty();
            if (single_point) {
                auto z = textio::parse_roots(verify_z);
                if (verify_suite == "translation")
                    reports.push_back(numerics::verify_translation(
                        z, textio::parse_reals(verify_s), verify_N, cfg));
                else if (verify_suite == "combi")
                    reports.push_back(numerics::verify_combi(
                        z, textio::parse_reals(verify_s), verify_N, cfg));
                else if (verify_suite == "boundary")
                    reports.push_back(numerics::verify_expansion(
                        z, textio::parse_ints(verify_a),
                        ratfield::ExpansionMode::Boundary, cfg));
                else if (verify_suite == "general")
                    reports.push_back(numerics::verify_expansion(
                        z, textio::parse_ints(verify_a),
                        ratfield::ExpansionMode::General, cfg));
                else if (verify_suite == "vrz")
                    reports.push_back(numerics::verify_corollary_vrz(
                        z, textio::parse_ints(verify_a), cfg));
                else
                    throw std::invalid_argument("single-point check needs a concrete suite");
            } else {
                int per_depth = verify_depth > 0 ? 10 : 4;
                if (verify_suite == "translation" || verify_suite == "all")
                    run_into(suites::run_translation_suite(cfg, per_depth));
                if (verify_suite == "combi" || verify_suite == "all")
                    run_into(suites::run_combi_suite(cfg, per_depth));
                if (verify_suite == "boundary" || verify_suite == "all")
                    run_into(suites::run_boundary_suite(cfg));
                if (verify_suite == "general" || verify_suite == "all")
                    run_into(suites::run_general_suite(cfg));
                if (verify_suite == "vrz" || verify_suite == "all")
                    run_into(suites::run_vrz_suite(cfg));
            }
            json arr = json::array();
            for (const auto& r : reports) arr.push_back(textio::report_json(r));
            json j;
            j["suite"] = verify_suite;
            j["reports"] = arr;
            j["pass"] = reports_exit(reports) == kExitOk;
            emit(j, verify_o.format);
            return reports_exit(reports);
        }
        if (poles_cmd->parsed()) {
            build_config(poles_o);
            auto z = textio::parse_roots(poles_o.z_spec);
            domains::IndexProfile profile(z);
            json j;
            j["z"] = poles_o.z_spec;
            j["families"] = textio::hyperplanes_json(domains::polar_hyperplanes(profile));
            emit(j, poles_o.format);
            return kExitOk;
        }
        if (domains_cmd->parsed()) {
            build_config(domains_o);
            auto z = textio::parse_roots(domains_o.z_spec);
            domains::IndexProfile profile(z);
            json j = textio::profile_json(profile);
            if (!domains_a.empty()) {
                auto a = textio::parse_ints(domains_a);
                if (a.size() != z.size())
                    throw std::invalid_argument("--a length must match --z length");
                j["index_set_I"] = domains::index_set_I(profile, a);
                j["index_set_I_prime"] = domains::index_set_I_prime(profile, a);
                j["in_closure_U_z"] = domains::in_closure_U_z(profile, a);
                j["in_V_z"] = domains::in_V_z(profile, a);
            }
            emit(j, domains_o.format);
            return kExitOk;
        }
    } catch (const numerics::PoleError& e) {
        std::cerr << "pole: " << e.what() << "\n";
        return kExitPole;
    } catch (const std::domain_error& e) {
        std::cerr << "degenerate configuration: " << e.what() << "\n";
        return kExitPole;
    } catch (const std::invalid_argument& e) {
        std::cerr << "invalid input: " << e.what() << "\n";
        return kExitInvalid;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInvalid;
    }
    return kExitInvalid;
}
