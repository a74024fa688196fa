// Command-line front end for the bnineq shared library. Everything
// numerical goes through the C API in bnineq.h; this file only parses
// flags, assembles config/case JSON and formats the results.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "bnineq.h"

namespace {

using json = nlohmann::ordered_json;

constexpr int exit_ok = 0;
constexpr int exit_violations = 1;
constexpr int exit_usage = 2;

struct OwnedString {
    char* ptr = nullptr;
    ~OwnedString() { bnq_string_free(ptr); }
    std::string str() const { return ptr == nullptr ? std::string() : std::string(ptr); }
};

int fail(const std::string& context, bnq_status status) {
    std::cerr << "error (" << bnq_status_name(status) << "): " << context << ": "
              << bnq_last_error() << "\n";
    return exit_usage;
}

bool parse_complex_flag(const std::string& text, double& re, double& im) {
    std::istringstream in(text);
    char comma = ',';
    if (!(in >> re)) return false;
    im = 0.0;
    if (in >> comma) {
        if (comma != ',' || !(in >> im)) return false;
    }
    std::string rest;
    return !(in >> rest);
}

bool write_file(const std::string& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary);
    out << text;
    return static_cast<bool>(out);
}

struct SuiteFlags {
    std::vector<std::string> statements;
    int cases = 200;
    std::uint64_t seed = 0;
    std::string n_spec = "1..8";
    std::optional<double> k, r, R;
    std::string alpha, beta;
    std::string ab_mode = "mixed";
    std::optional<double> tol;
    double extrema_tol = 1e-9;
    std::string out_path;
    std::string format = "json";
};

void add_suite_flags(CLI::App* cmd, SuiteFlags& f) {
    cmd->add_option("--statement", f.statements,
                    "statement id (repeatable; \"all\" or omitted = the twelve operator "
                    "statements)");
    cmd->add_option("--cases", f.cases, "random cases per statement");
    cmd->add_option("--seed", f.seed, "64-bit suite seed");
    cmd->add_option("--n", f.n_spec, "polynomial degree, fixed (\"4\") or range (\"1..8\")");
    cmd->add_option("--k", f.k, "fix the inner radius k");
    cmd->add_option("--r", f.r, "fix r");
    cmd->add_option("--R", f.R, "fix R");
    cmd->add_option("--alpha", f.alpha, "fix alpha as \"re,im\"");
    cmd->add_option("--beta", f.beta, "fix beta as \"re,im\"");
    cmd->add_option("--ab-mode", f.ab_mode, "alpha/beta sampling: interior|boundary|mixed");
    cmd->add_option("--tol", f.tol, "violation threshold on rel_slack");
    cmd->add_option("--extrema-tol", f.extrema_tol, "circle-extremum accuracy");
    cmd->add_option("--out", f.out_path, "write the report to this path");
    cmd->add_option("--format", f.format, "report format: json|csv")
        ->check(CLI::IsMember({"json", "csv"}));
}

// Builds the config document; returns false (after printing) on bad flags.
bool build_config(const SuiteFlags& f, double default_tol, json& config, std::string& error) {
    config = json::object();
    std::vector<std::string> ids;
    for (const std::string& s : f.statements)
        if (s != "all") ids.push_back(s);
    if (!ids.empty()) config["statements"] = ids;
    config["cases"] = f.cases;
    config["seed"] = f.seed;

    const auto dots = f.n_spec.find("..");
    try {
        if (dots == std::string::npos) {
            config["n"] = std::stoi(f.n_spec);
        } else {
            config["n"] = json{{"lo", std::stoi(f.n_spec.substr(0, dots))},
                               {"hi", std::stoi(f.n_spec.substr(dots + 2))}};
        }
    } catch (const std::exception&) {
        error = "--n expects an integer or \"lo..hi\"";
        return false;
    }

    if (f.k.has_value()) config["k"] = *f.k;
    if (f.r.has_value()) config["r"] = *f.r;
    if (f.R.has_value()) config["R"] = *f.R;
    double re = 0.0, im = 0.0;
    if (!f.alpha.empty()) {
        if (!parse_complex_flag(f.alpha, re, im)) {
            error = "--alpha expects \"re,im\"";
            return false;
        }
        config["alpha"] = json::array({re, im});
    }
    if (!f.beta.empty()) {
        if (!parse_complex_flag(f.beta, re, im)) {
            error = "--beta expects \"re,im\"";
            return false;
        }
        config["beta"] = json::array({re, im});
    }
    config["ab_mode"] = f.ab_mode;
    config["tol"] = f.tol.value_or(default_tol);
    config["extrema_tol"] = f.extrema_tol;
    if (f.format == "csv") config["emit_rows"] = true;
    return true;
}

void print_statement_summary(const json& report, bool sharpness) {
    std::printf("%-5s %8s %12s %11s %14s\n", "id", "cases", "evaluations", "violations",
                sharpness ? "max|rel_slack|" : "worst rel_slack");
    for (const json& s : report.at("statements")) {
        std::string residual = "-";
        if (s.contains("worst_rel_slack")) {
            char buf[32];
            std::snprintf(buf, sizeof buf, "%.3e",
                          sharpness ? s.at("max_abs_rel_slack").get<double>()
                                    : s.at("worst_rel_slack").get<double>());
            residual = buf;
        }
        std::printf("%-5s %8d %12ld %11ld %14s\n", s.at("id").get<std::string>().c_str(),
                    s.at("cases").get<int>(), s.at("evaluations").get<long>(),
                    s.at("violations").get<long>(), residual.c_str());
    }
}

int run_report_command(const SuiteFlags& flags, bool sharpness) {
    json config;
    std::string flag_error;
    if (!build_config(flags, sharpness ? 1e-6 : 1e-8, config, flag_error)) {
        std::cerr << "error: " << flag_error << "\n";
        return exit_usage;
    }

    OwnedString report_text;
    const std::string config_text = config.dump();
    const bnq_status status =
        sharpness ? bnq_sharpness_scan(config_text.c_str(), &report_text.ptr)
                  : bnq_run_suite(config_text.c_str(), &report_text.ptr);
    if (status != BNQ_OK) return fail(sharpness ? "sharpness" : "verify", status);

    const json report = json::parse(report_text.str());
    print_statement_summary(report, sharpness);
    const long violations = report.at("total_violations").get<long>();
    std::printf("total: %ld evaluations, %ld violation%s\n",
                report.at("total_evaluations").get<long>(), violations,
                violations == 1 ? "" : "s");

    if (!flags.out_path.empty()) {
        std::string payload;
        if (flags.format == "csv") {
            OwnedString csv;
            const bnq_status cs = bnq_report_csv(report_text.ptr, &csv.ptr);
            if (cs != BNQ_OK) return fail("csv export", cs);
            payload = csv.str();
        } else {
            payload = report_text.str();
        }
        if (!write_file(flags.out_path, payload)) {
            std::cerr << "error: cannot write " << flags.out_path << "\n";
            return exit_usage;
        }
        std::printf("report written to %s\n", flags.out_path.c_str());
    }
    return violations == 0 ? exit_ok : exit_violations;
}

int run_case_command(const std::string& input_path, const std::string& out_path, double tol) {
    std::ifstream in(input_path, std::ios::binary);
    if (!in) {
        std::cerr << "error: cannot read " << input_path << "\n";
        return exit_usage;
    }
    std::stringstream buffer;
    buffer << in.rdbuf();

    OwnedString result_text;
    const bnq_status status = bnq_eval_case(buffer.str().c_str(), &result_text.ptr);
    if (status != BNQ_OK) return fail("case", status);

    const json result = json::parse(result_text.str());
    std::printf("%-5s %23s %17s %17s %12s\n", "id", "z", "lhs", "rhs", "rel_slack");
    for (const json& r : result.at("results")) {
        char zbuf[48];
        std::snprintf(zbuf, sizeof zbuf, "(%.4g, %.4g)", r.at("z")[0].get<double>(),
                      r.at("z")[1].get<double>());
        std::printf("%-5s %23s %17.12g %17.12g %12.3e\n",
                    r.at("statement").get<std::string>().c_str(), zbuf,
                    r.at("lhs").get<double>(), r.at("rhs").get<double>(),
                    r.at("rel_slack").get<double>());
    }
    const double worst = result.at("worst_rel_slack").get<double>();
    std::printf("worst rel_slack: %.6e\n", worst);

    if (!out_path.empty()) {
        if (!write_file(out_path, result_text.str())) {
            std::cerr << "error: cannot write " << out_path << "\n";
            return exit_usage;
        }
        std::printf("result written to %s\n", out_path.c_str());
    }
    return worst >= -tol ? exit_ok : exit_violations;
}

int run_list_command() {
    OwnedString text;
    text.ptr = bnq_statements_json();
    const json table = json::parse(text.str());
    std::printf("%-5s %-9s %s\n", "id", "kind", "statement");
    for (const json& s : table) {
        const bool classics = s.at("classical").get<bool>();
        std::printf("%-5s %-9s %s\n", s.at("id").get<std::string>().c_str(),
                    classics ? "classical" : "operator", s.at("summary").get<std::string>().c_str());
    }
    return exit_ok;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"bnineq: numerical verification of sharp B_n-operator polynomial inequalities"};
    app.require_subcommand(1);
    app.set_version_flag("--version", std::string(bnq_version()));

    SuiteFlags verify_flags;
    CLI::App* verify = app.add_subcommand("verify", "run randomized inequality suites");
    add_suite_flags(verify, verify_flags);

    SuiteFlags sharp_flags;
    sharp_flags.cases = 100;
    CLI::App* sharpness =
        app.add_subcommand("sharpness", "check equality on the extremal families");
    add_suite_flags(sharpness, sharp_flags);

    std::string case_input, case_out;
    double case_tol = 1e-8;
    CLI::App* case_cmd = app.add_subcommand("case", "evaluate one case payload from a file");
    case_cmd->add_option("--input", case_input, "case JSON file (bnineq/case/v1)")->required();
    case_cmd->add_option("--out", case_out, "write the result JSON here");
    case_cmd->add_option("--tol", case_tol, "violation threshold on rel_slack");

    app.add_subcommand("list-statements", "print the statement catalogue");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        // CLI11 prints its own message; normalize the exit code contract
        const int code = app.exit(e);
        return code == 0 ? exit_ok : exit_usage;
    }

    if (verify->parsed()) return run_report_command(verify_flags, false);
    if (sharpness->parsed()) return run_report_command(sharp_flags, true);
    if (case_cmd->parsed()) return run_case_command(case_input, case_out, case_tol);
    return run_list_command();
}
