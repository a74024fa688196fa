#include "bnineq.h"

#include <algorithm>
#include <cstdio>
#include <cstdlib>
#include <cstring>
#include <limits>
#include <string>
#include <vector>

#include "errors.hpp"
#include "harness.hpp"
#include "json_io.hpp"

using namespace bnineq;

struct bnq_poly {
    Poly value;
};

struct bnq_operator {
    BnOperator value;
};

namespace {

thread_local std::string g_last_error;

char* dup_string(const std::string& text) {
    char* out = static_cast<char*>(std::malloc(text.size() + 1));
    if (out != nullptr) std::memcpy(out, text.c_str(), text.size() + 1);
    return out;
}

// Runs fn, translating exceptions into status codes + thread-local message.
template <typename Fn>
bnq_status guarded(Fn&& fn) {
    try {
        fn();
        return BNQ_OK;
    } catch (const HypothesisError& e) {
        g_last_error = e.what();
        return BNQ_ERR_HYPOTHESIS;
    } catch (const ParseError& e) {
        g_last_error = e.what();
        return BNQ_ERR_PARSE;
    } catch (const ConvergenceError& e) {
        g_last_error = e.what();
        return BNQ_ERR_NO_CONVERGENCE;
    } catch (const InvalidArgument& e) {
        g_last_error = e.what();
        return BNQ_ERR_INVALID_ARGUMENT;
    } catch (const std::exception& e) {
        g_last_error = e.what();
        return BNQ_ERR_INTERNAL;
    } catch (...) {
        g_last_error = "unknown error";
        return BNQ_ERR_INTERNAL;
    }
}

bnq_status invalid_call(const char* message) {
    g_last_error = message;
    return BNQ_ERR_INVALID_ARGUMENT;
}

std::vector<cplx> pairs_to_complex(const double* data, size_t count) {
    std::vector<cplx> out;
    out.reserve(count);
    for (size_t i = 0; i < count; ++i) out.emplace_back(data[2 * i], data[2 * i + 1]);
    return out;
}

} // namespace

extern "C" {

const char* bnq_version(void) { return "0.1.0"; }

const char* bnq_status_name(bnq_status status) {
    switch (status) {
        case BNQ_OK: return "ok";
        case BNQ_ERR_INVALID_ARGUMENT: return "invalid argument";
        case BNQ_ERR_HYPOTHESIS: return "hypothesis violation";
        case BNQ_ERR_PARSE: return "parse error";
        case BNQ_ERR_NO_CONVERGENCE: return "no convergence";
        default: return "internal error";
    }
}

const char* bnq_last_error(void) { return g_last_error.c_str(); }

void bnq_string_free(char* text) { std::free(text); }

/* ---- polynomials ------------------------------------------------------- */

bnq_status bnq_poly_create(const double* coeffs, size_t n_coeffs, bnq_poly** out) {
    if (coeffs == nullptr || out == nullptr || n_coeffs == 0)
        return invalid_call("bnq_poly_create: null argument or empty coefficient list");
    return guarded([&] { *out = new bnq_poly{Poly(pairs_to_complex(coeffs, n_coeffs))}; });
}

bnq_status bnq_poly_from_roots(double leading_re, double leading_im, const double* roots,
                               size_t n_roots, bnq_poly** out) {
    if (out == nullptr || (roots == nullptr && n_roots > 0))
        return invalid_call("bnq_poly_from_roots: null argument");
    return guarded([&] {
        const std::vector<cplx> rs = pairs_to_complex(roots, n_roots);
        *out = new bnq_poly{Poly::from_roots(cplx{leading_re, leading_im}, rs)};
    });
}

bnq_status bnq_poly_from_json(const char* json_text, bnq_poly** out) {
    if (json_text == nullptr || out == nullptr)
        return invalid_call("bnq_poly_from_json: null argument");
    return guarded([&] { *out = new bnq_poly{poly_from_json(parse_json(json_text))}; });
}

char* bnq_poly_to_json(const bnq_poly* p) {
    if (p == nullptr) return nullptr;
    return dup_string(poly_to_json(p->value).dump());
}

int bnq_poly_degree(const bnq_poly* p) { return p == nullptr ? -1 : p->value.degree(); }

bnq_status bnq_poly_coeffs(const bnq_poly* p, double* out, size_t capacity) {
    if (p == nullptr || out == nullptr) return invalid_call("bnq_poly_coeffs: null argument");
    const auto& c = p->value.coeffs();
    if (capacity < c.size()) return invalid_call("bnq_poly_coeffs: capacity too small");
    for (size_t j = 0; j < c.size(); ++j) {
        out[2 * j] = c[j].real();
        out[2 * j + 1] = c[j].imag();
    }
    return BNQ_OK;
}

bnq_status bnq_poly_eval(const bnq_poly* p, double z_re, double z_im, double out[2]) {
    if (p == nullptr || out == nullptr) return invalid_call("bnq_poly_eval: null argument");
    const cplx v = p->value.eval(cplx{z_re, z_im});
    out[0] = v.real();
    out[1] = v.imag();
    return BNQ_OK;
}

bnq_status bnq_poly_derivative(const bnq_poly* p, bnq_poly** out) {
    if (p == nullptr || out == nullptr) return invalid_call("bnq_poly_derivative: null argument");
    return guarded([&] { *out = new bnq_poly{p->value.derivative()}; });
}

bnq_status bnq_poly_conj_reciprocal(const bnq_poly* p, int ambient_degree, bnq_poly** out) {
    if (p == nullptr || out == nullptr)
        return invalid_call("bnq_poly_conj_reciprocal: null argument");
    return guarded([&] { *out = new bnq_poly{p->value.conj_reciprocal(ambient_degree)}; });
}

bnq_status bnq_poly_scale_compose(const bnq_poly* p, double c_re, double c_im, bnq_poly** out) {
    if (p == nullptr || out == nullptr)
        return invalid_call("bnq_poly_scale_compose: null argument");
    return guarded([&] { *out = new bnq_poly{p->value.scale_compose(cplx{c_re, c_im})}; });
}

void bnq_poly_free(bnq_poly* p) { delete p; }

/* ---- operators ---------------------------------------------------------- */

bnq_status bnq_operator_validate(int n, const double lambdas[6], bnq_operator** out) {
    if (lambdas == nullptr || out == nullptr)
        return invalid_call("bnq_operator_validate: null argument");
    return guarded([&] {
        *out = new bnq_operator{BnOperator::validate(cplx{lambdas[0], lambdas[1]},
                                                     cplx{lambdas[2], lambdas[3]},
                                                     cplx{lambdas[4], lambdas[5]}, n)};
    });
}

bnq_status bnq_operator_from_json(const char* json_text, bnq_operator** out) {
    if (json_text == nullptr || out == nullptr)
        return invalid_call("bnq_operator_from_json: null argument");
    return guarded([&] { *out = new bnq_operator{operator_from_json(parse_json(json_text))}; });
}

char* bnq_operator_to_json(const bnq_operator* b) {
    if (b == nullptr) return nullptr;
    return dup_string(operator_to_json(b->value).dump());
}

int bnq_operator_n(const bnq_operator* b) { return b == nullptr ? -1 : b->value.n(); }

bnq_status bnq_operator_apply(const bnq_operator* b, const bnq_poly* p, bnq_poly** out) {
    if (b == nullptr || p == nullptr || out == nullptr)
        return invalid_call("bnq_operator_apply: null argument");
    return guarded([&] { *out = new bnq_poly{b->value.apply(p->value)}; });
}

bnq_status bnq_operator_monomial_image(const bnq_operator* b, double out[2]) {
    if (b == nullptr || out == nullptr)
        return invalid_call("bnq_operator_monomial_image: null argument");
    const cplx m = b->value.monomial_image();
    out[0] = m.real();
    out[1] = m.imag();
    return BNQ_OK;
}

void bnq_operator_free(bnq_operator* b) { delete b; }

/* ---- circle ------------------------------------------------------------- */

bnq_status bnq_max_modulus(const bnq_poly* p, double k, double tol, double* value, double* theta) {
    if (p == nullptr || value == nullptr) return invalid_call("bnq_max_modulus: null argument");
    return guarded([&] {
        const CircleExtremum e = max_modulus(p->value, k, tol);
        *value = e.value;
        if (theta != nullptr) *theta = e.theta;
    });
}

bnq_status bnq_min_modulus(const bnq_poly* p, double k, double tol, double* value, double* theta) {
    if (p == nullptr || value == nullptr) return invalid_call("bnq_min_modulus: null argument");
    return guarded([&] {
        const CircleExtremum e = min_modulus(p->value, k, tol);
        *value = e.value;
        if (theta != nullptr) *theta = e.theta;
    });
}

bnq_status bnq_find_roots(const bnq_poly* p, double* roots, size_t capacity) {
    if (p == nullptr || roots == nullptr) return invalid_call("bnq_find_roots: null argument");
    if (p->value.degree() >= 1 && capacity < static_cast<size_t>(p->value.degree()))
        return invalid_call("bnq_find_roots: capacity below the polynomial degree");
    return guarded([&] {
        const std::vector<cplx> rs = find_roots(p->value);
        for (size_t i = 0; i < rs.size(); ++i) {
            roots[2 * i] = rs[i].real();
            roots[2 * i + 1] = rs[i].imag();
        }
    });
}

bnq_status bnq_all_zeros_in_closed_disk(const bnq_poly* p, double k, int* out) {
    if (p == nullptr || out == nullptr)
        return invalid_call("bnq_all_zeros_in_closed_disk: null argument");
    return guarded([&] { *out = all_zeros_in_closed_disk(p->value, k) ? 1 : 0; });
}

bnq_status bnq_no_zeros_in_open_disk(const bnq_poly* p, double k, int* out) {
    if (p == nullptr || out == nullptr)
        return invalid_call("bnq_no_zeros_in_open_disk: null argument");
    return guarded([&] { *out = no_zeros_in_open_disk(p->value, k) ? 1 : 0; });
}

/* ---- statements ---------------------------------------------------------- */

char* bnq_statements_json(void) { return dup_string(statements_to_json().dump()); }

bnq_status bnq_eval_case(const char* case_json, char** result_json) {
    if (case_json == nullptr || result_json == nullptr)
        return invalid_call("bnq_eval_case: null argument");
    return guarded([&] {
        const Case c = case_from_json(parse_json(case_json));
        const std::vector<SlackResult> results = evaluate_case(c, true);
        json arr = json::array();
        double worst = std::numeric_limits<double>::infinity();
        for (const SlackResult& res : results) {
            worst = std::min(worst, res.rel_slack);
            arr.push_back(result_to_json(res));
        }
        const json out{{"schema", "bnineq/case-result/v1"},
                       {"statement", c.statement},
                       {"results", std::move(arr)},
                       {"worst_rel_slack", worst}};
        *result_json = dup_string(out.dump(1));
    });
}

bnq_status bnq_run_suite(const char* config_json, char** report_json) {
    if (config_json == nullptr || report_json == nullptr)
        return invalid_call("bnq_run_suite: null argument");
    return guarded([&] {
        const SuiteConfig config = config_from_json(parse_json(config_json));
        const SuiteReport report = run_suite(config);
        json out = report_to_json(report);
        out["config"] = config_to_json(config);
        *report_json = dup_string(out.dump(1));
    });
}

bnq_status bnq_sharpness_scan(const char* config_json, char** report_json) {
    if (config_json == nullptr || report_json == nullptr)
        return invalid_call("bnq_sharpness_scan: null argument");
    return guarded([&] {
        const SuiteConfig config = config_from_json(parse_json(config_json));
        const SuiteReport report = sharpness_scan(config);
        json out = report_to_json(report);
        out["config"] = config_to_json(config);
        *report_json = dup_string(out.dump(1));
    });
}

bnq_status bnq_report_csv(const char* report_json, char** csv_text) {
    if (report_json == nullptr || csv_text == nullptr)
        return invalid_call("bnq_report_csv: null argument");
    return guarded([&] {
        const json report = parse_json(report_json);
        if (!report.contains("statements") || !report["statements"].is_array())
            throw ParseError("report: missing \"statements\" array");
        std::string out = "statement,case_index,z_re,z_im,lhs,rhs,slack,rel_slack\n";
        char line[512];
        for (const json& stmt : report["statements"]) {
            if (!stmt.contains("rows")) continue;
            const std::string id = stmt.at("id").get<std::string>();
            for (const json& row : stmt["rows"]) {
                std::snprintf(line, sizeof line,
                              "%s,%d,%.17g,%.17g,%.17g,%.17g,%.17g,%.17g\n", id.c_str(),
                              row.at("case_index").get<int>(),
                              row.at("z")[0].get<double>(), row.at("z")[1].get<double>(),
                              row.at("lhs").get<double>(), row.at("rhs").get<double>(),
                              row.at("slack").get<double>(), row.at("rel_slack").get<double>());
                out += line;
            }
        }
        *csv_text = dup_string(out);
    });
}

} /* extern "C" */
