#include "json_io.hpp"

#include "errors.hpp"

namespace bnineq {

namespace {

const json& need(const json& j, const char* key, const char* context) {
    auto it = j.find(key);
    if (it == j.end())
        throw ParseError(std::string(context) + ": missing field \"" + key + "\"");
    return *it;
}

double need_number(const json& j, const char* key, const char* context) {
    const json& v = need(j, key, context);
    if (!v.is_number()) throw ParseError(std::string(context) + ": \"" + key + "\" must be a number");
    return v.get<double>();
}

} // namespace

json parse_json(const std::string& text) {
    try {
        return json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(std::string("malformed JSON: ") + e.what());
    }
}

json cplx_to_json(const cplx& z) { return json::array({z.real(), z.imag()}); }

cplx cplx_from_json(const json& j) {
    if (j.is_number()) return cplx{j.get<double>(), 0.0};
    if (!j.is_array() || j.size() != 2 || !j[0].is_number() || !j[1].is_number())
        throw ParseError("complex value must be [re, im]");
    return cplx{j[0].get<double>(), j[1].get<double>()};
}

json poly_to_json(const Poly& p) {
    json coeffs = json::array();
    for (const cplx& a : p.coeffs()) coeffs.push_back(cplx_to_json(a));
    return json{{"n", p.degree()}, {"coeffs", std::move(coeffs)}};
}

Poly poly_from_json(const json& j) {
    const json& coeffs = need(j, "coeffs", "polynomial");
    if (!coeffs.is_array() || coeffs.empty())
        throw ParseError("polynomial: \"coeffs\" must be a nonempty array");
    std::vector<cplx> c;
    c.reserve(coeffs.size());
    for (const json& entry : coeffs) c.push_back(cplx_from_json(entry));
    if (j.contains("n")) {
        const auto n = need(j, "n", "polynomial").get<long long>();
        if (n + 1 != static_cast<long long>(c.size()))
            throw ParseError("polynomial: \"coeffs\" length must be n + 1");
    }
    return Poly(std::move(c));
}

json operator_to_json(const BnOperator& b) {
    return json{{"n", b.n()},
                {"lambda", json::array({cplx_to_json(b.lambda0()), cplx_to_json(b.lambda1()),
                                        cplx_to_json(b.lambda2())})}};
}

BnOperator operator_from_json(const json& j) {
    const int n = static_cast<int>(need_number(j, "n", "operator"));
    const json& lambda = need(j, "lambda", "operator");
    if (!lambda.is_array() || lambda.size() != 3)
        throw ParseError("operator: \"lambda\" must hold exactly three complex values");
    return BnOperator::validate(cplx_from_json(lambda[0]), cplx_from_json(lambda[1]),
                                cplx_from_json(lambda[2]), n);
}

json params_to_json(const CaseParams& p) {
    json zs = json::array();
    for (const cplx& z : p.zs) zs.push_back(cplx_to_json(z));
    return json{{"k", p.k},
                {"r", p.r},
                {"R", p.R},
                {"alpha", cplx_to_json(p.alpha)},
                {"beta", cplx_to_json(p.beta)},
                {"zs", std::move(zs)}};
}

CaseParams params_from_json(const json& j) {
    CaseParams p;
    p.k = need_number(j, "k", "params");
    p.r = need_number(j, "r", "params");
    p.R = need_number(j, "R", "params");
    if (j.contains("alpha")) p.alpha = cplx_from_json(j["alpha"]);
    if (j.contains("beta")) p.beta = cplx_from_json(j["beta"]);
    if (j.contains("zs")) {
        if (!j["zs"].is_array()) throw ParseError("params: \"zs\" must be an array");
        for (const json& z : j["zs"]) p.zs.push_back(cplx_from_json(z));
    }
    return p;
}

json result_to_json(const SlackResult& s) {
    return json{{"statement", s.statement},
                {"z", cplx_to_json(s.z)},
                {"lhs", s.lhs},
                {"rhs", s.rhs},
                {"slack", s.slack},
                {"rel_slack", s.rel_slack},
                {"params",
                 json{{"k", s.k},
                      {"r", s.r},
                      {"R", s.R},
                      {"alpha", cplx_to_json(s.alpha)},
                      {"beta", cplx_to_json(s.beta)}}}};
}

json case_to_json(const Case& c) {
    json out{{"schema", "bnineq/case/v1"}, {"statement", c.statement}};
    if (c.op.has_value()) out["operator"] = operator_to_json(*c.op);
    out["P"] = poly_to_json(c.P);
    if (c.F.has_value()) out["F"] = poly_to_json(*c.F);
    out["params"] = params_to_json(c.params);
    if (!c.thetas.empty()) out["thetas"] = c.thetas;
    out["extrema_tol"] = c.extrema_tol;
    return out;
}

Case case_from_json(const json& j) {
    Case c;
    c.statement = need(j, "statement", "case").get<std::string>();
    if (j.contains("operator")) c.op = operator_from_json(j["operator"]);
    c.P = poly_from_json(need(j, "P", "case"));
    if (j.contains("F")) c.F = poly_from_json(j["F"]);
    c.params = params_from_json(need(j, "params", "case"));
    if (j.contains("thetas")) {
        if (!j["thetas"].is_array()) throw ParseError("case: \"thetas\" must be an array");
        for (const json& t : j["thetas"]) c.thetas.push_back(t.get<double>());
    }
    if (j.contains("extrema_tol")) c.extrema_tol = j["extrema_tol"].get<double>();
    return c;
}

namespace {

const char* ab_mode_name(AbMode m) {
    switch (m) {
        case AbMode::Interior: return "interior";
        case AbMode::Boundary: return "boundary";
        default: return "mixed";
    }
}

AbMode ab_mode_from_name(const std::string& name) {
    if (name == "interior") return AbMode::Interior;
    if (name == "boundary") return AbMode::Boundary;
    if (name == "mixed") return AbMode::Mixed;
    throw ParseError("config: ab_mode must be interior, boundary or mixed");
}

} // namespace

json config_to_json(const SuiteConfig& c) {
    json out{{"statements", c.statement_ids.empty() ? default_statement_ids() : c.statement_ids},
             {"cases", c.cases},
             {"seed", c.seed},
             {"n", json{{"lo", c.n_lo}, {"hi", c.n_hi}}}};
    if (c.k_fixed.has_value()) out["k"] = *c.k_fixed;
    if (c.r_fixed.has_value()) out["r"] = *c.r_fixed;
    if (c.R_fixed.has_value()) out["R"] = *c.R_fixed;
    if (c.alpha_fixed.has_value()) out["alpha"] = cplx_to_json(*c.alpha_fixed);
    if (c.beta_fixed.has_value()) out["beta"] = cplx_to_json(*c.beta_fixed);
    out["ab_mode"] = ab_mode_name(c.ab_mode);
    out["tol"] = c.tol;
    out["extrema_tol"] = c.extrema_tol;
    if (c.rhs_scale != 1.0) out["rhs_scale"] = c.rhs_scale;
    if (c.emit_rows) out["emit_rows"] = true;
    return out;
}

SuiteConfig config_from_json(const json& j) {
    SuiteConfig c;
    if (j.contains("statements")) {
        const json& ids = j["statements"];
        if (ids.is_string()) {
            if (ids.get<std::string>() != "all")
                throw ParseError("config: \"statements\" must be an array or \"all\"");
        } else if (ids.is_array()) {
            for (const json& id : ids) c.statement_ids.push_back(id.get<std::string>());
        } else {
            throw ParseError("config: \"statements\" must be an array or \"all\"");
        }
    }
    if (j.contains("cases")) c.cases = j["cases"].get<int>();
    if (j.contains("seed")) c.seed = j["seed"].get<std::uint64_t>();
    if (j.contains("n")) {
        const json& n = j["n"];
        if (n.is_number()) {
            c.n_lo = c.n_hi = n.get<int>();
        } else {
            c.n_lo = static_cast<int>(need_number(n, "lo", "config n"));
            c.n_hi = static_cast<int>(need_number(n, "hi", "config n"));
        }
    }
    if (j.contains("k")) c.k_fixed = j["k"].get<double>();
    if (j.contains("r")) c.r_fixed = j["r"].get<double>();
    if (j.contains("R")) c.R_fixed = j["R"].get<double>();
    if (j.contains("alpha") && !j["alpha"].is_null()) c.alpha_fixed = cplx_from_json(j["alpha"]);
    if (j.contains("beta") && !j["beta"].is_null()) c.beta_fixed = cplx_from_json(j["beta"]);
    if (j.contains("ab_mode")) c.ab_mode = ab_mode_from_name(j["ab_mode"].get<std::string>());
    if (j.contains("tol")) c.tol = j["tol"].get<double>();
    if (j.contains("extrema_tol")) c.extrema_tol = j["extrema_tol"].get<double>();
    if (j.contains("rhs_scale")) c.rhs_scale = j["rhs_scale"].get<double>();
    if (j.contains("emit_rows")) c.emit_rows = j["emit_rows"].get<bool>();
    return c;
}

json report_to_json(const SuiteReport& r) {
    json stmts = json::array();
    for (const StatementStats& s : r.statements) {
        json entry{{"id", s.id},
                   {"cases", s.cases},
                   {"evaluations", s.evaluations},
                   {"violations", s.violations}};
        if (s.evaluations > 0) {
            entry["worst_rel_slack"] = s.worst_rel_slack;
            entry["max_abs_rel_slack"] = s.max_abs_rel_slack;
            entry["worst_case"] = parse_json(s.worst_case_json);
            entry["worst_result"] = result_to_json(s.worst_result);
        }
        if (!s.rows.empty()) {
            json rows = json::array();
            for (const SlackRow& row : s.rows) {
                json rj = result_to_json(row.result);
                rj.erase("params");
                rj["case_index"] = row.case_index;
                rows.push_back(std::move(rj));
            }
            entry["rows"] = std::move(rows);
        }
        stmts.push_back(std::move(entry));
    }
    return json{{"schema", "bnineq/report/v1"},
                {"mode", r.mode},
                {"seed", r.seed},
                {"statements", std::move(stmts)},
                {"total_evaluations", r.total_evaluations},
                {"total_violations", r.total_violations}};
}

json statements_to_json() {
    json out = json::array();
    for (const StatementInfo& info : statements()) {
        const char* hyp = info.hypothesis == StatementInfo::Zeros::AllInClosedDisk
                              ? "all zeros in |z| <= k"
                          : info.hypothesis == StatementInfo::Zeros::NoneInOpenDisk
                              ? "no zeros in |z| < k"
                              : "none";
        out.push_back(json{{"id", info.id},
                           {"summary", info.summary},
                           {"needs_operator", info.needs_operator},
                           {"needs_f", info.needs_f},
                           {"zero_hypothesis", hyp},
                           {"k_le_1", info.k_le_1},
                           {"classical", info.unit_circle_only},
                           {"has_extremal_family", info.has_extremal_family}});
    }
    return out;
}

} // namespace bnineq
