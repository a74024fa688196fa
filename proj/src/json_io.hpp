#pragma once

#include <string>

#include <json.hpp>

#include "harness.hpp"

namespace bnineq {

/// ordered_json keeps insertion order, so serialized reports are
/// byte-reproducible for a given config and seed.
using json = nlohmann::ordered_json;

json cplx_to_json(const cplx& z); // [re, im]
cplx cplx_from_json(const json& j);

json poly_to_json(const Poly& p); // {"n": degree, "coeffs": [[re,im], ...]}
Poly poly_from_json(const json& j);

json operator_to_json(const BnOperator& b); // {"n": n, "lambda": [3 x [re,im]]}
BnOperator operator_from_json(const json& j);

json params_to_json(const CaseParams& p);
CaseParams params_from_json(const json& j);

json result_to_json(const SlackResult& s);

json case_to_json(const Case& c); // schema bnineq/case/v1
Case case_from_json(const json& j);

json config_to_json(const SuiteConfig& c);
SuiteConfig config_from_json(const json& j);

json report_to_json(const SuiteReport& r); // schema bnineq/report/v1

json statements_to_json();

/// Wraps json::parse, rethrowing as ParseError.
json parse_json(const std::string& text);

} // namespace bnineq
