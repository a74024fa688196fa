#include "ineq.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>

#include "errors.hpp"

namespace bnineq {

namespace {

constexpr double two_pi = 2.0 * std::numbers::pi;

SlackResult make_result(const std::string& id, cplx z, double lhs, double rhs,
                        const CaseParams& params) {
    SlackResult out;
    out.statement = id;
    out.z = z;
    out.lhs = lhs;
    out.rhs = rhs;
    out.slack = rhs - lhs;
    out.rel_slack = out.slack / std::max(rhs, 1e-300);
    out.k = params.k;
    out.r = params.r;
    out.R = params.R;
    out.alpha = params.alpha;
    out.beta = params.beta;
    return out;
}

// Zero-location hypotheses extended to constants: a nonzero constant
// vacuously satisfies both; the zero polynomial satisfies neither.
bool zeros_in_closed_disk(const Poly& p, double k) {
    if (p.is_zero()) return false;
    if (p.degree() == 0) return true;
    return all_zeros_in_closed_disk(p, k);
}

bool zeros_off_open_disk(const Poly& p, double k) {
    if (p.is_zero()) return false;
    if (p.degree() == 0) return true;
    return no_zeros_in_open_disk(p, k);
}

void require(bool ok, const std::string& what) {
    if (!ok) throw HypothesisError(what);
}

void require_alpha_zero(const CaseParams& params, const std::string& id) {
    require(params.alpha == cplx{0.0, 0.0}, id + ": requires alpha = 0");
}

void require_beta_zero(const CaseParams& params, const std::string& id) {
    require(params.beta == cplx{0.0, 0.0}, id + ": requires beta = 0");
}

void require_k_le_1(const CaseParams& params, const std::string& id) {
    require(params.k <= 1.0 + 1e-12, id + ": requires k <= 1, got k = " + std::to_string(params.k));
}

void require_degree_n(const Poly& p, int n, const std::string& id) {
    require(p.degree() == n && !p.is_zero(),
            id + ": polynomial degree must equal the operator degree n = " + std::to_string(n));
}

void require_zs(const CaseParams& params, const std::string& id) {
    require(!params.zs.empty(), id + ": needs at least one evaluation point");
}

} // namespace

void CaseParams::validate_and_normalize() {
    if (!(k > 0.0)) throw InvalidArgument("params: k must be positive");
    if (r < k * (1.0 - 1e-12)) throw InvalidArgument("params: r must be >= k");
    if (R < r + 1e-9) throw InvalidArgument("params: R must exceed r (by at least 1e-9)");
    if (std::abs(alpha) > 1.0 + 1e-12) throw InvalidArgument("params: |alpha| must be <= 1");
    if (std::abs(beta) > 1.0 + 1e-12) throw InvalidArgument("params: |beta| must be <= 1");
    for (cplx& z : zs) {
        const double az = std::abs(z);
        if (az < 1.0 - 1e-12)
            throw InvalidArgument("params: evaluation points must satisfy |z| >= 1");
        if (az < 1.0) z /= az;
    }
}

cplx phi_k(const CaseParams& params, int n) {
    const double growth = ipow((params.R + params.k) / (params.k + params.r), n);
    return params.beta * (growth - std::abs(params.alpha)) - params.alpha;
}

Poly operator_pair(const BnOperator& B, const Poly& p, double factor_R, double factor_r, cplx phi) {
    const Poly big = B.apply(p.scale_compose(cplx{factor_R, 0.0}));
    const Poly small = B.apply(p.scale_compose(cplx{factor_r, 0.0}));
    return linear_combine(cplx{1.0, 0.0}, big, phi, small);
}

BoundTerms bound_terms(const BnOperator& B, const CaseParams& params, cplx z) {
    const int n = B.n();
    const cplx phi = phi_k(params, n);
    const cplx scaled = cplx{ipow(params.R, n), 0.0} + ipow(params.r, n) * phi;
    BoundTerms t;
    t.monomial_term = std::abs(B.monomial_image() * ipow(z, n)) / ipow(params.k, n) * std::abs(scaled);
    t.lambda0_term = std::abs(cplx{1.0, 0.0} + phi) * std::abs(B.lambda0());
    return t;
}

SlackResult eval_growth(const Poly& p, double k, double r, double R, double theta) {
    if (!(k > 0.0)) throw InvalidArgument("l1: k must be positive");
    require(R >= r - 1e-12, "l1: needs R >= r");
    require(R * r >= k * k * (1.0 - 1e-12), "l1: needs R*r >= k^2");
    require(zeros_in_closed_disk(p, k), "l1: polynomial must have all zeros in |z| <= k");

    const int n = p.degree();
    const double factor = ipow((R + k) / (r + k), n);
    const double lhs = factor * std::abs(p.eval(std::polar(r, theta)));
    const double rhs = std::abs(p.eval(std::polar(R, theta)));

    CaseParams echo;
    echo.k = k;
    echo.r = r;
    echo.R = R;
    return make_result("l1", std::polar(1.0, theta), lhs, rhs, echo);
}

std::vector<SlackResult> eval_comparison(const BnOperator& B, const Poly& P, const Poly& F,
                                         const CaseParams& params, bool force_alpha_zero,
                                         bool check_ratio) {
    const std::string id = force_alpha_zero ? "c1" : "t1";
    if (force_alpha_zero) require_alpha_zero(params, id);
    require_zs(params, id);
    const int n = B.n();
    require_degree_n(F, n, id + " (F)");
    require(P.degree() <= n, id + ": degree(P) must be at most n");
    require(zeros_in_closed_disk(F, params.k), id + ": F must have all zeros in |z| <= k");
    if (check_ratio) certify_ratio_on_circle(P, F, params.k);

    const cplx phi = phi_k(params, n);
    const Poly wp = operator_pair(B, P, params.R, params.r, phi);
    const Poly wf = operator_pair(B, F, params.R, params.r, phi);

    std::vector<SlackResult> out;
    out.reserve(params.zs.size());
    for (const cplx& z : params.zs)
        out.push_back(make_result(id, z, std::abs(wp.eval(z)), std::abs(wf.eval(z)), params));
    return out;
}

std::vector<SlackResult> eval_max_bound(const BnOperator& B, const Poly& P,
                                        const CaseParams& params, bool force_beta_zero,
                                        double extrema_tol) {
    const std::string id = force_beta_zero ? "c4" : "c2";
    if (force_beta_zero) require_beta_zero(params, id);
    require_zs(params, id);
    const int n = B.n();
    require(P.degree() <= n, id + ": degree(P) must be at most n");

    const cplx phi = phi_k(params, n);
    const Poly wp = operator_pair(B, P, params.R, params.r, phi);
    const double max_p = max_modulus(P, params.k, extrema_tol).value;

    std::vector<SlackResult> out;
    out.reserve(params.zs.size());
    for (const cplx& z : params.zs) {
        const double rhs = bound_terms(B, params, z).monomial_term * max_p;
        out.push_back(make_result(id, z, std::abs(wp.eval(z)), rhs, params));
    }
    return out;
}

SlackResult eval_min_bound(const BnOperator& B, const Poly& F, const CaseParams& params,
                           double extrema_tol) {
    const int n = B.n();
    require_degree_n(F, n, "c3 (F)");
    require(zeros_in_closed_disk(F, params.k), "c3: F must have all zeros in |z| <= k");

    const cplx phi = phi_k(params, n);
    const Poly wf = operator_pair(B, F, params.R, params.r, phi);
    const double min_f = min_modulus(F, params.k, extrema_tol).value;
    const double bound = bound_terms(B, params, cplx{1.0, 0.0}).monomial_term * min_f;
    const CircleExtremum circle_min = min_modulus(wf, 1.0, extrema_tol);

    return make_result("c3", std::polar(1.0, circle_min.theta), bound, circle_min.value, params);
}

std::vector<SlackResult> eval_nonvanishing_bound(const BnOperator& B, const Poly& P,
                                                 const CaseParams& params, double extrema_tol) {
    require_k_le_1(params, "t2");
    require_zs(params, "t2");
    const int n = B.n();
    require_degree_n(P, n, "t2");
    require(zeros_off_open_disk(P, params.k), "t2: P must not vanish in |z| < k");

    const cplx phi = phi_k(params, n);
    const Poly wp = operator_pair(B, P, params.R, params.r, phi);
    const double max_p = max_modulus(P, params.k, extrema_tol).value;

    std::vector<SlackResult> out;
    out.reserve(params.zs.size());
    for (const cplx& z : params.zs) {
        const BoundTerms t = bound_terms(B, params, z);
        const double rhs = 0.5 * (t.monomial_term + t.lambda0_term) * max_p;
        out.push_back(make_result("t2", z, std::abs(wp.eval(z)), rhs, params));
    }
    return out;
}

std::vector<SlackResult> eval_refined_bound(const BnOperator& B, const Poly& P,
                                            const CaseParams& params, RefinedVariant variant,
                                            double extrema_tol) {
    const std::string id = variant == RefinedVariant::Full      ? "t3"
                           : variant == RefinedVariant::AlphaZero ? "c5"
                                                                  : "c6";
    if (variant == RefinedVariant::AlphaZero) require_alpha_zero(params, id);
    if (variant == RefinedVariant::BetaZero) require_beta_zero(params, id);
    require_k_le_1(params, id);
    require_zs(params, id);
    const int n = B.n();
    require_degree_n(P, n, id);
    require(zeros_off_open_disk(P, params.k), id + ": P must not vanish in |z| < k");

    const cplx phi = phi_k(params, n);
    const Poly wp = operator_pair(B, P, params.R, params.r, phi);
    const double max_p = max_modulus(P, params.k, extrema_tol).value;
    const double min_p = min_modulus(P, params.k, extrema_tol).value;

    std::vector<SlackResult> out;
    out.reserve(params.zs.size());
    for (const cplx& z : params.zs) {
        const BoundTerms t = bound_terms(B, params, z);
        const double rhs = 0.5 * ((t.monomial_term + t.lambda0_term) * max_p -
                                  (t.monomial_term - t.lambda0_term) * min_p);
        out.push_back(make_result(id, z, std::abs(wp.eval(z)), rhs, params));
    }
    return out;
}

std::vector<SlackResult> eval_reciprocal_comparison(const BnOperator& B, const Poly& P,
                                                    const CaseParams& params) {
    require_zs(params, "l3");
    const int n = B.n();
    require_degree_n(P, n, "l3");
    require(zeros_off_open_disk(P, params.k), "l3: P must not vanish in |z| < k");

    const cplx phi = phi_k(params, n);
    const double k2 = params.k * params.k;
    const Poly wp = operator_pair(B, P, params.R, params.r, phi);
    const Poly wq = operator_pair(B, P.conj_reciprocal(n), params.R / k2, params.r / k2, phi);
    const double kn = ipow(params.k, n);

    std::vector<SlackResult> out;
    out.reserve(params.zs.size());
    for (const cplx& z : params.zs)
        out.push_back(make_result("l3", z, std::abs(wp.eval(z)), kn * std::abs(wq.eval(z)), params));
    return out;
}

std::vector<SlackResult> eval_two_term_bound(const BnOperator& B, const Poly& P,
                                             const CaseParams& params, double extrema_tol) {
    require_k_le_1(params, "l4");
    require_zs(params, "l4");
    const int n = B.n();
    require(!P.is_zero(), "l4: P must not be the zero polynomial");
    require(P.degree() <= n, "l4: degree(P) must be at most n");

    const cplx phi = phi_k(params, n);
    const double k2 = params.k * params.k;
    const Poly wp = operator_pair(B, P, params.R, params.r, phi);
    const Poly wq = operator_pair(B, P.conj_reciprocal(n), params.R / k2, params.r / k2, phi);
    const double kn = ipow(params.k, n);
    const double max_p = max_modulus(P, params.k, extrema_tol).value;

    std::vector<SlackResult> out;
    out.reserve(params.zs.size());
    for (const cplx& z : params.zs) {
        const BoundTerms t = bound_terms(B, params, z);
        const double lhs = std::abs(wp.eval(z)) + kn * std::abs(wq.eval(z));
        const double rhs = (t.lambda0_term + t.monomial_term) * max_p;
        out.push_back(make_result("l4", z, lhs, rhs, params));
    }
    return out;
}

namespace {

// worst (smallest slack) result over the evaluation points
SlackResult worst_of(std::vector<SlackResult> results) {
    SlackResult worst = results.front();
    for (const SlackResult& s : results)
        if (s.slack < worst.slack) worst = s;
    return worst;
}

} // namespace

SlackResult eval_classic(const std::string& id, const Poly& P, const CaseParams& params,
                         const BnOperator* B, double extrema_tol) {
    const int n = P.degree();
    CaseParams echo = params;
    echo.k = 1.0;
    echo.r = 1.0;

    const bool zero_free_ids = (id == "eq3" || id == "eq4" || id == "eq5" || id == "eq6" ||
                                id == "e8" || id == "qe2");
    if (zero_free_ids)
        require(zeros_off_open_disk(P, 1.0), id + ": P must not vanish in |z| < 1");

    if (id == "eq1" || id == "eq3" || id == "eq5") {
        const CircleExtremum lhs = max_modulus(P.derivative(), 1.0, extrema_tol);
        const double max_p = max_modulus(P, 1.0, extrema_tol).value;
        double rhs = 0.0;
        if (id == "eq1") rhs = n * max_p;
        if (id == "eq3") rhs = 0.5 * n * max_p;
        if (id == "eq5") rhs = 0.5 * n * (max_p - min_modulus(P, 1.0, extrema_tol).value);
        return make_result(id, std::polar(1.0, lhs.theta), lhs.value, rhs, echo);
    }
    if (id == "eq2" || id == "eq4" || id == "eq6") {
        require(params.R >= 1.0, id + ": needs R >= 1");
        echo.R = params.R;
        const double Rn = ipow(params.R, n);
        const CircleExtremum lhs = max_modulus(P, params.R, extrema_tol);
        const double max_p = max_modulus(P, 1.0, extrema_tol).value;
        double rhs = 0.0;
        if (id == "eq2") rhs = Rn * max_p;
        if (id == "eq4") rhs = 0.5 * (Rn + 1.0) * max_p;
        if (id == "eq6")
            rhs = 0.5 * (Rn + 1.0) * max_p -
                  0.5 * (Rn - 1.0) * min_modulus(P, 1.0, extrema_tol).value;
        return make_result(id, std::polar(1.0, lhs.theta), lhs.value, rhs, echo);
    }
    if (id == "e7" || id == "e8") {
        require(params.R >= 1.0 + 1e-9, id + ": needs R > 1");
        require(std::abs(params.alpha) <= 1.0 + 1e-12, id + ": needs |alpha| <= 1");
        require(std::abs(params.beta) <= 1.0 + 1e-12, id + ": needs |beta| <= 1");
        require_zs(params, id);
        echo.R = params.R;
        CaseParams unit = echo; // k = r = 1 view of the same alpha/beta/R
        const cplx phi = phi_k(unit, n);
        const Poly w = linear_combine(cplx{1.0, 0.0}, P.scale_compose(cplx{params.R, 0.0}), phi, P);
        const double max_p = max_modulus(P, 1.0, extrema_tol).value;
        const cplx factor = cplx{ipow(params.R, n), 0.0} + phi;

        std::vector<SlackResult> results;
        for (const cplx& z : params.zs) {
            const double lhs = std::abs(w.eval(z));
            double rhs = 0.0;
            if (id == "e7") rhs = ipow(std::abs(z), n) * std::abs(factor) * max_p;
            if (id == "e8")
                rhs = 0.5 *
                      (std::abs(factor) * ipow(std::abs(z), n) + std::abs(cplx{1.0, 0.0} + phi)) *
                      max_p;
            results.push_back(make_result(id, z, lhs, rhs, echo));
        }
        return worst_of(std::move(results));
    }
    if (id == "qe1" || id == "qe2") {
        if (B == nullptr) throw InvalidArgument(id + ": needs an operator");
        require(P.degree() <= B->n(), id + ": degree(P) must be at most the operator degree");
        require_zs(params, id);
        const Poly bp = B->apply(P);
        const double max_p = max_modulus(P, 1.0, extrema_tol).value;
        const cplx mn = B->monomial_image();

        std::vector<SlackResult> results;
        for (const cplx& z : params.zs) {
            const double image = std::abs(mn * ipow(z, B->n()));
            const double lhs = std::abs(bp.eval(z));
            const double rhs = (id == "qe1") ? image * max_p
                                             : 0.5 * (image + std::abs(B->lambda0())) * max_p;
            results.push_back(make_result(id, z, lhs, rhs, echo));
        }
        return worst_of(std::move(results));
    }
    throw InvalidArgument("unknown classical statement id: " + id);
}

void certify_ratio_on_circle(const Poly& P, const Poly& F, double k) {
    const int grid = std::max(4096, 256 * std::max(P.degree(), F.degree()));
    const double step = two_pi / grid;
    std::vector<double> fmod(static_cast<size_t>(grid));
    double max_f = 0.0;
    for (int i = 0; i < grid; ++i) {
        fmod[static_cast<size_t>(i)] = std::abs(F.eval(std::polar(k, i * step)));
        max_f = std::max(max_f, fmod[static_cast<size_t>(i)]);
    }
    if (max_f == 0.0) throw HypothesisError("t1: F vanishes identically on |z| = k");
    const double band = 1e-8 * max_f;
    for (int i = 0; i < grid; ++i) {
        if (fmod[static_cast<size_t>(i)] <= band) continue; // boundary zero of F
        const double pmod = std::abs(P.eval(std::polar(k, i * step)));
        if (pmod > fmod[static_cast<size_t>(i)] * (1.0 + 1e-9)) {
            std::ostringstream msg;
            msg << "t1: |P| exceeds |F| on |z| = k at theta = " << i * step << " (" << pmod
                << " > " << fmod[static_cast<size_t>(i)] << ")";
            throw HypothesisError(msg.str());
        }
    }
}

const std::vector<StatementInfo>& statements() {
    using Z = StatementInfo::Zeros;
    static const std::vector<StatementInfo> table = {
        {"l1", "growth of |P(Rz)| against ((R+k)/(r+k))^n |P(rz)| on |z|=1, zeros of P in |z|<=k",
         false, false, true, false, false, Z::AllInClosedDisk, false},
        {"l3", "|B[P.sigma]+Phi B[P.rho]| <= k^n |B[Q.tau]+Phi B[Q.eta]|, P zero-free in |z|<k",
         true, false, false, false, false, Z::NoneInOpenDisk, false},
        {"l4", "two-term bound: |W_P| + k^n |W_Q| <= (|lambda0||1+Phi| + |B[z^n]|/k^n |R^n+r^n Phi|) Max|P|",
         true, false, false, true, false, Z::None, false},
        {"t1", "comparison |W_P| <= |W_F| for |P| <= |F| on |z|=k, zeros of F in |z|<=k",
         true, true, false, false, false, Z::AllInClosedDisk, true},
        {"c1", "t1 with alpha = 0", true, true, false, false, false, Z::AllInClosedDisk, true},
        {"c2", "max bound |W_P| <= |B[z^n]|/k^n |R^n+r^n Phi| Max|P|",
         true, false, false, false, false, Z::None, true},
        {"c3", "min bound Min|W_F| >= |B[z^n]|/k^n |R^n+r^n Phi| Min|F|, zeros of F in |z|<=k",
         true, false, false, false, false, Z::AllInClosedDisk, true},
        {"c4", "c2 with beta = 0", true, false, false, false, false, Z::None, true},
        {"t2", "nonvanishing bound with (|B[z^n]|/k^n |R^n+r^n Phi| + |1+Phi||lambda0|)/2",
         true, false, false, true, false, Z::NoneInOpenDisk, true},
        {"t3", "refinement of t2 subtracting the Min|P| term", true, false, false, true, false,
         Z::NoneInOpenDisk, true},
        {"c5", "t3 with alpha = 0", true, false, false, true, false, Z::NoneInOpenDisk, true},
        {"c6", "t3 with beta = 0 (extremal family a z^n + b, |a| = |b|)", true, false, false, true,
         false, Z::NoneInOpenDisk, true},
        {"eq1", "Max|P'| <= n Max|P| on |z|=1", false, false, false, false, true, Z::None, false},
        {"eq2", "Max_{|z|=R}|P| <= R^n Max_{|z|=1}|P|", false, false, false, false, true, Z::None,
         false},
        {"eq3", "Max|P'| <= n/2 Max|P| for P zero-free in |z|<1", false, false, false, false, true,
         Z::NoneInOpenDisk, false},
        {"eq4", "Max_{|z|=R}|P| <= (R^n+1)/2 Max|P| for P zero-free in |z|<1", false, false, false,
         false, true, Z::NoneInOpenDisk, false},
        {"eq5", "Max|P'| <= n/2 (Max|P| - Min|P|) for P zero-free in |z|<1", false, false, false,
         false, true, Z::NoneInOpenDisk, false},
        {"eq6", "Max_{|z|=R}|P| <= (R^n+1)/2 Max|P| - (R^n-1)/2 Min|P|, P zero-free in |z|<1",
         false, false, false, false, true, Z::NoneInOpenDisk, false},
        {"e7", "|P(Rz) + Phi_1 P(z)| <= |z|^n |R^n + Phi_1| Max|P|", false, false, false, false,
         true, Z::None, false},
        {"e8", "e7 bound halved and augmented for P zero-free in |z|<1", false, false, false,
         false, true, Z::NoneInOpenDisk, false},
        {"qe1", "|B[P](z)| <= |B[z^n]| Max|P| for |z| >= 1", true, false, false, false, true,
         Z::None, false},
        {"qe2", "|B[P](z)| <= (|B[z^n]|+|lambda0|)/2 Max|P|, P zero-free in |z|<1", true, false,
         false, false, true, Z::NoneInOpenDisk, false},
    };
    return table;
}

const StatementInfo* find_statement(const std::string& id) {
    for (const StatementInfo& info : statements())
        if (info.id == id) return &info;
    return nullptr;
}

std::vector<SlackResult> evaluate_case(const Case& c, bool check_ratio) {
    const StatementInfo* info = find_statement(c.statement);
    if (info == nullptr) throw InvalidArgument("unknown statement id: " + c.statement);

    if (info->theta_based) {
        if (c.thetas.empty()) throw InvalidArgument(c.statement + ": needs at least one theta");
        std::vector<SlackResult> out;
        out.reserve(c.thetas.size());
        for (double theta : c.thetas)
            out.push_back(eval_growth(c.P, c.params.k, c.params.r, c.params.R, theta));
        return out;
    }

    CaseParams params = c.params;
    if (!info->unit_circle_only) params.validate_and_normalize();

    if (info->unit_circle_only) { // classical reductions
        const BnOperator* op = c.op.has_value() ? &*c.op : nullptr;
        return {eval_classic(c.statement, c.P, params, op, c.extrema_tol)};
    }

    if (!c.op.has_value()) throw InvalidArgument(c.statement + ": needs an operator");
    const BnOperator& B = *c.op;

    if (c.statement == "t1" || c.statement == "c1") {
        if (!c.F.has_value()) throw InvalidArgument(c.statement + ": needs the majorant F");
        return eval_comparison(B, c.P, *c.F, params, c.statement == "c1", check_ratio);
    }
    if (c.statement == "c2") return eval_max_bound(B, c.P, params, false, c.extrema_tol);
    if (c.statement == "c4") return eval_max_bound(B, c.P, params, true, c.extrema_tol);
    if (c.statement == "c3") return {eval_min_bound(B, c.P, params, c.extrema_tol)};
    if (c.statement == "t2") return eval_nonvanishing_bound(B, c.P, params, c.extrema_tol);
    if (c.statement == "t3")
        return eval_refined_bound(B, c.P, params, RefinedVariant::Full, c.extrema_tol);
    if (c.statement == "c5")
        return eval_refined_bound(B, c.P, params, RefinedVariant::AlphaZero, c.extrema_tol);
    if (c.statement == "c6")
        return eval_refined_bound(B, c.P, params, RefinedVariant::BetaZero, c.extrema_tol);
    if (c.statement == "l3") return eval_reciprocal_comparison(B, c.P, params);
    if (c.statement == "l4") return eval_two_term_bound(B, c.P, params, c.extrema_tol);

    throw InvalidArgument("unhandled statement id: " + c.statement);
}

} // namespace bnineq
