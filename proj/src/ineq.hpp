#pragma once

#include <optional>
#include <string>
#include <vector>

#include "bnop.hpp"
#include "circle.hpp"

namespace bnineq {

/// Shared parameter block for one inequality instance:
/// 0 < k <= r < R, |alpha| <= 1, |beta| <= 1, evaluation points |z| >= 1.
struct CaseParams {
    double k = 1.0;
    double r = 1.0;
    double R = 2.0;
    cplx alpha{0.0, 0.0};
    cplx beta{0.0, 0.0};
    std::vector<cplx> zs;

    /// Enforces the constraints (R >= r + 1e-9, |alpha|,|beta| <= 1 with
    /// 1e-12 slop) and radially projects evaluation points with
    /// |z| in [1 - 1e-12, 1) onto the unit circle. Throws InvalidArgument.
    void validate_and_normalize();
};

/// One evaluated inequality instance at one point.
struct SlackResult {
    std::string statement;
    cplx z{0.0, 0.0};
    double lhs = 0.0;
    double rhs = 0.0;
    double slack = 0.0;      // rhs - lhs
    double rel_slack = 0.0;  // slack / max(rhs, 1e-300); <= 1 always
    // echoed instance parameters
    double k = 0.0, r = 0.0, R = 0.0;
    cplx alpha{0.0, 0.0}, beta{0.0, 0.0};
};

/// Phi_k(R, r, alpha, beta) = beta*{((R+k)/(k+r))^n - |alpha|} - alpha.
cplx phi_k(const CaseParams& params, int n);

/// B[p o sigma](z) + phi * B[p o rho](z) as a polynomial, where sigma and
/// rho scale by factor_R and factor_r.
Poly operator_pair(const BnOperator& B, const Poly& p, double factor_R, double factor_r, cplx phi);

/// The two scalar weights shared by the bound-type statements at a point z:
/// monomial_term = |m_n z^n| / k^n * |R^n + r^n Phi|  (m_n = B[z^n] scale),
/// lambda0_term  = |1 + Phi| * |lambda0|.
struct BoundTerms {
    double monomial_term = 0.0;
    double lambda0_term = 0.0;
};
BoundTerms bound_terms(const BnOperator& B, const CaseParams& params, cplx z);

// --- statement evaluators -------------------------------------------------
//
// Each evaluator checks its hypotheses (throwing HypothesisError) and
// returns signed slacks; slack >= 0 is the verified claim. Statement ids
// follow the CLI vocabulary: l1, l3, l4, t1, c1..c6, t2, t3 and the
// classical reductions eq1..eq6, e7, e8, qe1, qe2.

/// l1: |p(R e^{i theta})| >= ((R+k)/(r+k))^n |p(r e^{i theta})| for
/// polynomials with all zeros in |z| <= k, R >= r, R*r >= k^2.
SlackResult eval_growth(const Poly& p, double k, double r, double R, double theta);

/// t1 (alpha free) / c1 (alpha = 0): |B[P o sigma] + Phi B[P o rho]| <=
/// |B[F o sigma] + Phi B[F o rho]| at each z, for F with all zeros in
/// |z| <= k and |P| <= |F| on the circle. With check_ratio the |P| <= |F|
/// hypothesis is certified by an angular grid scan that skips a small band
/// around the boundary zeros of F; otherwise the caller vouches for it.
std::vector<SlackResult> eval_comparison(const BnOperator& B, const Poly& P, const Poly& F,
                                         const CaseParams& params, bool force_alpha_zero,
                                         bool check_ratio);

/// c2 (beta free) / c4 (beta = 0): |B[P o sigma] + Phi B[P o rho]| <=
/// (|B[z^n]|/k^n) |R^n + r^n Phi| Max_{|w|=k}|P|.
std::vector<SlackResult> eval_max_bound(const BnOperator& B, const Poly& P,
                                        const CaseParams& params, bool force_beta_zero,
                                        double extrema_tol);

/// c3: Min_{|w|=1}|B[F o sigma](w) + Phi B[F o rho](w)| >=
/// (|m_n|/k^n) |R^n + r^n Phi| Min_{|w|=k}|F| for F with all zeros in
/// |z| <= k. Returned with the circle minimum as rhs so that slack >= 0
/// is still the claim; z reports the achieved minimizer.
SlackResult eval_min_bound(const BnOperator& B, const Poly& F, const CaseParams& params,
                           double extrema_tol);

/// t2: for P of degree n without zeros in |z| < k, k <= 1:
/// lhs <= 1/2 [monomial_term + lambda0_term] Max_{|w|=k}|P|.
std::vector<SlackResult> eval_nonvanishing_bound(const BnOperator& B, const Poly& P,
                                                 const CaseParams& params, double extrema_tol);

/// t3 (both free) / c5 (alpha = 0) / c6 (beta = 0): refinement of t2,
/// rhs = 1/2 [(T + L) Max - (T - L) Min] with T/L the bound terms.
enum class RefinedVariant { Full, AlphaZero, BetaZero };
std::vector<SlackResult> eval_refined_bound(const BnOperator& B, const Poly& P,
                                            const CaseParams& params, RefinedVariant variant,
                                            double extrema_tol);

/// l3: for P of degree n without zeros in |z| < k:
/// |B[P o sigma] + Phi B[P o rho]| <= k^n |B[Q o tau] + Phi B[Q o eta]|
/// with Q the conjugate reciprocal and tau/eta the R/k^2, r/k^2 scalings.
std::vector<SlackResult> eval_reciprocal_comparison(const BnOperator& B, const Poly& P,
                                                    const CaseParams& params);

/// l4: |B[P o sigma] + Phi B[P o rho]| + k^n |B[Q o tau] + Phi B[Q o eta]|
/// <= [lambda0_term + monomial_term] Max_{|w|=k}|P| for any nonzero P of
/// degree at most n, k <= 1.
std::vector<SlackResult> eval_two_term_bound(const BnOperator& B, const Poly& P,
                                             const CaseParams& params, double extrema_tol);

/// Classical reductions eq1..eq6, e7, e8, qe1, qe2 (unit circle, r = 1).
/// qe1/qe2 need an operator; the z-dependent ids (e7, e8, qe1, qe2) are
/// evaluated at every point of params.zs and the worst slack is returned.
SlackResult eval_classic(const std::string& id, const Poly& P, const CaseParams& params,
                         const BnOperator* B, double extrema_tol);

/// Grid certificate for the t1 hypothesis |P| <= |F| on |z| = k. Angles
/// where |F| dips below 1e-8 * Max|F| (boundary zeros of F) are excluded.
/// Throws HypothesisError when the ratio exceeds 1 + 1e-9.
void certify_ratio_on_circle(const Poly& P, const Poly& F, double k);

// --- statement catalogue ----------------------------------------------------

struct StatementInfo {
    std::string id;
    std::string summary;
    bool needs_operator = false;
    bool needs_f = false;       // comparison statements carry a second polynomial
    bool theta_based = false;   // l1 evaluates at angles, not at z points
    bool k_le_1 = false;
    bool unit_circle_only = false; // classical ids pin k = r = 1
    enum class Zeros { None, AllInClosedDisk, NoneInOpenDisk } hypothesis = Zeros::None;
    bool has_extremal_family = false;
};

const std::vector<StatementInfo>& statements();
const StatementInfo* find_statement(const std::string& id);

/// A fully specified instance: statement id plus everything its evaluator
/// needs. `thetas` replaces params.zs for l1.
struct Case {
    std::string statement;
    std::optional<BnOperator> op;
    Poly P;
    std::optional<Poly> F;
    CaseParams params;
    std::vector<double> thetas;
    double extrema_tol = 1e-9;
};

/// Dispatches to the right evaluator. check_ratio applies to t1/c1 only
/// (user-supplied pairs get the grid certificate; generated ones skip it).
std::vector<SlackResult> evaluate_case(const Case& c, bool check_ratio = true);

} // namespace bnineq
