#pragma once

#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "ineq.hpp"

namespace bnineq {

/// Seeded generator with explicit value transforms. Only the raw mt19937_64
/// stream is consumed (no std distributions), so a seed reproduces the same
/// case sequence on every platform.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    std::uint64_t next_u64() { return engine_(); }
    /// uniform on [0, 1) with 53-bit resolution
    double uniform() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }
    double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }
    double log_uniform(double lo, double hi);
    std::uint32_t pick(std::uint32_t bound); // uniform in [0, bound)
    cplx unit_circle();
    /// area-uniform in the closed unit disk
    cplx unit_disk();

private:
    std::mt19937_64 engine_;
};

/// degree-n polynomial with all zeros area-uniform in |z| <= k and leading
/// coefficient of modulus in [0.5, 2].
Poly gen_poly_zeros_in_disk(int n, double k, Rng& rng);

/// degree-n polynomial with zero moduli in [k, k+3]; each root sits exactly
/// on |z| = k with probability 0.1 to exercise the closed/open distinction.
Poly gen_poly_zeros_outside(int n, double k, Rng& rng);

/// Rejection-samples admissible operator triples (components area-uniform in
/// the unit disk); with probability 0.3 one of the canonical triples
/// (1,0,0), (0,2/n,0), (0,0,1) is drawn instead to anchor the reductions.
BnOperator gen_operator(int n, Rng& rng);

enum class AbMode { Interior, Boundary, Mixed };

struct SuiteConfig {
    std::vector<std::string> statement_ids; // empty = the twelve operator statements
    int cases = 100;
    std::uint64_t seed = 0;
    int n_lo = 1;
    int n_hi = 8;
    std::optional<double> k_fixed, r_fixed, R_fixed;
    std::optional<cplx> alpha_fixed, beta_fixed;
    AbMode ab_mode = AbMode::Mixed;
    double tol = 1e-8;         // violation threshold on rel_slack
    double extrema_tol = 1e-9; // circle extrema accuracy
    double rhs_scale = 1.0;    // self-test knob: != 1 corrupts every bound
    bool emit_rows = false;    // retain one row per evaluation (CSV export)

    /// Throws InvalidArgument on unknown ids or parameters incompatible
    /// with a statement's hypotheses (e.g. fixed k > 1 for t2).
    void validate() const;
};

struct SlackRow {
    int case_index = 0;
    SlackResult result;
};

struct StatementStats {
    std::string id;
    int cases = 0;
    long evaluations = 0;
    long violations = 0;
    double worst_rel_slack = 0.0;   // most negative rel_slack seen
    double max_abs_rel_slack = 0.0; // sharpness residual
    std::string worst_case_json;    // re-runnable case payload
    SlackResult worst_result;
    std::vector<SlackRow> rows; // populated when emit_rows
};

struct SuiteReport {
    std::string mode; // "verify" or "sharpness"
    std::uint64_t seed = 0;
    std::vector<StatementStats> statements;
    long total_evaluations = 0;
    long total_violations = 0;
    double wall_ms = 0.0; // console metadata; never serialized
};

/// The twelve operator-statement ids in suite order.
const std::vector<std::string>& default_statement_ids();

/// Fixed evaluation points: 8 unit-circle angles, 4 angles at modulus 1.5,
/// and z = 2. Fixed so that violations are reproducible across runs.
const std::vector<cplx>& fixed_z_samples();

/// Generates config.cases hypothesis-satisfying instances per statement,
/// evaluates them, and aggregates. A case whose worst rel_slack falls below
/// -tol is re-evaluated with the circle-extrema tolerance tightened 100x
/// before it is counted, filtering extremum noise from real counterexamples.
/// The report is a pure function of the config (seed included).
SuiteReport run_suite(const SuiteConfig& config);

/// Evaluates the statement's extremal family (t1/c1: e^{i gamma} F;
/// c2/c3/c4: a z^n; t2/t3/c5/c6: a z^n + b with |a| = |b|, identity
/// operator, k = r = 1) and reports the largest |rel_slack|. Statements
/// without a stated family are rejected.
SuiteReport sharpness_scan(const SuiteConfig& config);

} // namespace bnineq
