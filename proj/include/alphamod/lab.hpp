#pragma once

// Numerical lower bounds for localized operator norms between α-modulation
// spaces, exponent fits of their growth, and cross-checks of the closed forms
// (index A, multiplier norms, coarse norms, dilation and Bernstein scaling).

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <Eigen/Core>

#include "alphamod/covering.hpp"
#include "alphamod/grid.hpp"
#include "alphamod/index_calculus.hpp"
#include "alphamod/params.hpp"
#include "alphamod/sequence.hpp"

namespace alphamod {

enum class WitnessKind { Uniform, Concentrated, Spread, MonteCarlo };
const char* to_string(WitnessKind kind);

struct OpNormSample {
    int j = 0;           // nominal octave: ⟨k⟩^{1/(1-α∨)} ≈ 2^j
    double j_eff = 0.0;  // log2 ⟨k⟩ / (1 - α∨), the fit abscissa
    Eigen::VectorXi k;
    WitnessKind kind = WitnessKind::Uniform;
    double lower_bound = 0.0;  // ‖□_k^{α∨} w‖_{M2} / ‖w‖_{M1}
    bool relaxed = false;      // bump not absorbed by a plateau, or singleton spread fallback
};

struct ExponentFit {
    double slope = 0.0;
    double intercept = 0.0;
    double r2 = 0.0;
    std::vector<std::pair<double, double>> samples;  // (x, log2 value)
};

/// Least-squares line through (x, log2 value). Needs >= 3 points and positive values.
ExponentFit exponent_fit(const std::vector<std::pair<double, double>>& points);

struct LabOptions {
    int j_min = 4;
    int j_max = 9;
    int mc_trials = 64;
    std::uint64_t seed = 1;
    double tolerance = 0.15;
    int max_N = 1 << 16;    // per-axis cap, n = 1
    int max_N_2d = 512;     // per-axis cap, n = 2
    bool pitch_check = true;
    std::optional<std::pair<double, double>> constants;  // (c_small, c_big) override
};

/// Covering used by the lab for a given alpha: defaults, or the constant override.
CoveringSpec lab_covering(double alpha, int n, const LabOptions& options);

/// Window index on the positive e1 ray with ⟨k⟩^{1/(1-α)} closest to 2^j.
Eigen::VectorXi ray_index(int j, double alpha, int n);

struct BoxOpnormResult {
    std::vector<OpNormSample> witnesses;  // uniform, concentrated, spread
    std::size_t spread_count = 0;
    double orthogonality_error = 0.0;        // |‖F‖_p^p / Σ‖f_l‖_p^p - 1| at p = p2
    std::optional<double> pitch_stability;   // relative change of the spread ratio when the pitch doubles
    int largest_N = 0;
};

/// Three witness lower bounds for ‖□_k^{α1∨α2} | M^{0,α1}_{p1,q1} -> M^{0,α2}_{p2,q2}‖.
/// Smoothness s of the spaces is ignored (set to 0). Requires 1/p2 <= 1/p1 and α1∨α2 < 1.
BoxOpnormResult box_opnorm_lower(const Eigen::VectorXi& k, int j, const Space& source, const Space& target,
                                 const LabOptions& options);

/// Running maximum of the ratio over `trials` random inputs with complex Gaussian
/// spectrum on supp η_k^{α∨}, seeded per trial from (seed, k, trial), and over the
/// supplied witness samples.
OpNormSample box_opnorm_montecarlo(const Eigen::VectorXi& k, int j, const Space& source, const Space& target,
                                   int trials, std::uint64_t seed, const LabOptions& options,
                                   const std::vector<OpNormSample>& witnesses = {});

struct RateReport {
    Space source;
    Space target;
    LabOptions options;
    IndexBreakdown<double> predicted;
    std::vector<OpNormSample> samples;
    ExponentFit uniform, concentrated, spread;
    ExponentFit envelope;  // fit of the per-j maximum over witnesses
    std::optional<ExponentFit> montecarlo;
    WitnessKind steepest = WitnessKind::Uniform;
    double witness_slope = 0.0;  // largest fitted slope over the witness kinds
    double worst_orthogonality_error = 0.0;
    std::optional<double> worst_pitch_stability;
    bool pass = false;  // |witness_slope - A| <= tolerance
};

/// Sweeps j over [j_min, j_max] and fits the growth of each witness kind
/// against the predicted index A. Requires q1 = q2.
RateReport rate_check(const Space& source, const Space& target, const LabOptions& options);

/// Estimate of the multiplier norm of `a` from l_{q1}^{s1,α} to l_{q2}^{s2,α}:
/// best of unit masses, the Hölder extremal and `trials` random perturbations.
double seq_multiplier_norm_bruteforce(const IndexedSequence& a, double s1, double s2, double rq1, double rq2,
                                      double alpha, int trials, std::uint64_t seed);

struct ConsistencyReport {
    Space source;
    Space target;
    double margin = 0.0;
    bool embeds = false;
    bool skipped = false;   // |margin| <= band
    std::vector<double> measured;              // lower bounds a_k, k = 0..K_max on the e1 ray
    std::vector<std::pair<int, double>> norms; // (K, truncated multiplier norm)
    double growth_slope = 0.0;                 // fitted d log(norm) / d log K
    bool grows = false;
    bool consistent = true;
};

/// Directional check that measured localized norms, used as a multiplier
/// sequence, grow or stay bounded as the embedding verdict demands (n = 1).
ConsistencyReport embedding_consistency_check(const Space& source, const Space& target, int K_max,
                                              const LabOptions& options, double band = 0.2);

struct CoarseRatioReport {
    std::vector<double> ratios;  // coarse_norm / space_norm per trial
    double max_over_min = 0.0;
};

/// Ratio of the coarse (α2-outer) norm to the α1 norm over random band-limited f.
CoarseRatioReport coarse_ratio_check(const Space& params, double alpha2, int trials, std::uint64_t seed,
                                const FrequencyGrid& grid, double band_radius);

struct ScalingReport {
    std::vector<double> parameters;  // λ or support radius
    std::vector<double> ratios;      // ‖h‖_{p2} / ‖h‖_{p1}
    double slope = 0.0;              // d log ratio / d log parameter
    double expected = 0.0;
    bool pass = false;
};

struct DilationReport : ScalingReport {
    double blowup_rate = 0.0;  // d log ratio / d log(1/λ) = -slope
    double expected_blowup = 0.0;
    bool truncated = false;    // sweep stopped at the grid resolution
};

/// ĥ_λ(ξ) = ĥ(ξ/λ) for λ = 2^0 .. 2^{-octaves}. The slope against log λ is
/// n(1/p1 - 1/p2); the blow-up rate against log(1/λ) is n(1/p2 - 1/p1).
DilationReport dilation_necessity_check(double rp1, double rp2, int n, int octaves = 4, double tolerance = 0.1);

/// Bumps with support radius R = R0·2^i, i = 0..octaves; slope of
/// log(‖f‖_{p2}/‖f‖_{p1}) against log R, expected n(1/p1 - 1/p2).
ScalingReport bernstein_check(double rp1, double rp2, int n, int octaves = 4, double tolerance = 0.1);

}  // namespace alphamod
