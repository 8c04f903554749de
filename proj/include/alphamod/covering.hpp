#pragma once

// α-coverings of the frequency space and their smooth partitions of unity.
//
// For α < 1 window k ∈ Z^n sits at center ⟨k⟩^{α/(1-α)} k with scale
// ⟨k⟩^{α/(1-α)}. Each window carries an unnormalized bump ρ_k equal to 1 on
// the inner ball (radius c_small·scale) and vanishing outside the support ball
// (radius c_big·scale); η_k = ρ_k / Σ_l ρ_l. For α = 1 the dyadic family
// φ(2^{-j}ξ) - φ(2^{-j+1}ξ) is used instead.

#include <array>
#include <cstdint>
#include <limits>
#include <optional>
#include <string>
#include <vector>

#include <Eigen/Core>

#include "alphamod/errors.hpp"

namespace alphamod {

/// Geometry constants of an α-covering. Radii are in units of the window scale.
struct CoveringSpec {
    double alpha = 0.0;
    int n = 1;
    double c_small = 0.55;  // inner radius: ρ_k = 1 inside
    double c_big = 0.7;     // support radius
    double plateau = 0.3;   // nominal radius of {η_k = 1}, used to size witnesses
    int k_max = std::numeric_limits<int>::max() / 4;  // |k|_∞ bound (α < 1) or j_max (α = 1)

    /// Spacing of adjacent centers relative to the scale for large |k|: 1/(1-α).
    double pitch() const;
    bool dyadic() const { return alpha == 1.0; }

    /// Defaults in units of the pitch P = 1/(1-α):
    /// c_small = 0.55·sqrt(P² + n - 1), c_big = c_small + 0.15·P, plateau = 0.25·P.
    static CoveringSpec defaults(double alpha, int n);
    /// Explicit c_small / c_big (scale units) with the nominal plateau
    /// 0.8·min(c_small, P - c_big), also capped by 0.9·(1 - c_big) for n > 1.
    static CoveringSpec with_constants(double alpha, int n, double c_small, double c_big);

    void validate() const;
};

/// Frequency lattice (1/L)Z^n of a periodic grid with N samples per axis.
/// Bins are addressed by absolute integer coordinates b = offset + m with
/// m ∈ [-N/2, N/2); bin b sits at frequency b / L.
struct FrequencyGrid {
    int n = 1;
    int N = 0;
    double L = 1.0;
    std::array<std::int64_t, 2> offset{0, 0};

    void validate() const;
    std::int64_t bins() const { return n == 1 ? N : std::int64_t(N) * N; }
    std::int64_t lo(int axis) const { return offset[axis] - N / 2; }
    std::int64_t hi(int axis) const { return offset[axis] + N / 2 - 1; }
    double frequency_of_bin(std::int64_t b) const { return double(b) / L; }
    /// Position in FFT storage order of the absolute bin vector.
    std::int64_t storage_index(const std::array<std::int64_t, 2>& bin) const;
    /// Absolute bin of FFT storage position idx.
    std::array<std::int64_t, 2> bin_of_storage(std::int64_t idx) const;

    friend bool operator==(const FrequencyGrid&, const FrequencyGrid&) = default;
};

struct WindowGeometry {
    Eigen::VectorXd center;
    double scale = 1.0;
};

/// center = ⟨k⟩^{α/(1-α)} k, scale = ⟨k⟩^{α/(1-α)}.
WindowGeometry ball_geometry(const Eigen::VectorXi& k, double alpha);

enum class MemberKind { AlphaWindow, Dyadic };

/// One window of a partition sampled on a frequency grid. Samples are kept on
/// the bounding box of the (clipped) support, row-major with axis 0 slowest.
struct PartitionMember {
    MemberKind kind = MemberKind::AlphaWindow;
    Eigen::VectorXi index;  // k, or (j) for dyadic members
    Eigen::VectorXd center;
    double scale = 1.0;
    double inner_radius = 0.0;    // absolute
    double support_radius = 0.0;  // absolute
    // η ≡ 1 on plateau_inner <= |ξ - center| <= plateau_outer (an empty range
    // when plateau_outer < plateau_inner).
    double plateau_inner = 0.0;
    double plateau_outer = 0.0;
    std::array<std::int64_t, 2> box_lo{0, 0};
    std::array<std::int64_t, 2> box_extent{0, 1};
    Eigen::VectorXd samples;

    bool contains_bin(const std::array<std::int64_t, 2>& bin) const;
    double sample(const std::array<std::int64_t, 2>& bin) const;
};

struct Partition {
    CoveringSpec spec;
    FrequencyGrid grid;
    std::vector<PartitionMember> members;
    std::vector<std::uint8_t> safe;  // per bin in FFT storage order
    double min_denominator = 0.0;    // min Σρ over safe bins (α < 1)

    const PartitionMember* find(const Eigen::VectorXi& index) const;
    bool is_safe(std::int64_t storage_idx) const { return safe[std::size_t(storage_idx)] != 0; }
};

/// Analytic evaluator for the α < 1 family (independent of any grid).
class Covering {
public:
    explicit Covering(CoveringSpec spec);

    const CoveringSpec& spec() const { return spec_; }
    WindowGeometry geometry(const Eigen::VectorXi& k) const { return ball_geometry(k, spec_.alpha); }
    double inner_radius(const Eigen::VectorXi& k) const;
    double support_radius(const Eigen::VectorXi& k) const;

    double rho(const Eigen::VectorXi& k, const Eigen::Ref<const Eigen::VectorXd>& xi) const;
    double eta(const Eigen::VectorXi& k, const Eigen::Ref<const Eigen::VectorXd>& xi) const;

    /// All windows whose open support ball meets the closed box [lo, hi].
    std::vector<Eigen::VectorXi> windows_touching(const Eigen::VectorXd& lo, const Eigen::VectorXd& hi) const;
    /// All windows whose support meets the closed ball B(center, radius).
    std::vector<Eigen::VectorXi> windows_touching_ball(const Eigen::VectorXd& center, double radius) const;

    /// Largest radius r with B(center_k, r) ⊆ {η_k = 1}; 0 when the plateau is empty.
    double plateau_radius(const Eigen::VectorXi& k) const;
    /// True when the closed ball B(c, r) lies inside {η_k = 1}.
    bool ball_in_plateau(const Eigen::VectorXi& k, const Eigen::VectorXd& c, double r) const;

private:
    CoveringSpec spec_;
};

/// Evaluates φ of the dyadic family: 1 on |ξ| <= 4/3, 0 on |ξ| >= 3/2.
double dyadic_phi(double radius);
/// Symbol of Δ_j at |ξ| = radius (Δ_0 = φ, Δ_j = φ(2^{-j}·) - φ(2^{-j+1}·)).
double dyadic_symbol(int j, double radius);

/// Samples the partition on a grid. Windows meeting the grid are instantiated
/// when |k|_∞ <= k_max and clipped to the grid; η is evaluated against every
/// window of the infinite family, so clipped samples are exact. A bin is safe
/// when every window reaching it is instantiated.
Partition build_partition(const CoveringSpec& spec, const FrequencyGrid& grid);

enum class NeighborRelation { Lambda, LambdaStar, Gamma, GammaTilde };

struct IndexSet {
    NeighborRelation relation = NeighborRelation::Lambda;
    Eigen::VectorXi anchor;
    std::vector<Eigen::VectorXi> members;  // lexicographically sorted

    bool contains(const Eigen::VectorXi& k) const;
};

/// Λ_k: windows of the same covering meeting supp η_k.
/// Λ*_k: windows meeting some member of Λ_k.
/// Γ_k^{α1,α2}: α1-windows meeting the α2-window k (pass covering α1 as `inner`).
/// Γ~_k^{α1,α2}: α1-windows whose support lies inside {η_k^{α2} = 1}.
/// Members with |l|_∞ > inner.k_max raise TruncationError.
IndexSet neighbor_set(NeighborRelation relation, const Eigen::VectorXi& anchor,
                      const CoveringSpec& outer, const CoveringSpec& inner);
inline IndexSet neighbor_set(NeighborRelation relation, const Eigen::VectorXi& anchor,
                             const CoveringSpec& spec) {
    return neighbor_set(relation, anchor, spec, spec);
}

struct MemberCheck {
    Eigen::VectorXi index;
    double scale = 1.0;
    bool fully_inside = false;     // support not clipped by the grid window
    double outside_max = 0.0;      // max sample outside the support ball
    double plateau_defect = 0.0;   // max |η - 1| on grid bins of the plateau
    double range_defect = 0.0;     // distance of samples from [0,1]
    double gradient_scaled = 0.0;  // max |∇η| · scale (finite differences)
};

struct PartitionReport {
    double sum_deviation = 0.0;  // max |Σ η - 1| over safe bins
    std::int64_t safe_bins = 0;
    int max_overlap = 0;  // max number of members with η > 0 at one bin
    double min_denominator = 0.0;
    double support_violation = 0.0;
    double plateau_violation = 0.0;
    double range_violation = 0.0;
    double gradient_ratio = 0.0;  // max/median of gradient_scaled over fully-inside α-windows
    std::vector<MemberCheck> members;
};

PartitionReport verify_partition(const Partition& partition);

/// max |∇η_k| · ⟨k⟩^{α/(1-α)} per k, by central differences of the analytic η
/// along every coordinate axis through the window center.
std::vector<double> gradient_scale_profile(const Covering& covering,
                                           const std::vector<Eigen::VectorXi>& ks,
                                           int samples_per_radius = 4000);

const char* to_string(NeighborRelation r);

}  // namespace alphamod
