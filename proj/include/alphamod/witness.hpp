#pragma once

// Test functions realizing the lower bounds of localized operator norms: a
// single bump adapted to one window, and translated sums of bumps over the
// windows of a finer covering absorbed by one window of a coarser covering.

#include <vector>

#include <Eigen/Core>

#include "alphamod/covering.hpp"
#include "alphamod/grid.hpp"

namespace alphamod {

/// Base spectrum profile in units of the window scale: 1 on |ξ| <= inner,
/// vanishing for |ξ| >= radius.
struct WitnessProfile {
    double radius = 0.2;
    double inner = 0.05;

    /// radius = 0.8 · nominal plateau of the covering, inner = radius / 4.
    static WitnessProfile for_covering(const CoveringSpec& spec);
};

/// f_l with f̂_l(ξ) = bump((ξ - center_l) / scale_l). With `require_plateau`
/// the rescaled support must lie inside {η_l = 1} (GeometryError otherwise).
/// TruncationError when the support leaves the grid's frequency window.
GridFunction witness_bump(const Eigen::VectorXi& l, const CoveringSpec& covering, const WitnessProfile& profile,
                          const FrequencyGrid& grid, bool require_plateau = true);

struct SpreadWitness {
    GridFunction f;
    std::vector<Eigen::VectorXi> indices;  // windows of the finer covering carrying one bump each
    double pitch = 0.0;
    bool singleton_fallback = false;
};

/// Σ_l f_l(· - pitch·(l - l_0)) over the finer-covering windows l absorbed by
/// window k of the coarser covering (l_0 the first such window). `fine` must
/// have alpha <= coarse.alpha. With equal alphas no window is absorbed and the
/// single bump f_k is returned (singleton_fallback). GeometryError when the
/// translates do not fit into one period.
SpreadWitness witness_spread(const Eigen::VectorXi& k, const CoveringSpec& fine, const CoveringSpec& coarse,
                             double pitch, const WitnessProfile& profile, const FrequencyGrid& grid);

/// Support radius of the witness bump of window l (absolute frequency units).
double witness_radius(const Eigen::VectorXi& l, const CoveringSpec& covering, const WitnessProfile& profile);

}  // namespace alphamod
