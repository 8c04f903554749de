#pragma once

// α-modulation and Besov norms of grid functions, computed piece by piece
// from a sampled partition of unity.

#include <utility>
#include <vector>

#include <Eigen/Core>

#include "alphamod/covering.hpp"
#include "alphamod/grid.hpp"
#include "alphamod/params.hpp"

namespace alphamod {

struct NormResult {
    double value = 0.0;
    std::vector<std::pair<Eigen::VectorXi, double>> pieces;  // window index -> ‖□ f‖_p (nonzero pieces only)
};

/// Largest tolerated spectral amplitude outside the safe window, relative to the total.
inline constexpr double kBandLimitTolerance = 1e-10;

/// ‖f‖ in M^{s,α}_{p,q} (α < 1) or B^s_{p,q} (α = 1) using the members of `partition`.
/// Throws TruncationError when f is not band-limited to the safe window.
NormResult space_norm(const GridFunction& f, const Space& params, const Partition& partition);

/// Same, from a precomputed spectrum of f.
NormResult space_norm_spectrum(const GridFunction& spectrum, const Space& params, const Partition& partition);

/// ‖{‖□_k^{α2} f‖_{M^{0,α1}_{p,q}}}_k‖_{l_q^{s,α2}} for α1 <= α2. `inner` is the α1
/// partition, `outer` the α2 partition (dyadic when α2 = 1).
NormResult coarse_norm(const GridFunction& f, double s, double rp, double rq, const Partition& inner,
                       const Partition& outer);

}  // namespace alphamod
