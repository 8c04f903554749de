#pragma once

// Closed-form norms of pointwise multipliers between weighted sequence spaces
// l_{q1}^{s1,α} -> l_{q2}^{s2,α}.

#include <limits>

#include "alphamod/errors.hpp"
#include "alphamod/rational.hpp"
#include "alphamod/sequence.hpp"

namespace alphamod {

/// The infinitely supported lattice sequence a_k = ⟨k⟩^t, k ∈ Z^n.
template <typename Scalar>
struct PowerWeight {
    Scalar t{0};
    int n = 1;
};

/// ‖{⟨k⟩^{(s2-s1)/(1-α)} a_k}‖_{l_r}, 1/r = max(0, 1/q2 - 1/q1).
/// Dyadic sequences (α = 1) use the weight 2^{j(s2-s1)}.
double seq_multiplier_norm_closed(const IndexedSequence& a, double s1, double s2, double rq1,
                                  double rq2, double alpha);

/// Convergence criterion for the power weight ⟨k⟩^t as a multiplier
/// l_{q1}^{s1,α} -> l_{q2}^{s2,α} (α < 1). With e = t + (s2-s1)/(1-α):
/// r = ∞ needs e <= 0, r < ∞ needs e < -n/r.
template <typename Scalar>
bool power_weight_multiplier_finite(const PowerWeight<Scalar>& a, const Scalar& s1,
                                    const Scalar& s2, const Scalar& rq1, const Scalar& rq2,
                                    const Scalar& alpha) {
    if (!(alpha < Scalar(1))) throw ParameterError("power weights are lattice sequences; alpha must be < 1");
    if (alpha < Scalar(0)) throw ParameterError("alpha must lie in [0,1]");
    const Scalar e = a.t + (s2 - s1) / (Scalar(1) - alpha);
    const Scalar rr = rq2 > rq1 ? rq2 - rq1 : Scalar(0);
    if (rr == Scalar(0)) return e <= Scalar(0);
    return e < -Scalar(a.n) * rr;
}

/// Closed-form multiplier norm of a power weight: +∞ unless the convergence
/// criterion holds, otherwise the l_r sum evaluated by partial sums plus an
/// integral tail.
double seq_multiplier_norm_closed(const PowerWeight<double>& a, double s1, double s2, double rq1,
                                  double rq2, double alpha);

}  // namespace alphamod
