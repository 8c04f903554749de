#include "alphamod/multiplier.hpp"

#include <cmath>
#include <numbers>

namespace alphamod {

double seq_multiplier_norm_closed(const IndexedSequence& a, double s1, double s2, double rq1,
                                  double rq2, double alpha) {
    if (rq1 < 0.0 || rq2 < 0.0) throw ParameterError("reciprocal exponents must be >= 0");
    const double e = weight_exponent(a.convention, s2 - s1, alpha);
    const double rr = std::max(0.0, rq2 - rq1);
    Eigen::VectorXd weighted(static_cast<Eigen::Index>(a.size()));
    for (std::size_t i = 0; i < a.size(); ++i)
        weighted(static_cast<Eigen::Index>(i)) = std::pow(a.base(i), e) * std::abs(a.values(i));
    return lq_norm(weighted, rr);
}

double seq_multiplier_norm_closed(const PowerWeight<double>& a, double s1, double s2, double rq1,
                                  double rq2, double alpha) {
    if (!power_weight_multiplier_finite(a, s1, s2, rq1, rq2, alpha))
        return std::numeric_limits<double>::infinity();
    const double e = a.t + (s2 - s1) / (1.0 - alpha);
    const double rr = std::max(0.0, rq2 - rq1);
    if (rr == 0.0) return 1.0;  // sup of ⟨k⟩^e with e <= 0 is attained at k = 0
    const double beta = e / rr;  // exponent of ⟨k⟩ inside the l_r sum
    double sum = 0.0;
    if (a.n == 1) {
        const long K = 20000;
        sum = 1.0;
        for (long k = 1; k <= K; ++k) sum += 2.0 * std::pow(1.0 + double(k) * double(k), beta / 2.0);
        const double edge = K + 0.5;
        sum += 2.0 * std::pow(edge, beta + 1.0) / (-beta - 1.0);
    } else if (a.n == 2) {
        const long K = 400;
        for (long k1 = -K; k1 <= K; ++k1)
            for (long k2 = -K; k2 <= K; ++k2)
                sum += std::pow(1.0 + double(k1 * k1 + k2 * k2), beta / 2.0);
        // Tail outside the square, approximated by the annulus beyond radius K.
        const double edge = K + 0.5;
        sum += 2.0 * std::numbers::pi * std::pow(edge, beta + 2.0) / (-beta - 2.0);
    } else {
        throw ParameterError("numeric power-weight sums are implemented for n <= 2");
    }
    return std::pow(sum, rr);
}

}  // namespace alphamod
