#include "alphamod/sequence.hpp"

#include <cmath>

namespace alphamod {

void IndexedSequence::push(const Eigen::VectorXi& index, double value) {
    const int expected = convention == IndexConvention::Lattice ? n : 1;
    if (index.size() != expected) throw ParameterError("sequence index has the wrong length");
    if (convention == IndexConvention::Dyadic && index(0) < 0)
        throw ParameterError("dyadic index j must be >= 0");
    indices.push_back(index);
    values.conservativeResize(values.size() + 1);
    values(values.size() - 1) = value;
}

double IndexedSequence::base(std::size_t i) const {
    if (convention == IndexConvention::Dyadic) return std::ldexp(1.0, indices[i](0));
    return japanese_bracket(indices[i]);
}

double japanese_bracket(const Eigen::Ref<const Eigen::VectorXd>& k) {
    return std::sqrt(1.0 + k.squaredNorm());
}

double japanese_bracket(const Eigen::VectorXi& k) {
    return std::sqrt(1.0 + static_cast<double>(k.cast<long long>().squaredNorm()));
}

double weight_exponent(IndexConvention convention, double s, double alpha) {
    if (alpha < 0.0 || alpha > 1.0) throw ParameterError("alpha must lie in [0,1]");
    if (convention == IndexConvention::Dyadic) {
        if (alpha != 1.0) throw ParameterError("dyadic indexing requires alpha = 1");
        return s;
    }
    if (alpha == 1.0) throw ParameterError("alpha = 1 sequences must use dyadic indexing");
    return s / (1.0 - alpha);
}

double lq_norm(const Eigen::Ref<const Eigen::VectorXd>& values, double rq) {
    if (rq < 0.0) throw ParameterError("reciprocal exponent must be >= 0");
    if (values.size() == 0) return 0.0;
    if (rq == 0.0) return values.cwiseAbs().maxCoeff();
    const double q = 1.0 / rq;
    // Scale by the largest entry to keep large q away from overflow.
    const double peak = values.cwiseAbs().maxCoeff();
    if (peak == 0.0) return 0.0;
    double acc = 0.0;
    for (Eigen::Index i = 0; i < values.size(); ++i) acc += std::pow(std::abs(values(i)) / peak, q);
    return peak * std::pow(acc, rq);
}

double sequence_norm(const IndexedSequence& lambda, double s, double rq, double alpha) {
    const double e = weight_exponent(lambda.convention, s, alpha);
    Eigen::VectorXd weighted(static_cast<Eigen::Index>(lambda.size()));
    for (std::size_t i = 0; i < lambda.size(); ++i)
        weighted(static_cast<Eigen::Index>(i)) = std::pow(lambda.base(i), e) * lambda.values(i);
    return lq_norm(weighted, rq);
}

}  // namespace alphamod
