#pragma once

#include <vector>

#include <Eigen/Core>

#include "alphamod/errors.hpp"

namespace alphamod {

/// Lattice sequences are indexed by k ∈ Z^n (α < 1); dyadic ones by j ≥ 0 (α = 1).
enum class IndexConvention { Lattice, Dyadic };

/// Finitely supported real sequence on Z^n or on the dyadic levels N.
struct IndexedSequence {
    IndexConvention convention = IndexConvention::Lattice;
    int n = 1;
    std::vector<Eigen::VectorXi> indices;  // n-vectors (lattice) or 1-vectors holding j
    Eigen::VectorXd values;

    std::size_t size() const { return indices.size(); }

    static IndexedSequence lattice(int n) { return {IndexConvention::Lattice, n, {}, {}}; }
    static IndexedSequence dyadic() { return {IndexConvention::Dyadic, 1, {}, {}}; }

    void push(const Eigen::VectorXi& index, double value);

    /// Unit-free weight ⟨k⟩ for lattice indices, 2^j for dyadic ones.
    double base(std::size_t i) const;
};

/// ⟨k⟩ = (1 + |k|^2)^{1/2}.
double japanese_bracket(const Eigen::Ref<const Eigen::VectorXd>& k);
double japanese_bracket(const Eigen::VectorXi& k);

/// Weight exponent per index so that weight = base^{exponent}: s/(1-α) for
/// lattice sequences, s (in log2 units) for dyadic ones. Throws when the
/// convention does not match alpha.
double weight_exponent(IndexConvention convention, double s, double alpha);

/// ‖λ‖ in l_q^{s,α}: weighted l_q with weights ⟨k⟩^{s/(1-α)} (α < 1) or 2^{js} (α = 1).
/// rq = 0 gives the weighted supremum. Quasi-norms (q < 1) use the same formula.
double sequence_norm(const IndexedSequence& lambda, double s, double rq, double alpha);

/// Plain (unweighted) l_q quasi-norm with reciprocal exponent rq.
double lq_norm(const Eigen::Ref<const Eigen::VectorXd>& values, double rq);

}  // namespace alphamod
