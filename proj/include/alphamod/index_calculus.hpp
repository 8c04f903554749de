#pragma once

// Piecewise-linear index functions A / R and the sharp embedding decision
// between two α-modulation spaces. Everything here is templated on the scalar
// so the same code runs in exact rational arithmetic or in double precision.

#include <algorithm>
#include <array>
#include <string>
#include <vector>

#include "alphamod/errors.hpp"
#include "alphamod/params.hpp"
#include "alphamod/rational.hpp"

namespace alphamod {

enum class Branch { LE, GT };  // LE: alpha1 <= alpha2, GT: alpha1 > alpha2

enum class QCase { QDown, QUp };  // QDown: 1/q2 <= 1/q1

enum class Region { S1, S2, S3, S1Tilde, S2Tilde, S3Tilde };

const char* to_string(Branch b);
const char* to_string(QCase q);
const char* to_string(Region r);

template <typename Scalar>
struct IndexBreakdown {
    Branch branch = Branch::LE;
    std::array<Scalar, 3> terms{};
    Scalar value{};
    std::vector<int> argmax;  // 1-based term numbers, ties kept

    /// "A2" on the LE branch, "~A2" on the GT branch.
    std::string term_label(int i) const {
        return (branch == Branch::LE ? "A" : "~A") + std::to_string(i);
    }
};

template <typename Scalar>
struct EmbeddingVerdict {
    bool embeds = false;
    QCase q_case = QCase::QDown;
    Scalar R_value{};
    Scalar correction{};
    Scalar margin{};  // s1 - s2 - R - correction
    bool strict_required = false;
    std::string reason;
    IndexBreakdown<Scalar> breakdown;
};

namespace detail {

template <typename Scalar>
void check_index_domain(int n, const Scalar& rp1, const Scalar& rp2, const Scalar& rq,
                        const Scalar& alpha1, const Scalar& alpha2) {
    if (n < 1) throw ParameterError("dimension n must be >= 1");
    if (rp1 < Scalar(0) || rp2 < Scalar(0) || rq < Scalar(0))
        throw ParameterError("reciprocal exponents must be >= 0");
    for (const Scalar& a : {alpha1, alpha2})
        if (a < Scalar(0) || a > Scalar(1)) throw ParameterError("alpha must lie in [0,1]");
}

template <typename Scalar>
IndexBreakdown<Scalar> finish(Branch branch, const std::array<Scalar, 3>& terms) {
    IndexBreakdown<Scalar> out;
    out.branch = branch;
    out.terms = terms;
    out.value = *std::max_element(terms.begin(), terms.end());
    for (int i = 0; i < 3; ++i)
        if (nearly_equal(terms[i], out.value)) out.argmax.push_back(i + 1);
    return out;
}

}  // namespace detail

/// A(p, q; α1, α2): exponent of ‖□_k^{α1∨α2} | M^{0,α1}_{p1,q} → M^{0,α2}_{p2,q}‖
/// measured in ⟨k⟩^{1/(1-α1∨α2)}.
template <typename Scalar>
IndexBreakdown<Scalar> index_A(int n, const Scalar& rp1, const Scalar& rp2, const Scalar& rq,
                               const Scalar& alpha1, const Scalar& alpha2) {
    detail::check_index_domain(n, rp1, rp2, rq, alpha1, alpha2);
    const Scalar nn(n);
    const Scalar one(1);
    // The middle term is common to both branches.
    const Scalar middle =
        nn * alpha2 * (one - rp2) - nn * alpha1 * (one - rp1) - nn * (alpha2 - alpha1) * rq;
    if (alpha1 <= alpha2) {
        return detail::finish<Scalar>(
            Branch::LE, {nn * alpha1 * (rp1 - rp2), middle,
                         nn * (alpha2 - alpha1) * (rp2 - rq) + nn * alpha1 * (rp1 - rp2)});
    }
    return detail::finish<Scalar>(
        Branch::GT, {nn * alpha2 * (rp1 - rp2), middle,
                     nn * (alpha1 - alpha2) * (rq - rp1) + nn * alpha2 * (rp1 - rp2)});
}

/// R(p, q; α1, α2): index_A with q1 on the LE branch and q2 on the GT branch.
template <typename Scalar>
IndexBreakdown<Scalar> index_R(int n, const Scalar& rp1, const Scalar& rp2, const Scalar& rq1,
                               const Scalar& rq2, const Scalar& alpha1, const Scalar& alpha2) {
    if (rq1 < Scalar(0) || rq2 < Scalar(0)) throw ParameterError("reciprocal exponents must be >= 0");
    return index_A(n, rp1, rp2, alpha1 <= alpha2 ? rq1 : rq2, alpha1, alpha2);
}

/// Sharp decision of M^{s1,α1}_{p1,q1} ⊆ M^{s2,α2}_{p2,q2}.
template <typename Scalar>
EmbeddingVerdict<Scalar> embedding_decide(const SpaceParams<Scalar>& source,
                                          const SpaceParams<Scalar>& target) {
    source.validate();
    target.validate();
    if (source.n != target.n) throw ParameterError("source and target dimensions differ");

    EmbeddingVerdict<Scalar> v;
    v.breakdown = index_R(source.n, source.rp, target.rp, source.rq, target.rq, source.alpha,
                          target.alpha);
    v.R_value = v.breakdown.value;
    v.q_case = target.rq <= source.rq ? QCase::QDown : QCase::QUp;
    v.strict_required = v.q_case == QCase::QUp;

    if (v.q_case == QCase::QUp) {
        const Scalar alpha_max = std::max(source.alpha, target.alpha);
        // At alpha_max = 1 the correction vanishes identically.
        if (alpha_max == Scalar(1)) {
            v.correction = Scalar(0);
        } else {
            v.correction = Scalar(source.n) * (Scalar(1) - alpha_max) * (target.rq - source.rq);
        }
    }
    v.margin = source.s - target.s - v.R_value - v.correction;

    std::string binding = "R binds on";
    for (int i : v.breakdown.argmax) binding += " " + v.breakdown.term_label(i);
    binding += std::string(" (") + to_string(v.breakdown.branch) + " branch)";

    if (target.rp > source.rp) {
        v.embeds = false;
        v.reason = "p-order violated: 1/p2 > 1/p1";
        return v;
    }
    v.embeds = v.strict_required ? strictly_greater(v.margin, Scalar(0))
                                 : at_least(v.margin, Scalar(0));
    v.reason = binding;
    return v;
}

/// Independent criterion for equal exponents p1 = p2, q1 = q2:
/// embeds iff s2 + max(0, n(α2-α1)(1/p-1/q), n(α2-α1)(1-1/p-1/q)) <= s1.
template <typename Scalar>
EmbeddingVerdict<Scalar> equal_exponent_decide(const SpaceParams<Scalar>& source,
                                         const SpaceParams<Scalar>& target) {
    source.validate();
    target.validate();
    if (source.n != target.n) throw ParameterError("source and target dimensions differ");
    if (source.rp != target.rp || source.rq != target.rq)
        throw ParameterError("equal_exponent_decide requires equal p and equal q");
    const Scalar d = Scalar(source.n) * (target.alpha - source.alpha);
    const std::array<Scalar, 3> terms{Scalar(0), d * (source.rp - source.rq),
                                      d * (Scalar(1) - source.rp - source.rq)};
    EmbeddingVerdict<Scalar> v;
    v.breakdown = detail::finish<Scalar>(source.alpha <= target.alpha ? Branch::LE : Branch::GT, terms);
    v.q_case = QCase::QDown;
    v.R_value = v.breakdown.value;
    v.margin = source.s - target.s - v.R_value;
    v.embeds = at_least(v.margin, Scalar(0));
    v.reason = "equal-exponent threshold";
    return v;
}

/// Regions of (1/p1, 1/p2, 1/q) on which a given term of A binds.
/// Boundaries belong to every adjacent region.
template <typename Scalar>
std::vector<Region> region_classify(const Scalar& rp1, const Scalar& rp2, const Scalar& rq,
                                    Branch branch) {
    if (rp2 > rp1) throw DomainError("region classification requires 1/p2 <= 1/p1");
    if (rp1 < Scalar(0) || rp2 < Scalar(0) || rq < Scalar(0))
        throw ParameterError("reciprocal exponents must be >= 0");
    const Scalar one(1);
    const Scalar half = ScalarTraits<Scalar>::from_ratio(1, 2);
    std::vector<Region> out;
    if (branch == Branch::LE) {
        if (at_least(rq, one - rp2) && at_least(rq, rp2)) out.push_back(Region::S1);
        if (at_least(one - rp2, rq) && at_least(half, rp2)) out.push_back(Region::S2);
        if (at_least(rp2, rq) && at_least(rp2, half)) out.push_back(Region::S3);
    } else {
        if (at_least(one - rp1, rq) && at_least(rp1, rq)) out.push_back(Region::S1Tilde);
        if (at_least(rq, one - rp1) && at_least(rp1, half)) out.push_back(Region::S2Tilde);
        if (at_least(rq, rp1) && at_least(half, rp1)) out.push_back(Region::S3Tilde);
    }
    return out;
}

/// Region label i (1..3) on the given branch.
inline Region region_for_term(Branch branch, int term) {
    static constexpr Region le[] = {Region::S1, Region::S2, Region::S3};
    static constexpr Region gt[] = {Region::S1Tilde, Region::S2Tilde, Region::S3Tilde};
    if (term < 1 || term > 3) throw ParameterError("term index must be 1, 2 or 3");
    return branch == Branch::LE ? le[term - 1] : gt[term - 1];
}

}  // namespace alphamod
