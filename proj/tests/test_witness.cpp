#include <cmath>

#include <doctest.h>

#include "alphamod/norms.hpp"
#include "alphamod/witness.hpp"

using namespace alphamod;

namespace {

Eigen::VectorXi k1(int k) { return Eigen::VectorXi::Constant(1, k); }

std::size_t significant(const NormResult& r, double rel = 1e-9) {
    double top = 0.0;
    for (const auto& p : r.pieces) top = std::max(top, p.second);
    std::size_t count = 0;
    for (const auto& p : r.pieces) count += p.second > rel * top;
    return count;
}

double sum_p(const std::vector<double>& v, double p) {
    double s = 0.0;
    for (double x : v) s += std::pow(x, p);
    return s;
}

}  // namespace

TEST_CASE("witness bumps are absorbed by their own window") {
    for (double alpha : {0.0, 0.25, 0.5}) {
        const auto spec = CoveringSpec::defaults(alpha, 1);
        const FrequencyGrid g{1, 8192, 128.0, {0, 0}};
        const auto P = build_partition(spec, g);
        const auto k = k1(5);
        const auto f = witness_bump(k, spec, WitnessProfile::for_covering(spec), g);
        const auto boxed = box_apply(f, P, *P.find(k));
        CHECK((boxed.values - f.values).cwiseAbs().maxCoeff() <= 1e-12 * f.values.cwiseAbs().maxCoeff());
        const auto r = space_norm(f, Space{0.5, 0.25, 0.0, alpha, 1}, P);
        CHECK(significant(r) == 1);
        CHECK(r.value == doctest::Approx(lp_quasinorm(f, 0.5)).epsilon(1e-12));
    }
}

TEST_CASE("dilation law of witness bumps") {
    // Scales 2 and 4 at α = 1/2 with a period long enough that tails are negligible.
    const auto spec = CoveringSpec::defaults(0.5, 1);
    const auto profile = WitnessProfile::for_covering(spec);
    const double L = 256.0;
    const int N = 1 << 14;
    for (int k : {4, 12}) {
        const auto g = ball_geometry(k1(k), 0.5);
        const FrequencyGrid grid{1, N, L, {std::int64_t(std::llround(g.center(0) * L)), 0}};
        const auto f = witness_bump(k1(k), spec, profile, grid);
        // Reference: the same profile at unit scale on the same sampling density.
        const FrequencyGrid ref_grid{1, N, L * g.scale, {0, 0}};
        CoveringSpec unit = spec;
        unit.alpha = 0.0;
        const auto base = witness_bump(k1(0), unit, profile, ref_grid, false);
        for (double rp : {0.0, 0.5, 1.0, 1.5}) {
            const double expected = std::pow(g.scale, 1.0 - rp) * lp_quasinorm(base, rp);
            CHECK(lp_quasinorm(f, rp) == doctest::Approx(expected).epsilon(1e-8));
        }
    }
}

TEST_CASE("spread witness: almost orthogonality and the M^{0,α1} norm") {
    const auto fine = CoveringSpec::defaults(0.0, 1);
    const auto coarse = CoveringSpec::defaults(0.5, 1);
    const auto profile = WitnessProfile::for_covering(fine);
    const auto k = k1(12);
    const auto c = ball_geometry(k, 0.5).center;
    const double pitch = 60.0;
    const double L = 1024.0;
    const FrequencyGrid g{1, 1 << 14, L, {std::int64_t(std::llround(c(0) * L)), 0}};
    const auto w = witness_spread(k, fine, coarse, pitch, profile, g);
    REQUIRE_FALSE(w.singleton_fallback);
    REQUIRE(w.indices.size() >= 5);
    const auto gamma = neighbor_set(NeighborRelation::GammaTilde, k, coarse, fine);
    CHECK(w.indices == gamma.members);

    std::vector<double> norms1, norms2;
    for (const auto& l : w.indices) {
        const auto f = witness_bump(l, fine, profile, g);
        norms1.push_back(lp_quasinorm(f, 1.0));
        norms2.push_back(lp_quasinorm(f, 0.5));
    }
    CHECK(lp_quasinorm(w.f, 1.0) == doctest::Approx(sum_p(norms1, 1.0)).epsilon(0.01));
    CHECK(std::pow(lp_quasinorm(w.f, 0.5), 2) == doctest::Approx(sum_p(norms2, 2.0)).epsilon(0.01));

    const auto Pfine = build_partition(fine, g);
    const auto m = space_norm(w.f, Space{1.0, 0.5, 0.0, 0.0, 1}, Pfine);
    CHECK(significant(m) == w.indices.size());
    CHECK(m.value == doctest::Approx(std::sqrt(sum_p(norms1, 2.0))).epsilon(0.02));

    // The whole spread witness sits in the plateau of window k of the coarse covering.
    const auto Pcoarse = build_partition(coarse, g);
    const auto boxed = box_apply(w.f, Pcoarse, *Pcoarse.find(k));
    CHECK((boxed.values - w.f.values).cwiseAbs().maxCoeff() <= 1e-12 * w.f.values.cwiseAbs().maxCoeff());
}

TEST_CASE("spread witness fallbacks and errors") {
    const auto spec = CoveringSpec::defaults(0.5, 1);
    const auto profile = WitnessProfile::for_covering(spec);
    const FrequencyGrid g{1, 4096, 64.0, {0, 0}};
    const auto k = k1(4);
    const auto w = witness_spread(k, spec, spec, 10.0, profile, g);
    CHECK(w.singleton_fallback);
    const auto b = witness_bump(k, spec, profile, g, false);
    CHECK((w.f.values - b.values).cwiseAbs().maxCoeff() <= 1e-14);

    const auto fine = CoveringSpec::defaults(0.0, 1);
    CHECK_THROWS_AS(witness_spread(k, fine, spec, 40.0, WitnessProfile::for_covering(fine), g), GeometryError);
    CHECK_THROWS_AS(witness_spread(k, spec, fine, 20.0, profile, g), ParameterError);
    // Window 2 at α = 1/2 has a plateau too small for the bump.
    CHECK_THROWS_AS(witness_bump(k1(2), spec, profile, g), GeometryError);
    CHECK_NOTHROW(witness_bump(k1(2), spec, profile, g, false));
    const FrequencyGrid narrow{1, 256, 64.0, {0, 0}};
    CHECK_THROWS_AS(witness_bump(k, spec, profile, narrow), TruncationError);
}
