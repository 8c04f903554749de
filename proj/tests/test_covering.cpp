#include <doctest.h>

#include <cmath>

#include "alphamod/covering.hpp"

using namespace alphamod;

namespace {

Eigen::VectorXi idx(int a) { return Eigen::VectorXi::Constant(1, a); }
Eigen::VectorXi idx(int a, int b) {
    Eigen::VectorXi k(2);
    k << a, b;
    return k;
}

FrequencyGrid grid1(int N, double L) { return {1, N, L, {0, 0}}; }

}  // namespace

TEST_CASE("ball geometry") {
    const auto g0 = ball_geometry(idx(3), 0.0);
    CHECK(g0.scale == doctest::Approx(1.0));
    CHECK(g0.center(0) == doctest::Approx(3.0));
    const auto g = ball_geometry(idx(3), 0.5);
    CHECK(g.scale == doctest::Approx(std::sqrt(10.0)));
    CHECK(g.center(0) == doctest::Approx(3.0 * std::sqrt(10.0)));
    CHECK_THROWS_AS(ball_geometry(idx(1), 1.0), ParameterError);
}

TEST_CASE("storage order round trip") {
    FrequencyGrid g{2, 8, 2.0, {5, -3}};
    for (std::int64_t i = 0; i < g.bins(); ++i) CHECK(g.storage_index(g.bin_of_storage(i)) == i);
    CHECK(g.bin_of_storage(0) == std::array<std::int64_t, 2>{5, -3});
    CHECK_THROWS_AS(g.storage_index({100, 0}), DomainError);
}

TEST_CASE("uniform covering neighbours") {
    auto spec = CoveringSpec::defaults(0.0, 1);
    spec.c_small = 0.6;
    spec.c_big = 0.8;
    const auto lam = neighbor_set(NeighborRelation::Lambda, idx(4), spec);
    REQUIRE(lam.members.size() == 3);
    CHECK(lam.members[0] == idx(3));
    CHECK(lam.members[2] == idx(5));
    CHECK(lam.contains(idx(4)));
    const auto star = neighbor_set(NeighborRelation::LambdaStar, idx(4), spec);
    CHECK(star.members.size() == 5);

    const auto p = build_partition(spec, grid1(1024, 16.0));
    CHECK(verify_partition(p).max_overlap <= 2);

    spec.k_max = 4;
    CHECK_THROWS_AS(neighbor_set(NeighborRelation::Lambda, idx(4), spec), TruncationError);
}

TEST_CASE("partition of unity for several alphas") {
    for (double alpha : {0.0, 0.25, 0.5, 0.75}) {
        CAPTURE(alpha);
        const auto spec = CoveringSpec::defaults(alpha, 1);
        const auto p = build_partition(spec, grid1(4096, 8.0));
        const auto rep = verify_partition(p);
        CHECK(rep.safe_bins == 4096);
        CHECK(rep.sum_deviation < 1e-12);
        CHECK(rep.support_violation == 0.0);
        CHECK(rep.plateau_violation < 1e-12);
        CHECK(rep.range_violation < 1e-15);
        CHECK(rep.min_denominator >= 1.0);
        CHECK(rep.gradient_ratio < 4.0);
    }
}

TEST_CASE("k_max restricts the safe window") {
    auto spec = CoveringSpec::defaults(0.5, 1);
    spec.k_max = 5;
    const auto p = build_partition(spec, grid1(4096, 8.0));
    const auto rep = verify_partition(p);
    CHECK(rep.safe_bins < 4096);
    CHECK(rep.safe_bins > 0);
    CHECK(rep.sum_deviation < 1e-12);
    for (const auto& m : p.members) CHECK(std::abs(m.index(0)) <= 5);
    // Bins near the centre of the last kept window are not safe once k = 6 reaches them.
    const auto far = ball_geometry(idx(6), 0.5).center(0);
    CHECK_FALSE(p.is_safe(p.grid.storage_index({std::int64_t(std::lround(far * 8.0)), 0})));
}

TEST_CASE("too small constants fail the covering check") {
    auto spec = CoveringSpec::defaults(0.0, 1);
    spec.c_small = 0.2;
    spec.c_big = 0.3;
    CHECK_THROWS_AS(build_partition(spec, grid1(256, 8.0)), CoveringError);
}

TEST_CASE("analytic eta matches the sampled partition") {
    const auto spec = CoveringSpec::defaults(0.25, 1);
    const Covering cov(spec);
    const auto p = build_partition(spec, grid1(2048, 8.0));
    for (const auto& m : p.members) {
        if (std::abs(m.index(0)) > 6) continue;
        for (std::int64_t b = m.box_lo[0]; b < m.box_lo[0] + m.box_extent[0]; b += 7) {
            Eigen::VectorXd xi(1);
            xi << double(b) / 8.0;
            CHECK(m.sample({b, 0}) == doctest::Approx(cov.eta(m.index, xi)).epsilon(1e-13));
        }
    }
}

TEST_CASE("plateau radius and ball absorption") {
    const auto spec = CoveringSpec::defaults(0.0, 1);
    const Covering cov(spec);
    const double r = cov.plateau_radius(idx(2));
    CHECK(r == doctest::Approx(1.0 - spec.c_big));
    CHECK(r >= spec.plateau);
    Eigen::VectorXd c(1);
    c << 2.0;
    CHECK(cov.eta(idx(2), c) == 1.0);
    CHECK(cov.ball_in_plateau(idx(2), c, 0.9 * r));
    CHECK_FALSE(cov.ball_in_plateau(idx(2), c, 1.1 * r));

    // Far out the nominal plateau is honoured for every alpha.
    for (double alpha : {0.25, 0.5, 0.75}) {
        const auto s = CoveringSpec::defaults(alpha, 1);
        const Covering cv(s);
        const auto k = idx(40);
        CHECK(cv.plateau_radius(k) >= s.plateau * cv.geometry(k).scale);
    }
}

TEST_CASE("gamma sets across coverings") {
    const auto a0 = CoveringSpec::defaults(0.0, 1);
    const auto a5 = CoveringSpec::defaults(0.5, 1);
    const auto k = idx(10);
    const auto g = neighbor_set(NeighborRelation::Gamma, k, a5, a0);
    const auto gt = neighbor_set(NeighborRelation::GammaTilde, k, a5, a0);
    CHECK(gt.members.size() > 3);
    const Covering c0(a0), c5(a5);
    for (const auto& l : gt.members) {
        CHECK(g.contains(l));
        // Every absorbed window lies where η_k^{α2} = 1.
        const auto gl = c0.geometry(l);
        for (double t = -1.0; t <= 1.0; t += 0.125) {
            Eigen::VectorXd xi = gl.center;
            xi(0) += t * c0.support_radius(l);
            CHECK(c5.eta(k, xi) == doctest::Approx(1.0).epsilon(1e-14));
        }
    }
    for (const auto& l : g.members) {
        const double d = std::abs(c5.geometry(k).center(0) - c0.geometry(l).center(0));
        CHECK(d < c5.support_radius(k) + c0.support_radius(l));
    }
}

TEST_CASE("gradient scales with the window size") {
    for (double alpha : {0.0, 0.5, 0.75}) {
        CAPTURE(alpha);
        const Covering cov(CoveringSpec::defaults(alpha, 1));
        std::vector<Eigen::VectorXi> ks;
        for (int k : {0, 1, 2, 4, 8, 16, 32, 64}) ks.push_back(idx(k));
        const auto prof = gradient_scale_profile(cov, ks, 2000);
        // Bounded by a fixed multiple of the large-|k| value, which settles down.
        const double hi = *std::max_element(prof.begin(), prof.end());
        CHECK(hi / prof.back() < 4.0);
        CHECK(prof[prof.size() - 2] / prof.back() == doctest::Approx(1.0).epsilon(0.1));
    }
}

TEST_CASE("dyadic partition") {
    auto spec = CoveringSpec::defaults(1.0, 1);
    const auto p = build_partition(spec, grid1(4096, 4.0));
    const auto rep = verify_partition(p);
    CHECK(rep.safe_bins == 4096);
    CHECK(rep.sum_deviation < 1e-14);
    CHECK(rep.support_violation == 0.0);
    CHECK(rep.plateau_violation < 1e-15);
    CHECK(rep.max_overlap <= 2);
    CHECK(dyadic_symbol(3, 7.0) == 1.0);
    CHECK(dyadic_symbol(3, 13.0) == 0.0);

    spec.k_max = 5;
    const auto q = build_partition(spec, grid1(4096, 4.0));
    CHECK(q.members.size() == 6);
    CHECK(verify_partition(q).safe_bins < 4096);
    CHECK(verify_partition(q).sum_deviation < 1e-14);

    const auto lam = neighbor_set(NeighborRelation::Lambda, idx(0), spec);
    CHECK(lam.members.size() == 2);
}

TEST_CASE("two-dimensional partition") {
    for (double alpha : {0.0, 0.5}) {
        CAPTURE(alpha);
        const auto spec = CoveringSpec::defaults(alpha, 2);
        const FrequencyGrid g{2, 128, 4.0, {0, 0}};
        const auto p = build_partition(spec, g);
        const auto rep = verify_partition(p);
        CHECK(rep.safe_bins == g.bins());
        CHECK(rep.sum_deviation < 1e-12);
        CHECK(rep.support_violation == 0.0);
        CHECK(rep.plateau_violation < 1e-12);
        const auto lam = neighbor_set(NeighborRelation::Lambda, idx(3, -2), spec);
        CHECK(lam.contains(idx(3, -1)));
        CHECK(lam.contains(idx(2, -2)));
    }
    const FrequencyGrid g{2, 64, 4.0, {0, 0}};
    const auto d = build_partition(CoveringSpec::defaults(1.0, 2), g);
    CHECK(verify_partition(d).sum_deviation < 1e-14);
}

TEST_CASE("lambda sets are symmetric and contain the anchor") {
    for (double alpha : {0.0, 0.5, 0.75}) {
        const auto spec = CoveringSpec::defaults(alpha, 1);
        for (int k = -12; k <= 12; ++k) {
            const auto lam = neighbor_set(NeighborRelation::Lambda, idx(k), spec);
            CHECK(lam.contains(idx(k)));
            for (const auto& l : lam.members)
                CHECK(neighbor_set(NeighborRelation::Lambda, l, spec).contains(idx(k)));
        }
    }
    const auto s2 = CoveringSpec::defaults(0.5, 2);
    for (int a = -3; a <= 3; ++a)
        for (int b = -3; b <= 3; ++b)
            for (const auto& l : neighbor_set(NeighborRelation::Lambda, idx(a, b), s2).members)
                CHECK(neighbor_set(NeighborRelation::Lambda, l, s2).contains(idx(a, b)));
}

TEST_CASE("gamma cardinality follows the scale ratio") {
    const auto a0 = CoveringSpec::defaults(0.0, 1);
    const auto a5 = CoveringSpec::defaults(0.5, 1);
    // |Γ_k^{0,1/2}| ≍ ⟨k⟩: least-squares slope of log|Γ| against log⟨k⟩.
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    int m = 0;
    for (int k = 8; k <= 512; k *= 2) {
        const double x = std::log(std::sqrt(1.0 + double(k) * k));
        const double y = std::log(double(neighbor_set(NeighborRelation::Gamma, idx(k), a5, a0).members.size()));
        sx += x, sy += y, sxx += x * x, sxy += x * y, ++m;
        CHECK(neighbor_set(NeighborRelation::GammaTilde, idx(k), a5, a0).members.size() <=
              neighbor_set(NeighborRelation::Gamma, idx(k), a5, a0).members.size());
    }
    const double slope = (m * sxy - sx * sy) / (m * sxx - sx * sx);
    CHECK(slope == doctest::Approx(1.0).epsilon(0.05));
}

TEST_CASE("gradient bound is uniform for alpha one half") {
    const Covering cov(CoveringSpec::defaults(0.5, 1));
    std::vector<Eigen::VectorXi> ks;
    for (int k = 1; k <= 64; ++k) ks.push_back(idx(k));
    const auto prof = gradient_scale_profile(cov, ks, 1000);
    CHECK(*std::max_element(prof.begin(), prof.end()) / *std::min_element(prof.begin(), prof.end()) <= 4.0);
}
