// One line per acceptance criterion: status, measured quantity, runtime.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <random>
#include <set>
#include <string>
#include <tuple>
#include <vector>

#include "alphamod/cli.hpp"
#include "alphamod/covering.hpp"
#include "alphamod/grid.hpp"
#include "alphamod/index_calculus.hpp"
#include "alphamod/lab.hpp"
#include "alphamod/multiplier.hpp"
#include "alphamod/sequence.hpp"

using namespace alphamod;
using R = Rational;

namespace {

constexpr double kSumTolerance = 1e-8;
constexpr double kReconstructionTolerance = 1e-10;
constexpr double kSlopeTolerance = 0.15;
constexpr double kMultiplierTolerance = 0.05;
constexpr double kScalingTolerance = 0.1;

struct Outcome {
    bool ok = false;
    std::string detail;
};

int failures = 0;

void criterion(int id, const char* name, double limit_s, const std::function<Outcome()>& body) {
    const auto t0 = std::chrono::steady_clock::now();
    Outcome o;
    try {
        o = body();
    } catch (const std::exception& e) {
        o = {false, std::string("exception: ") + e.what()};
    }
    const double dt = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    const bool pass = o.ok && dt <= limit_s;
    failures += !pass;
    std::printf("criterion %d %s %-22s %s | %.2f s (limit %.0f s)\n", id, pass ? "PASS" : "FAIL", name,
                o.detail.c_str(), dt, limit_s);
    std::fflush(stdout);
}

std::string fmt(const char* f, auto... args) {
    char buf[256];
    std::snprintf(buf, sizeof buf, f, args...);
    return buf;
}

Eigen::VectorXi k1(int k) { return Eigen::VectorXi::Constant(1, k); }

Outcome oracle_agreement() {
    const R exps[] = {R(0), R(1, 4), R(1, 2), R(1), R(2)};
    const R alphas[] = {R(0), R(1, 4), R(1, 2), R(3, 4), R(1)};
    int disagreements = 0, total = 0;
    for (const R& r : exps)
        for (const R& a1 : alphas)
            for (const R& a2 : alphas)
                for (int ds = -60; ds <= 60; ++ds) {
                    const ExactSpace X{r, r, R(ds, 20), a1, 1}, Y{r, r, R(0), a2, 1};
                    disagreements += embedding_decide(X, Y).embeds != equal_exponent_decide(X, Y).embeds;
                    ++total;
                }
    return {disagreements == 0, fmt("%d disagreements over %d pairs", disagreements, total)};
}

Outcome branch_collapse() {
    std::mt19937_64 rng(20240501);
    std::uniform_int_distribution<int> num(0, 24), den(1, 12), dim(1, 3);
    auto frac = [&] { return R(num(rng), den(rng)); };
    int mismatches = 0;
    for (int t = 0; t < 100000; ++t) {
        const int d = den(rng);
        const R alpha(std::uniform_int_distribution<int>(0, d)(rng), d);
        ExactSpace X{frac(), frac(), frac(), alpha, dim(rng)};
        ExactSpace Y{frac(), frac(), frac(), alpha, X.n};
        const auto v = embedding_decide(X, Y);
        mismatches += v.R_value != R(X.n) * alpha * (X.rp - Y.rp);
    }
    return {mismatches == 0, fmt("%d mismatches over 100000 tuples", mismatches)};
}

Outcome partition_suite() {
    const FrequencyGrid fg{1, 1 << 14, 64.0, {0, 0}};
    std::mt19937_64 rng(7);
    double worst_sum = 0.0, worst_rec = 0.0;
    for (double alpha : {0.0, 0.25, 0.5, 0.75, 1.0}) {
        const auto P = build_partition(CoveringSpec::defaults(alpha, 1), fg);
        const auto rep = verify_partition(P);
        if (rep.safe_bins != fg.bins()) return {false, fmt("alpha %.2f: safe window is not the whole grid", alpha)};
        worst_sum = std::max(worst_sum, rep.sum_deviation);
        for (int t = 0; t < 20; ++t) {
            const auto f = random_band_limited(fg, Eigen::VectorXd::Zero(1), 100.0, rng);
            const auto F = fourier_transform(f, Direction::Forward);
            Eigen::VectorXcd sum = Eigen::VectorXcd::Zero(f.size());
            for (const auto& m : P.members) sum += box_apply_spectrum(F, P, m).values;
            worst_rec = std::max(worst_rec, (sum - f.values).norm() / f.values.norm());
        }
    }
    return {worst_sum <= kSumTolerance && worst_rec <= kReconstructionTolerance,
            fmt("max |sum-1| %.1e, max reconstruction error %.1e", worst_sum, worst_rec)};
}

struct Fixture {
    double a1, a2, rp1, rp2, rq, A;
};

// Predicted A evaluated by hand for each setting.
const Fixture kFixtures[] = {
    {0.0, 0.5, 1.0, 0.0, 0.0, 0.5},     {0.0, 0.5, 1.0, 1.0, 0.0, 0.5},  {0.25, 0.5, 2.0, 0.5, 1.0, 0.375},
    {0.5, 0.0, 1.0, 1.0, 1.0, 0.5},     {0.5, 0.0, 0.0, 0.0, 1.0, 0.5},  {0.5, 0.25, 0.5, 0.0, 0.25, 0.125},
    {0.5, 0.0, 0.5, 0.5, 1.0, 0.25},    {0.5, 0.5, 1.0, 0.0, 0.5, 0.5},
};

Outcome localized_rates() {
    LabOptions o;
    o.mc_trials = 64;
    o.max_N = 1 << 16;
    std::set<std::string> bound;
    double worst = 0.0;
    bool ok = true;
    for (const auto& fx : kFixtures) {
        const auto r = rate_check(Space{fx.rp1, fx.rq, 0.0, fx.a1, 1}, Space{fx.rp2, fx.rq, 0.0, fx.a2, 1}, o);
        for (int i : r.predicted.argmax) bound.insert(r.predicted.term_label(i));
        const double dev = std::abs(r.witness_slope - fx.A);
        worst = std::max(worst, dev);
        ok = ok && std::abs(r.predicted.value - fx.A) < 1e-12 && dev <= kSlopeTolerance && r.pass;
    }
    for (const char* t : {"A1", "A2", "A3", "~A2", "~A3"}) ok = ok && bound.count(t);
    std::string labels;
    for (const auto& b : bound) labels += (labels.empty() ? "" : " ") + b;
    return {ok, fmt("8 settings, max |slope-A| %.3f, binding %s", worst, labels.c_str())};
}

Outcome multiplier_norms() {
    std::mt19937_64 rng(17);
    std::uniform_real_distribution<double> u(-2.0, 2.0);
    int up = 0, down = 0;
    double worst = 0.0;
    for (int t = 0; t < 100; ++t) {
        auto a = IndexedSequence::lattice(1);
        const int m = 1 + int(rng() % 64);
        for (int i = 0; i < m; ++i) a.push(k1(i - m / 2), u(rng));
        const double rq1 = double(rng() % 5) / 4.0, rq2 = double(rng() % 5) / 4.0;
        const double s1 = u(rng), s2 = u(rng), alpha = double(rng() % 4) / 4.0;
        (rq2 > rq1 ? up : down)++;
        const double closed = seq_multiplier_norm_closed(a, s1, s2, rq1, rq2, alpha);
        const double brute = seq_multiplier_norm_bruteforce(a, s1, s2, rq1, rq2, alpha, 50, std::uint64_t(t));
        worst = std::max(worst, std::abs(brute - closed) / closed);
    }
    return {worst <= kMultiplierTolerance && up > 0 && down > 0,
            fmt("max relative gap %.1e (%d q-up, %d q-down)", worst, up, down)};
}

Outcome consistency() {
    // (1/p, 1/q, s, alpha) for source and target, n = 1, then K_max. Windows of
    // the alpha = 1/2 covering reach the grid cap beyond K = 16.
    const double sets[][9] = {
        {0.5, 0.5, 0, 0, 0.5, 1, 0, 0, 32},          {0.5, 0.5, 1, 0, 0.5, 1, 0, 0, 32},
        {1, 1, 0, 0.5, 1, 1, 0, 0, 16},              {0.5, 0.5, 1, 0, 0.5, 0.5, 0, 0.5, 16},
        {1, 1, 0, 0, 1, 1, 0.5, 0.5, 16},            {0.5, 0.5, 0.5, 0.5, 0.5, 0.5, 0, 0, 16},
        {0, 1, 0, 0.5, 0, 1, 0, 0, 16},              {0, 1, 1, 0.5, 0, 1, 0, 0, 16},
        {1, 0.5, 0, 0, 0, 0.5, 0, 0.5, 16},          {0.5, 1, 1, 0.25, 0.5, 0.5, 0, 0.5, 16},
    };
    int consistent = 0, skipped = 0, grows = 0, bounded = 0;
    for (const auto& s : sets) {
        const auto r = embedding_consistency_check(Space{s[0], s[1], s[2], s[3], 1}, Space{s[4], s[5], s[6], s[7], 1},
                                                   int(s[8]), LabOptions{});
        consistent += r.consistent;
        skipped += r.skipped;
        if (!r.skipped) (r.embeds ? bounded : grows)++;
    }
    // Identical spaces sit on the sharp boundary and must be reported as skipped.
    const Space Z{0.5, 0.5, 0.0, 0.5, 1};
    const auto boundary = embedding_consistency_check(Z, Z, 16, LabOptions{});
    return {consistent == 10 && skipped == 0 && boundary.skipped && boundary.consistent,
            fmt("%d/10 consistent (%d grow, %d bounded), boundary case %s", consistent, grows, bounded,
                boundary.skipped ? "skipped" : "not skipped")};
}

Outcome dilation() {
    const std::tuple<double, double, int> combos[] = {{0.0, 0.5, 1}, {0.0, 1.0, 1}, {0.5, 1.0, 1},
                                                      {1.0, 2.0, 1}, {0.0, 0.5, 2}, {0.5, 1.0, 2}};
    double worst = 0.0;
    bool ok = true;
    for (auto [rp1, rp2, n] : combos) {
        const auto d = dilation_necessity_check(rp1, rp2, n);
        const double expected = n * (rp2 - rp1);
        worst = std::max(worst, std::abs(d.blowup_rate - expected));
        ok = ok && std::abs(d.blowup_rate - expected) <= kScalingTolerance && d.parameters.size() >= 4;
    }
    return {ok, fmt("6 combos, max |rate - n(1/p2-1/p1)| %.4f", worst)};
}

Outcome bernstein() {
    const std::tuple<double, double, int> pairs[] = {{1.0, 0.0, 1}, {1.0, 0.5, 1}, {0.5, 0.0, 2}, {2.0, 1.0, 1}};
    double worst = 0.0;
    bool ok = true;
    for (auto [rp1, rp2, n] : pairs) {
        const auto b = bernstein_check(rp1, rp2, n, 4);
        worst = std::max(worst, std::abs(b.slope - n * (rp1 - rp2)));
        ok = ok && std::abs(b.slope - n * (rp1 - rp2)) <= kScalingTolerance;
    }
    return {ok, fmt("4 pairs over 4 octaves, max |slope - n(1/p1-1/p2)| %.4f", worst)};
}

Outcome determinism() {
    const auto config = parse_args({"verify-asymptotics", "--preset", "rates", "--seed", "5", "--samples", "16"});
    const auto a = render_report(config).report;
    const auto b = render_report(config).report;
    return {a == b && a.find("\"seed\": 5") != std::string::npos,
            fmt("%s (%zu bytes)", a == b ? "byte-identical" : "reports differ", a.size())};
}

}  // namespace

int main() {
    criterion(1, "oracle agreement", 10, oracle_agreement);
    criterion(2, "branch collapse", 5, branch_collapse);
    criterion(3, "partition suite", 30, partition_suite);
    criterion(4, "localized norm rates", 300, localized_rates);
    criterion(5, "multiplier norms", 10, multiplier_norms);
    criterion(6, "consistency", 180, consistency);
    criterion(7, "dilation necessity", 30, dilation);
    criterion(8, "Bernstein scaling", 30, bernstein);
    criterion(9, "determinism", 300, determinism);
    std::printf("%d of 9 criteria failed\n", failures);
    return failures == 0 ? 0 : 1;
}
