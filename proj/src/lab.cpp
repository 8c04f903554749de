#include "alphamod/lab.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <random>

#include <Eigen/QR>

#include "alphamod/bump.hpp"
#include "alphamod/multiplier.hpp"
#include "alphamod/norms.hpp"
#include "alphamod/witness.hpp"

namespace alphamod {

namespace {

// Spatial decay budget: a smooth bump whose spectrum has transition width w
// is negligible (relative 1e-5) at distance ~8/w from its centre.
constexpr double kDecay = 8.0;

struct Setup {
    Space source;
    Space target;
    CoveringSpec src_cov;
    CoveringSpec tgt_cov;
    bool le = true;  // α1 <= α2: localization on the target covering
    int cap = 0;

    const CoveringSpec& fine() const { return le ? src_cov : tgt_cov; }
    const CoveringSpec& coarse() const { return le ? tgt_cov : src_cov; }
};

Setup make_setup(const Space& source, const Space& target, const LabOptions& options) {
    source.validate();
    target.validate();
    if (source.n != target.n) throw ParameterError("source and target dimensions differ");
    if (source.n > 2) throw ParameterError("the lab runs on grids with n = 1, 2");
    if (target.rp > source.rp) throw DomainError("localized norms are measured for 1/p2 <= 1/p1");
    if (std::max(source.alpha, target.alpha) >= 1.0)
        throw ParameterError("the lab needs alpha1 ∨ alpha2 < 1");
    Setup s;
    s.source = source;
    s.target = target;
    s.source.s = s.target.s = 0.0;
    s.src_cov = lab_covering(source.alpha, source.n, options);
    s.tgt_cov = lab_covering(target.alpha, target.n, options);
    s.le = source.alpha <= target.alpha;
    s.cap = source.n == 1 ? options.max_N : options.max_N_2d;
    if (!(s.src_cov.plateau > 0.0 && s.tgt_cov.plateau > 0.0))
        throw GeometryError("covering without a plateau cannot hold witness bumps (n = 2 needs alpha < 0.42)");
    return s;
}

int pow2_at_least(double x) {
    int N = 2;
    while (N < x) {
        if (N > (1 << 28)) throw GeometryError("grid size overflow");
        N *= 2;
    }
    return N;
}

// Grid of period L whose frequency window covers B(center, radius).
FrequencyGrid local_grid(const Eigen::VectorXd& center, double radius, double L, int cap) {
    FrequencyGrid g;
    g.n = int(center.size());
    g.L = L;
    g.N = pow2_at_least(2.0 * radius * L + 8.0);
    if (g.N > cap)
        throw GeometryError("grid too small: N = " + std::to_string(g.N) + " needed, cap " + std::to_string(cap));
    for (int i = 0; i < g.n; ++i) g.offset[i] = std::llround(center(i) * L);
    return g;
}

// Smallest transition width of the η of any window (of either covering) meeting B(center, radius).
double window_transition(const Setup& s, const Eigen::VectorXd& center, double radius) {
    double w = std::numeric_limits<double>::infinity();
    for (const CoveringSpec* spec : {&s.src_cov, &s.tgt_cov}) {
        const Covering cov(*spec);
        for (const auto& m : cov.windows_touching_ball(center, radius))
            w = std::min(w, (spec->c_big - spec->c_small) * cov.geometry(m).scale);
    }
    return w;
}

double profile_transition(const WitnessProfile& p, double scale) { return (p.radius - p.inner) * scale; }

double localized_ratio(const GridFunction& w, const Eigen::VectorXi& k, const Setup& s) {
    const auto g = w.frequency_grid();
    const Partition P1 = build_partition(s.src_cov, g);
    const Partition P2 = build_partition(s.tgt_cov, g);
    const Partition& Pv = s.le ? P2 : P1;
    const PartitionMember* m = Pv.find(k);
    if (!m) return 0.0;
    const GridFunction spectrum = fourier_transform(w, Direction::Forward);
    const GridFunction local = box_apply_spectrum(spectrum, Pv, *m);
    const double num = space_norm(local, s.target, P2).value;
    const double den = space_norm_spectrum(spectrum, s.source, P1).value;
    return den > 0.0 ? num / den : 0.0;
}

double j_effective(const Eigen::VectorXi& k, double alpha) {
    return std::log2(japanese_bracket(k)) / (1.0 - alpha);
}

Eigen::VectorXi on_ray(int k, int n) {
    Eigen::VectorXi v = Eigen::VectorXi::Zero(n);
    v(0) = k;
    return v;
}

// Window of the finer covering on the e1 ray whose scale index matches k: ⟨l⟩^{1/(1-α∧)} ≈ ⟨k⟩^{1/(1-α∨)}.
Eigen::VectorXi matched_index(const Eigen::VectorXi& k, double fine_alpha, double coarse_alpha) {
    if (fine_alpha == coarse_alpha) return k;
    const double bracket = std::pow(japanese_bracket(k), (1.0 - fine_alpha) / (1.0 - coarse_alpha));
    const int l = int(std::lround(std::sqrt(std::max(0.0, bracket * bracket - 1.0))));
    return on_ray(l, int(k.size()));
}

OpNormSample make_sample(int j, const Eigen::VectorXi& k, double a_max, WitnessKind kind, double value,
                         bool relaxed) {
    OpNormSample s;
    s.j = j;
    s.j_eff = j_effective(k, a_max);
    s.k = k;
    s.kind = kind;
    s.lower_bound = value;
    s.relaxed = relaxed;
    return s;
}

struct SpreadRun {
    double ratio = 0.0;
    double orthogonality = 0.0;
    std::size_t count = 0;
    bool fallback = false;
    int N = 0;
};

SpreadRun run_spread(const Eigen::VectorXi& k, const Setup& s, double pitch_factor) {
    const CoveringSpec& F = s.fine();
    const CoveringSpec& C = s.coarse();
    const auto profile = WitnessProfile::for_covering(F);
    const Covering cf(F);
    const auto ck = ball_geometry(k, C.alpha).center;

    // Geometry first (witness_spread repeats the same selection on the grid).
    std::vector<Eigen::VectorXi> indices;
    if (F.alpha != C.alpha) indices = neighbor_set(NeighborRelation::GammaTilde, k, C, F).members;
    if (indices.empty()) {
        if (F.alpha == C.alpha) {
            indices = {k};
        } else {
            auto cands = cf.windows_touching_ball(ck, 0.0);
            if (cands.empty()) throw GeometryError("no window of the finer covering meets the anchor centre");
            auto best = cands.front();
            for (const auto& l : cands)
                if ((cf.geometry(l).center - ck).norm() < (cf.geometry(best).center - ck).norm()) best = l;
            indices = {best};
        }
    }
    double radius = 0.0, w_bump = std::numeric_limits<double>::infinity(), span = 0.0;
    for (const auto& l : indices) {
        const auto g = cf.geometry(l);
        radius = std::max(radius, (g.center - ck).norm() + profile.radius * g.scale);
        w_bump = std::min(w_bump, profile_transition(profile, g.scale));
        span = std::max(span, double((l - indices.front()).cwiseAbs().maxCoeff()));
    }
    const double w_min = std::min(w_bump, window_transition(s, ck, radius));
    const double pitch = pitch_factor * kDecay / w_bump;
    const double L = std::max(2.0 * kDecay / w_min, (span + 1.0) * pitch);
    const auto grid = local_grid(ck, radius, L, s.cap);
    const SpreadWitness w = witness_spread(k, F, C, pitch, profile, grid);

    SpreadRun out;
    out.ratio = localized_ratio(w.f, k, s);
    out.count = w.indices.size();
    out.fallback = w.singleton_fallback;
    out.N = grid.N;
    const double rp = s.target.rp;
    double total = 0.0;
    for (const auto& l : w.indices) {
        const double v = lp_quasinorm(witness_bump(l, F, profile, grid, false), rp);
        total = rp == 0.0 ? std::max(total, v) : total + std::pow(v, 1.0 / rp);
    }
    const double whole = lp_quasinorm(w.f, rp);
    const double lhs = rp == 0.0 ? whole : std::pow(whole, 1.0 / rp);
    out.orthogonality = total > 0.0 ? std::abs(lhs / total - 1.0) : 0.0;
    return out;
}

std::mt19937_64 trial_rng(std::uint64_t seed, const Eigen::VectorXi& k, int trial) {
    std::seed_seq seq{std::uint32_t(seed), std::uint32_t(seed >> 32), std::uint32_t(k(0)),
                      std::uint32_t(k.size() > 1 ? k(1) : 0), std::uint32_t(trial)};
    return std::mt19937_64(seq);
}

ExponentFit fit_kind(const std::vector<OpNormSample>& samples, WitnessKind kind) {
    std::vector<std::pair<double, double>> pts;
    for (const auto& s : samples)
        if (s.kind == kind) pts.emplace_back(s.j_eff, s.lower_bound);
    return exponent_fit(pts);
}

}  // namespace

const char* to_string(WitnessKind kind) {
    switch (kind) {
        case WitnessKind::Uniform: return "uniform";
        case WitnessKind::Concentrated: return "concentrated";
        case WitnessKind::Spread: return "spread";
        case WitnessKind::MonteCarlo: return "montecarlo";
    }
    return "?";
}

ExponentFit exponent_fit(const std::vector<std::pair<double, double>>& points) {
    if (points.size() < 3) throw ParameterError("exponent fits need at least 3 samples");
    const Eigen::Index m = Eigen::Index(points.size());
    Eigen::MatrixXd A(m, 2);
    Eigen::VectorXd y(m);
    ExponentFit fit;
    for (Eigen::Index i = 0; i < m; ++i) {
        const auto [x, v] = points[std::size_t(i)];
        if (!(v > 0.0) || !std::isfinite(v)) throw DomainError("exponent fits need positive finite values");
        A(i, 0) = 1.0;
        A(i, 1) = x;
        y(i) = std::log2(v);
        fit.samples.emplace_back(x, y(i));
    }
    const Eigen::Vector2d beta = A.colPivHouseholderQr().solve(y);
    fit.intercept = beta(0);
    fit.slope = beta(1);
    const double ss_res = (y - A * beta).squaredNorm();
    const double ss_tot = (y.array() - y.mean()).square().sum();
    fit.r2 = ss_tot > 0.0 ? std::clamp(1.0 - ss_res / ss_tot, 0.0, 1.0) : 1.0;
    return fit;
}

CoveringSpec lab_covering(double alpha, int n, const LabOptions& options) {
    if (options.constants) return CoveringSpec::with_constants(alpha, n, options.constants->first, options.constants->second);
    return CoveringSpec::defaults(alpha, n);
}

Eigen::VectorXi ray_index(int j, double alpha, int n) {
    if (!(alpha >= 0.0 && alpha < 1.0)) throw ParameterError("ray indices need 0 <= alpha < 1");
    const double bracket = std::exp2(j * (1.0 - alpha));
    return on_ray(int(std::lround(std::sqrt(std::max(0.0, bracket * bracket - 1.0)))), n);
}

BoxOpnormResult box_opnorm_lower(const Eigen::VectorXi& k, int j, const Space& source, const Space& target,
                                 const LabOptions& options) {
    const Setup s = make_setup(source, target, options);
    if (k.size() != source.n) throw ParameterError("window index dimension differs from n");
    const CoveringSpec& F = s.fine();
    const CoveringSpec& C = s.coarse();
    const double a_max = C.alpha;
    BoxOpnormResult out;

    {
        const auto l = matched_index(k, F.alpha, C.alpha);
        const auto profile = WitnessProfile::for_covering(F);
        const auto g = ball_geometry(l, F.alpha);
        const double radius = profile.radius * g.scale;
        const double w_min = std::min(profile_transition(profile, g.scale), window_transition(s, g.center, radius));
        const auto grid = local_grid(g.center, radius, 2.0 * kDecay / w_min, s.cap);
        const bool absorbed = Covering(F).ball_in_plateau(l, g.center, radius);
        const auto w = witness_bump(l, F, profile, grid, false);
        out.witnesses.push_back(make_sample(j, k, a_max, WitnessKind::Uniform, localized_ratio(w, k, s), !absorbed));
        out.largest_N = std::max(out.largest_N, grid.N);
    }
    {
        const auto profile = WitnessProfile::for_covering(C);
        const auto g = ball_geometry(k, C.alpha);
        const double radius = profile.radius * g.scale;
        const double w_min = std::min(profile_transition(profile, g.scale), window_transition(s, g.center, radius));
        const auto grid = local_grid(g.center, radius, 2.0 * kDecay / w_min, s.cap);
        const bool absorbed = Covering(C).ball_in_plateau(k, g.center, radius);
        const auto w = witness_bump(k, C, profile, grid, false);
        out.witnesses.push_back(
            make_sample(j, k, a_max, WitnessKind::Concentrated, localized_ratio(w, k, s), !absorbed));
        out.largest_N = std::max(out.largest_N, grid.N);
    }
    {
        const SpreadRun run = run_spread(k, s, 1.0);
        out.witnesses.push_back(make_sample(j, k, a_max, WitnessKind::Spread, run.ratio, run.fallback));
        out.spread_count = run.count;
        out.orthogonality_error = run.orthogonality;
        out.largest_N = std::max(out.largest_N, run.N);
        if (options.pitch_check && !run.fallback) {
            try {
                const SpreadRun twice = run_spread(k, s, 2.0);
                out.pitch_stability = std::abs(twice.ratio / run.ratio - 1.0);
            } catch (const GeometryError&) {
                // The doubled pitch does not fit under the grid cap; stability stays unreported.
            }
        }
    }
    return out;
}

OpNormSample box_opnorm_montecarlo(const Eigen::VectorXi& k, int j, const Space& source, const Space& target,
                                   int trials, std::uint64_t seed, const LabOptions& options,
                                   const std::vector<OpNormSample>& witnesses) {
    if (trials < 1) throw ParameterError("Monte Carlo needs at least one trial");
    const Setup s = make_setup(source, target, options);
    if (k.size() != source.n) throw ParameterError("window index dimension differs from n");
    const CoveringSpec& C = s.coarse();
    const Covering cc(C);
    const auto ck = cc.geometry(k).center;
    const double radius = cc.support_radius(k);
    const double w_min = window_transition(s, ck, radius);
    const auto grid = local_grid(ck, radius, kDecay / w_min, s.cap);
    const Partition P1 = build_partition(s.src_cov, grid);
    const Partition P2 = build_partition(s.tgt_cov, grid);
    const Partition& Pv = s.le ? P2 : P1;
    const PartitionMember* m = Pv.find(k);
    if (!m) throw GeometryError("window k does not meet its own Monte Carlo grid");

    double best = 0.0;
    for (const auto& w : witnesses) best = std::max(best, w.lower_bound);
    for (int t = 0; t < trials; ++t) {
        auto rng = trial_rng(seed, k, t);
        const GridFunction f = random_band_limited(grid, ck, radius, rng);
        const GridFunction spectrum = fourier_transform(f, Direction::Forward);
        const double num = space_norm(box_apply_spectrum(spectrum, Pv, *m), s.target, P2).value;
        const double den = space_norm_spectrum(spectrum, s.source, P1).value;
        if (den > 0.0) best = std::max(best, num / den);
    }
    return make_sample(j, k, C.alpha, WitnessKind::MonteCarlo, best, false);
}

RateReport rate_check(const Space& source, const Space& target, const LabOptions& options) {
    make_setup(source, target, options);
    if (source.rq != target.rq) throw ParameterError("the localized-norm rates are stated for q1 = q2");
    if (options.j_max - options.j_min < 3) throw ParameterError("the j range must span at least 4 octaves");
    RateReport rep;
    rep.source = source;
    rep.target = target;
    rep.options = options;
    rep.predicted = index_A(source.n, source.rp, target.rp, source.rq, source.alpha, target.alpha);
    const double a_max = std::max(source.alpha, target.alpha);

    std::vector<std::pair<double, double>> envelope, mc;
    for (int j = options.j_min; j <= options.j_max; ++j) {
        const auto k = ray_index(j, a_max, source.n);
        const auto res = box_opnorm_lower(k, j, source, target, options);
        double top = 0.0;
        for (const auto& w : res.witnesses) {
            rep.samples.push_back(w);
            top = std::max(top, w.lower_bound);
        }
        envelope.emplace_back(res.witnesses.front().j_eff, top);
        rep.worst_orthogonality_error = std::max(rep.worst_orthogonality_error, res.orthogonality_error);
        if (res.pitch_stability)
            rep.worst_pitch_stability = std::max(rep.worst_pitch_stability.value_or(0.0), *res.pitch_stability);
        if (options.mc_trials > 0) {
            const auto sample =
                box_opnorm_montecarlo(k, j, source, target, options.mc_trials, options.seed, options, res.witnesses);
            rep.samples.push_back(sample);
            mc.emplace_back(sample.j_eff, sample.lower_bound);
        }
    }
    rep.uniform = fit_kind(rep.samples, WitnessKind::Uniform);
    rep.concentrated = fit_kind(rep.samples, WitnessKind::Concentrated);
    rep.spread = fit_kind(rep.samples, WitnessKind::Spread);
    rep.envelope = exponent_fit(envelope);
    if (!mc.empty()) rep.montecarlo = exponent_fit(mc);

    rep.steepest = WitnessKind::Uniform;
    rep.witness_slope = rep.uniform.slope;
    if (rep.concentrated.slope > rep.witness_slope) {
        rep.witness_slope = rep.concentrated.slope;
        rep.steepest = WitnessKind::Concentrated;
    }
    if (rep.spread.slope > rep.witness_slope) {
        rep.witness_slope = rep.spread.slope;
        rep.steepest = WitnessKind::Spread;
    }
    rep.pass = std::abs(rep.witness_slope - rep.predicted.value) <= options.tolerance;
    return rep;
}

double seq_multiplier_norm_bruteforce(const IndexedSequence& a, double s1, double s2, double rq1, double rq2,
                                      double alpha, int trials, std::uint64_t seed) {
    if (rq1 < 0.0 || rq2 < 0.0) throw ParameterError("reciprocal exponents must be >= 0");
    const std::size_t m = a.size();
    if (m == 0) return 0.0;
    const double e1 = weight_exponent(a.convention, s1, alpha);
    const double e2 = weight_exponent(a.convention, s2, alpha);

    auto ratio = [&](const Eigen::VectorXd& lambda) {
        IndexedSequence in = a, out = a;
        in.values = lambda;
        out.values = a.values.cwiseProduct(lambda);
        const double den = sequence_norm(in, s1, rq1, alpha);
        return den > 0.0 ? sequence_norm(out, s2, rq2, alpha) / den : 0.0;
    };

    double best = 0.0;
    Eigen::VectorXd best_lambda = Eigen::VectorXd::Zero(Eigen::Index(m));
    auto consider = [&](const Eigen::VectorXd& lambda) {
        const double v = ratio(lambda);
        if (v > best) {
            best = v;
            best_lambda = lambda;
        }
    };
    for (std::size_t i = 0; i < m; ++i) {
        Eigen::VectorXd e = Eigen::VectorXd::Zero(Eigen::Index(m));
        e(Eigen::Index(i)) = 1.0;
        consider(e);
    }
    if (rq2 > rq1) {
        // Extremal weights μ_k ∝ b_k^{r/q1} with b_k the weighted |a_k| and 1/r = 1/q2 - 1/q1.
        const double r = 1.0 / (rq2 - rq1);
        Eigen::VectorXd lambda(static_cast<Eigen::Index>(m));
        for (std::size_t i = 0; i < m; ++i) {
            const double base = a.base(i);
            const double b = std::abs(a.values(Eigen::Index(i))) * std::pow(base, e2 - e1);
            lambda(Eigen::Index(i)) = std::pow(b, r * rq1) * std::pow(base, -e1);
        }
        consider(lambda);
    }

    std::mt19937_64 rng(seed);
    std::normal_distribution<double> gauss;
    std::uniform_real_distribution<double> unif(0.0, 1.0);
    for (int t = 0; t < trials; ++t) {
        Eigen::VectorXd lambda(static_cast<Eigen::Index>(m));
        if (t % 4 == 0) {
            for (Eigen::Index i = 0; i < lambda.size(); ++i) lambda(i) = unif(rng);
        } else {
            for (Eigen::Index i = 0; i < lambda.size(); ++i)
                lambda(i) = std::abs(best_lambda(i)) * std::exp(0.3 * gauss(rng)) + 1e-3 * unif(rng);
        }
        consider(lambda);
    }
    return best;
}

ConsistencyReport embedding_consistency_check(const Space& source, const Space& target, int K_max,
                                              const LabOptions& options, double band) {
    if (source.n != 1 || target.n != 1) throw ParameterError("the consistency check runs in n = 1");
    if (K_max < 8) throw ParameterError("the consistency check needs K_max >= 8");
    const auto verdict = embedding_decide(source, target);
    ConsistencyReport rep;
    rep.source = source;
    rep.target = target;
    rep.margin = verdict.margin;
    rep.embeds = verdict.embeds;
    if (target.rp > source.rp) throw DomainError("the consistency check needs 1/p2 <= 1/p1");
    rep.skipped = std::abs(verdict.margin) <= band;
    LabOptions opt = options;
    opt.pitch_check = false;
    const double a_max = std::max(source.alpha, target.alpha);
    for (int k = 0; k <= K_max; ++k) {
        const auto res = box_opnorm_lower(on_ray(k, 1), 0, source, target, opt);
        double top = 0.0;
        for (const auto& w : res.witnesses) top = std::max(top, w.lower_bound);
        rep.measured.push_back(top);
    }
    std::vector<std::pair<double, double>> pts;
    for (int K = K_max / 8; K <= K_max; K *= 2) {
        auto seq = IndexedSequence::lattice(1);
        for (int k = -K; k <= K; ++k) seq.push(on_ray(k, 1), rep.measured[std::size_t(std::abs(k))]);
        const double norm = seq_multiplier_norm_closed(seq, source.s, target.s, source.rq, target.rq, a_max);
        rep.norms.emplace_back(K, norm);
        pts.emplace_back(std::log2(double(K)), norm);
    }
    rep.growth_slope = exponent_fit(pts).slope;
    rep.grows = rep.growth_slope > 0.1;
    rep.consistent = rep.skipped || (rep.embeds ? !rep.grows : rep.grows);
    return rep;
}

CoarseRatioReport coarse_ratio_check(const Space& params, double alpha2, int trials, std::uint64_t seed,
                                const FrequencyGrid& grid, double band_radius) {
    params.validate();
    if (params.alpha > alpha2) throw ParameterError("the coarse norm needs alpha1 <= alpha2");
    if (trials < 1) throw ParameterError("at least one trial is needed");
    const Partition inner = build_partition(CoveringSpec::defaults(params.alpha, grid.n), grid);
    const Partition outer = build_partition(CoveringSpec::defaults(alpha2, grid.n), grid);
    CoarseRatioReport rep;
    double lo = std::numeric_limits<double>::infinity(), hi = 0.0;
    for (int t = 0; t < trials; ++t) {
        auto rng = trial_rng(seed, Eigen::VectorXi::Zero(grid.n), t);
        const GridFunction f = random_band_limited(grid, Eigen::VectorXd::Zero(grid.n), band_radius, rng);
        const double r = coarse_norm(f, params.s, params.rp, params.rq, inner, outer).value /
                         space_norm(f, params, inner).value;
        rep.ratios.push_back(r);
        lo = std::min(lo, r);
        hi = std::max(hi, r);
    }
    rep.max_over_min = hi / lo;
    return rep;
}

namespace {

// Radial bump spectrum sampled on the grid, returned in the space domain.
GridFunction radial_bump(int n, int N, double L, double inner, double outer) {
    GridFunction spec = GridFunction::zeros(n, N, L);
    spec.domain = Domain::Frequency;
    const auto g = spec.frequency_grid();
    Eigen::VectorXd xi(n);
    for (std::int64_t i = 0; i < spec.size(); ++i) {
        const auto bin = g.bin_of_storage(i);
        for (int a = 0; a < n; ++a) xi(a) = g.frequency_of_bin(bin[a]);
        spec.values(i) = plateau_bump(xi.norm(), inner, outer);
    }
    return fourier_transform(spec, Direction::Inverse);
}

void fit_scaling(ScalingReport& rep, double tolerance) {
    std::vector<std::pair<double, double>> pts;
    for (std::size_t i = 0; i < rep.parameters.size(); ++i) pts.emplace_back(std::log2(rep.parameters[i]), rep.ratios[i]);
    rep.slope = exponent_fit(pts).slope;
    rep.pass = std::abs(rep.slope - rep.expected) <= tolerance;
}

}  // namespace

DilationReport dilation_necessity_check(double rp1, double rp2, int n, int octaves, double tolerance) {
    if (n < 1 || n > 2) throw ParameterError("the dilation check runs with n = 1, 2");
    if (rp1 < 0.0 || rp2 < 0.0) throw ParameterError("reciprocal exponents must be >= 0");
    if (octaves < 2) throw ParameterError("the dilation sweep needs at least 2 octaves");
    const int N = n == 1 ? 4096 : 512;
    const double L = n == 1 ? 1024.0 : 256.0;
    const double outer = 0.8, inner = 0.2;
    DilationReport rep;
    for (int i = 0; i <= octaves; ++i) {
        const double lambda = std::exp2(-i);
        // Fewer than 8 bins across the support radius: stop the sweep.
        if (lambda * outer * L < 8.0) {
            rep.truncated = true;
            break;
        }
        const GridFunction h = radial_bump(n, N, L, lambda * inner, lambda * outer);
        rep.parameters.push_back(lambda);
        rep.ratios.push_back(lp_quasinorm(h, rp2) / lp_quasinorm(h, rp1));
    }
    if (rep.parameters.size() < 3) throw TruncationError("the grid resolves fewer than 3 dilations");
    rep.expected = n * (rp1 - rp2);
    fit_scaling(rep, tolerance);
    rep.blowup_rate = -rep.slope;
    rep.expected_blowup = n * (rp2 - rp1);
    return rep;
}

ScalingReport bernstein_check(double rp1, double rp2, int n, int octaves, double tolerance) {
    if (n < 1 || n > 2) throw ParameterError("the Bernstein check runs with n = 1, 2");
    if (rp1 < 0.0 || rp2 < 0.0) throw ParameterError("reciprocal exponents must be >= 0");
    if (octaves < 2 || octaves > 6) throw ParameterError("the radius sweep spans 2 to 6 octaves");
    const double R_max = std::exp2(octaves);
    const double L = n == 1 ? 64.0 : 16.0;
    const int N = pow2_at_least(2.2 * R_max * L);
    ScalingReport rep;
    for (int i = 0; i <= octaves; ++i) {
        const double R = std::exp2(i);
        const GridFunction f = radial_bump(n, N, L, 0.25 * R, R);
        rep.parameters.push_back(R);
        rep.ratios.push_back(lp_quasinorm(f, rp2) / lp_quasinorm(f, rp1));
    }
    rep.expected = n * (rp1 - rp2);
    fit_scaling(rep, tolerance);
    return rep;
}

}  // namespace alphamod
