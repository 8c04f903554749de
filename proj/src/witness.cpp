#include "alphamod/witness.hpp"

#include <cmath>
#include <numbers>

#include "alphamod/bump.hpp"

namespace alphamod {

namespace {

void require_power_of_two(const FrequencyGrid& grid) {
    grid.validate();
    if ((grid.N & (grid.N - 1)) != 0) throw ParameterError("grid size N must be a power of two");
}

// Adds shift-modulated samples of the bump of window l to `spectrum`.
void add_bump(GridFunction& spectrum, const WindowGeometry& g, const WitnessProfile& profile,
              const Eigen::VectorXd& shift) {
    const auto grid = spectrum.frequency_grid();
    const double R = profile.radius * g.scale;
    std::array<std::int64_t, 2> lo{0, 0}, hi{0, 0};
    for (int i = 0; i < grid.n; ++i) {
        lo[i] = std::int64_t(std::ceil((g.center(i) - R) * grid.L));
        hi[i] = std::int64_t(std::floor((g.center(i) + R) * grid.L));
        if (lo[i] <= grid.lo(i) || hi[i] >= grid.hi(i))
            throw TruncationError("witness support leaves the grid's frequency window");
    }
    if (grid.n == 1) lo[1] = hi[1] = 0;
    Eigen::VectorXd xi(grid.n);
    for (std::int64_t a = lo[0]; a <= hi[0]; ++a)
        for (std::int64_t b = lo[1]; b <= hi[1]; ++b) {
            xi(0) = double(a) / grid.L;
            if (grid.n == 2) xi(1) = double(b) / grid.L;
            const double v = plateau_bump((xi - g.center).norm() / g.scale, profile.inner, profile.radius);
            if (v == 0.0) continue;
            double phase = shift.dot(xi);
            phase -= std::floor(phase);
            spectrum.values(grid.storage_index({a, b})) += v * std::polar(1.0, -2.0 * std::numbers::pi * phase);
        }
}

WindowGeometry window_geometry(const Eigen::VectorXi& l, const CoveringSpec& covering) {
    if (covering.dyadic()) throw ParameterError("witness bumps are built on α-coverings with alpha < 1");
    return ball_geometry(l, covering.alpha);
}

}  // namespace

WitnessProfile WitnessProfile::for_covering(const CoveringSpec& spec) {
    WitnessProfile p;
    p.radius = 0.8 * spec.plateau;
    p.inner = 0.25 * p.radius;
    return p;
}

double witness_radius(const Eigen::VectorXi& l, const CoveringSpec& covering, const WitnessProfile& profile) {
    return profile.radius * window_geometry(l, covering).scale;
}

GridFunction witness_bump(const Eigen::VectorXi& l, const CoveringSpec& covering, const WitnessProfile& profile,
                          const FrequencyGrid& grid, bool require_plateau) {
    require_power_of_two(grid);
    if (!(profile.radius > profile.inner && profile.inner >= 0.0))
        throw ParameterError("witness profile needs 0 <= inner < radius");
    const auto g = window_geometry(l, covering);
    if (require_plateau && !Covering(covering).ball_in_plateau(l, g.center, profile.radius * g.scale))
        throw GeometryError("witness support is not inside the plateau of its window");
    GridFunction spectrum = GridFunction::zeros(grid.n, grid.N, grid.L, grid.offset);
    spectrum.domain = Domain::Frequency;
    add_bump(spectrum, g, profile, Eigen::VectorXd::Zero(grid.n));
    GridFunction f = fourier_transform(spectrum, Direction::Inverse);
    f.band_limit = profile.radius * g.scale + g.center.norm();
    return f;
}

SpreadWitness witness_spread(const Eigen::VectorXi& k, const CoveringSpec& fine, const CoveringSpec& coarse,
                             double pitch, const WitnessProfile& profile, const FrequencyGrid& grid) {
    require_power_of_two(grid);
    if (fine.alpha > coarse.alpha) throw ParameterError("the spread witness needs fine.alpha <= coarse.alpha");
    if (!(pitch > 0.0)) throw ParameterError("translation pitch must be positive");
    SpreadWitness out;
    out.pitch = pitch;
    if (fine.alpha == coarse.alpha) {
        out.indices = {k};
        out.singleton_fallback = true;
        out.f = witness_bump(k, fine, profile, grid, false);
        return out;
    }
    out.indices = neighbor_set(NeighborRelation::GammaTilde, k, coarse, fine).members;
    if (out.indices.empty()) {
        // Small windows may absorb nothing; use the finer window nearest to the centre.
        const Covering cf(fine);
        const auto c = ball_geometry(k, coarse.alpha).center;
        auto cands = cf.windows_touching_ball(c, 0.0);
        if (cands.empty()) throw GeometryError("no window of the finer covering meets the anchor centre");
        auto best = cands.front();
        for (const auto& l : cands)
            if ((cf.geometry(l).center - c).norm() < (cf.geometry(best).center - c).norm()) best = l;
        out.indices = {best};
        out.singleton_fallback = true;
    }
    const Eigen::VectorXi& l0 = out.indices.front();
    double span = 0.0;
    for (const auto& l : out.indices) span = std::max(span, double((l - l0).cwiseAbs().maxCoeff()));
    if ((span + 1.0) * pitch > grid.L)
        throw GeometryError("period L = " + std::to_string(grid.L) + " cannot hold " +
                            std::to_string(int(span) + 1) + " translates at pitch " + std::to_string(pitch));

    GridFunction spectrum = GridFunction::zeros(grid.n, grid.N, grid.L, grid.offset);
    spectrum.domain = Domain::Frequency;
    double reach = 0.0;
    for (const auto& l : out.indices) {
        const auto g = window_geometry(l, fine);
        add_bump(spectrum, g, profile, pitch * (l - l0).cast<double>());
        reach = std::max(reach, g.center.norm() + profile.radius * g.scale);
    }
    out.f = fourier_transform(spectrum, Direction::Inverse);
    out.f.band_limit = reach;
    return out;
}

}  // namespace alphamod
