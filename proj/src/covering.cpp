#include "alphamod/covering.hpp"

#include <algorithm>
#include <cmath>
#include <set>
#include <sstream>

#include "alphamod/bump.hpp"
#include "alphamod/sequence.hpp"

namespace alphamod {

namespace {

constexpr double kDenominatorFloor = 1e-6;

bool lex_less(const Eigen::VectorXi& a, const Eigen::VectorXi& b) {
    return std::lexicographical_compare(a.data(), a.data() + a.size(), b.data(), b.data() + b.size());
}

double distance_to_box(const Eigen::VectorXd& c, const Eigen::VectorXd& lo, const Eigen::VectorXd& hi) {
    double d2 = 0.0;
    for (Eigen::Index i = 0; i < c.size(); ++i) {
        const double x = std::clamp(c(i), lo(i), hi(i));
        d2 += (c(i) - x) * (c(i) - x);
    }
    return std::sqrt(d2);
}

std::string format_index(const Eigen::VectorXi& k) {
    std::ostringstream os;
    os << "(";
    for (Eigen::Index i = 0; i < k.size(); ++i) os << (i ? "," : "") << k(i);
    os << ")";
    return os.str();
}

// Bins of the grid within the closed frequency box [c - R, c + R].
bool bin_box(const FrequencyGrid& grid, const Eigen::VectorXd& c, double R,
             std::array<std::int64_t, 2>& lo, std::array<std::int64_t, 2>& extent) {
    lo = {0, 0};
    extent = {1, 1};
    for (int i = 0; i < grid.n; ++i) {
        const auto a = std::max<std::int64_t>(grid.lo(i), std::int64_t(std::ceil((c(i) - R) * grid.L)));
        const auto b = std::min<std::int64_t>(grid.hi(i), std::int64_t(std::floor((c(i) + R) * grid.L)));
        if (b < a) return false;
        lo[i] = a;
        extent[i] = b - a + 1;
    }
    return true;
}

template <typename F>
void for_each_bin(int n, const std::array<std::int64_t, 2>& lo, const std::array<std::int64_t, 2>& extent,
                  F&& f) {
    std::int64_t pos = 0;
    if (n == 1) {
        for (std::int64_t a = 0; a < extent[0]; ++a) f(pos++, std::array<std::int64_t, 2>{lo[0] + a, 0});
        return;
    }
    for (std::int64_t a = 0; a < extent[0]; ++a)
        for (std::int64_t b = 0; b < extent[1]; ++b)
            f(pos++, std::array<std::int64_t, 2>{lo[0] + a, lo[1] + b});
}

Eigen::VectorXd bin_frequency(const FrequencyGrid& grid, const std::array<std::int64_t, 2>& bin) {
    Eigen::VectorXd xi(grid.n);
    for (int i = 0; i < grid.n; ++i) xi(i) = grid.frequency_of_bin(bin[i]);
    return xi;
}

// Row-major position of a bin in the centered layout of the whole grid.
std::int64_t centered_index(const FrequencyGrid& grid, const std::array<std::int64_t, 2>& bin) {
    if (grid.n == 1) return bin[0] - grid.lo(0);
    return (bin[0] - grid.lo(0)) * grid.N + (bin[1] - grid.lo(1));
}

int max_abs(const Eigen::VectorXi& k) { return k.size() ? k.cwiseAbs().maxCoeff() : 0; }

double eta_against(const Covering& cov, const Eigen::VectorXi& k, const std::vector<Eigen::VectorXi>& others,
                   const Eigen::Ref<const Eigen::VectorXd>& xi) {
    const double own = cov.rho(k, xi);
    if (own == 0.0) return 0.0;
    double denom = 0.0;
    for (const auto& m : others) denom += cov.rho(m, xi);
    return own / denom;
}

Partition build_alpha_partition(const CoveringSpec& spec, const FrequencyGrid& grid) {
    const Covering cov(spec);
    Eigen::VectorXd lo(grid.n), hi(grid.n);
    for (int i = 0; i < grid.n; ++i) {
        lo(i) = grid.frequency_of_bin(grid.lo(i));
        hi(i) = grid.frequency_of_bin(grid.hi(i));
    }
    const auto touching = cov.windows_touching(lo, hi);

    const std::int64_t bins = grid.bins();
    std::vector<double> denom(std::size_t(bins), 0.0);
    std::vector<std::uint8_t> unsafe(std::size_t(bins), 0);

    Partition out;
    out.spec = spec;
    out.grid = grid;
    std::vector<Eigen::VectorXd> rho_samples;
    for (const auto& k : touching) {
        PartitionMember m;
        m.kind = MemberKind::AlphaWindow;
        m.index = k;
        const auto g = cov.geometry(k);
        m.center = g.center;
        m.scale = g.scale;
        m.inner_radius = cov.inner_radius(k);
        m.support_radius = cov.support_radius(k);
        if (!bin_box(grid, m.center, m.support_radius, m.box_lo, m.box_extent)) continue;
        const bool kept = max_abs(k) <= spec.k_max;
        Eigen::VectorXd rho(m.box_extent[0] * m.box_extent[1]);
        for_each_bin(grid.n, m.box_lo, m.box_extent, [&](std::int64_t pos, const auto& bin) {
            const double v = cov.rho(k, bin_frequency(grid, bin));
            rho(pos) = v;
            const auto c = std::size_t(centered_index(grid, bin));
            denom[c] += v;
            if (!kept && v > 0.0) unsafe[c] = 1;
        });
        if (!kept) continue;
        m.plateau_inner = 0.0;
        const double plateau = cov.plateau_radius(k);
        m.plateau_outer = plateau > 0.0 ? plateau : -1.0;
        out.members.push_back(std::move(m));
        rho_samples.push_back(std::move(rho));
    }

    out.safe.assign(std::size_t(bins), 0);
    out.min_denominator = std::numeric_limits<double>::infinity();
    std::array<std::int64_t, 2> worst{0, 0};
    for (std::int64_t idx = 0; idx < bins; ++idx) {
        const auto bin = grid.bin_of_storage(idx);
        const auto c = std::size_t(centered_index(grid, bin));
        if (unsafe[c]) continue;
        out.safe[std::size_t(idx)] = 1;
        if (denom[c] < out.min_denominator) {
            out.min_denominator = denom[c];
            worst = bin;
        }
    }
    if (out.min_denominator < kDenominatorFloor) {
        std::ostringstream os;
        os << "sum of bumps is " << out.min_denominator << " at frequency (" << grid.frequency_of_bin(worst[0]);
        if (grid.n == 2) os << ", " << grid.frequency_of_bin(worst[1]);
        os << "); c_small = " << spec.c_small << " does not cover";
        throw CoveringError(os.str());
    }

    for (std::size_t i = 0; i < out.members.size(); ++i) {
        auto& m = out.members[i];
        m.samples = std::move(rho_samples[i]);
        for_each_bin(grid.n, m.box_lo, m.box_extent, [&](std::int64_t pos, const auto& bin) {
            const double d = denom[std::size_t(centered_index(grid, bin))];
            m.samples(pos) = m.samples(pos) == 0.0 ? 0.0 : m.samples(pos) / d;
        });
    }
    std::sort(out.members.begin(), out.members.end(),
              [](const PartitionMember& a, const PartitionMember& b) { return lex_less(a.index, b.index); });
    return out;
}

Partition build_dyadic_partition(const CoveringSpec& spec, const FrequencyGrid& grid) {
    double reach2 = 0.0;
    for (int i = 0; i < grid.n; ++i) {
        const double a = std::max(std::abs(grid.frequency_of_bin(grid.lo(i))),
                                  std::abs(grid.frequency_of_bin(grid.hi(i))));
        reach2 += a * a;
    }
    const double reach = std::sqrt(reach2);
    int j_touch = 0;
    while (4.0 / 3.0 * std::ldexp(1.0, j_touch) < reach) ++j_touch;
    const int J = std::min(spec.k_max, j_touch);

    Partition out;
    out.spec = spec;
    out.grid = grid;
    out.min_denominator = 1.0;
    for (int j = 0; j <= J; ++j) {
        PartitionMember m;
        m.kind = MemberKind::Dyadic;
        m.index = Eigen::VectorXi::Constant(1, j);
        m.center = Eigen::VectorXd::Zero(grid.n);
        m.scale = std::ldexp(1.0, j);
        m.inner_radius = 4.0 / 3.0 * m.scale;
        m.support_radius = 1.5 * m.scale;
        m.plateau_inner = j == 0 ? 0.0 : 0.75 * m.scale;
        m.plateau_outer = 4.0 / 3.0 * m.scale;
        if (!bin_box(grid, m.center, m.support_radius, m.box_lo, m.box_extent)) continue;
        m.samples.resize(m.box_extent[0] * m.box_extent[1]);
        for_each_bin(grid.n, m.box_lo, m.box_extent, [&](std::int64_t pos, const auto& bin) {
            m.samples(pos) = dyadic_symbol(j, bin_frequency(grid, bin).norm());
        });
        out.members.push_back(std::move(m));
    }
    const double safe_radius = 4.0 / 3.0 * std::ldexp(1.0, J);
    out.safe.assign(std::size_t(grid.bins()), 0);
    for (std::int64_t idx = 0; idx < grid.bins(); ++idx)
        out.safe[std::size_t(idx)] = bin_frequency(grid, grid.bin_of_storage(idx)).norm() <= safe_radius;
    return out;
}

}  // namespace

double CoveringSpec::pitch() const { return alpha < 1.0 ? 1.0 / (1.0 - alpha) : 1.0; }

CoveringSpec CoveringSpec::defaults(double alpha, int n) {
    CoveringSpec s;
    s.alpha = alpha;
    s.n = n;
    if (alpha == 1.0) {
        s.c_small = 4.0 / 3.0;
        s.c_big = 1.5;
        s.plateau = 0.0;
        return s;
    }
    const double P = 1.0 / (1.0 - alpha);
    s.c_small = 0.55 * std::sqrt(P * P + n - 1);
    s.c_big = s.c_small + 0.15 * P;
    s.plateau = 0.25 * P;
    // Tangential neighbours sit only one scale apart, so the plateau must
    // also clear their supports.
    if (n > 1) s.plateau = std::min(s.plateau, std::max(0.0, 0.9 * (1.0 - s.c_big)));
    return s;
}

CoveringSpec CoveringSpec::with_constants(double alpha, int n, double c_small, double c_big) {
    if (alpha == 1.0) throw ParameterError("the dyadic partition has fixed radii 4/3 and 3/2");
    CoveringSpec s = defaults(alpha, n);
    s.c_small = c_small;
    s.c_big = c_big;
    s.plateau = std::max(0.0, 0.8 * std::min(c_small, s.pitch() - c_big));
    if (n > 1) s.plateau = std::min(s.plateau, std::max(0.0, 0.9 * (1.0 - c_big)));
    s.validate();
    return s;
}

void CoveringSpec::validate() const {
    if (!(alpha >= 0.0 && alpha <= 1.0)) throw ParameterError("alpha must lie in [0,1]");
    if (n < 1 || n > 2) throw ParameterError("coverings are implemented for n = 1, 2");
    if (!(c_small > 0.0 && c_small < c_big)) throw ParameterError("covering constants need 0 < c_small < c_big");
    if (plateau < 0.0) throw ParameterError("plateau radius must be >= 0");
    if (k_max < 0) throw ParameterError("k_max must be >= 0");
}

void FrequencyGrid::validate() const {
    if (n < 1 || n > 2) throw ParameterError("grids are implemented for n = 1, 2");
    if (N < 2 || N % 2 != 0) throw ParameterError("grid size N must be even and >= 2");
    if (!(L > 0.0)) throw ParameterError("period L must be positive");
}

std::int64_t FrequencyGrid::storage_index(const std::array<std::int64_t, 2>& bin) const {
    std::int64_t idx = 0;
    for (int i = 0; i < n; ++i) {
        std::int64_t m = bin[i] - offset[i];
        if (m < -N / 2 || m >= N / 2) throw DomainError("frequency bin outside the grid window");
        if (m < 0) m += N;
        idx = idx * N + m;
    }
    return idx;
}

std::array<std::int64_t, 2> FrequencyGrid::bin_of_storage(std::int64_t idx) const {
    std::array<std::int64_t, 2> bin{0, 0};
    for (int i = n - 1; i >= 0; --i) {
        std::int64_t m = idx % N;
        idx /= N;
        if (m >= N / 2) m -= N;
        bin[i] = m + offset[i];
    }
    return bin;
}

WindowGeometry ball_geometry(const Eigen::VectorXi& k, double alpha) {
    if (!(alpha >= 0.0 && alpha < 1.0)) throw ParameterError("ball_geometry needs 0 <= alpha < 1");
    WindowGeometry g;
    g.scale = std::pow(japanese_bracket(k), alpha / (1.0 - alpha));
    g.center = g.scale * k.cast<double>();
    return g;
}

bool PartitionMember::contains_bin(const std::array<std::int64_t, 2>& bin) const {
    for (int i = 0; i < int(center.size()); ++i)
        if (bin[i] < box_lo[i] || bin[i] >= box_lo[i] + box_extent[i]) return false;
    return true;
}

double PartitionMember::sample(const std::array<std::int64_t, 2>& bin) const {
    if (!contains_bin(bin)) return 0.0;
    const std::int64_t pos =
        center.size() == 1 ? bin[0] - box_lo[0] : (bin[0] - box_lo[0]) * box_extent[1] + (bin[1] - box_lo[1]);
    return samples(pos);
}

const PartitionMember* Partition::find(const Eigen::VectorXi& index) const {
    for (const auto& m : members)
        if (m.index == index) return &m;
    return nullptr;
}

Covering::Covering(CoveringSpec spec) : spec_(spec) {
    spec_.validate();
    if (spec_.dyadic()) throw ParameterError("the analytic α-covering needs alpha < 1");
}

double Covering::inner_radius(const Eigen::VectorXi& k) const { return spec_.c_small * geometry(k).scale; }

double Covering::support_radius(const Eigen::VectorXi& k) const { return spec_.c_big * geometry(k).scale; }

double Covering::rho(const Eigen::VectorXi& k, const Eigen::Ref<const Eigen::VectorXd>& xi) const {
    const auto g = geometry(k);
    return plateau_bump((xi - g.center).norm(), spec_.c_small * g.scale, spec_.c_big * g.scale);
}

double Covering::eta(const Eigen::VectorXi& k, const Eigen::Ref<const Eigen::VectorXd>& xi) const {
    const Eigen::VectorXd p = xi;
    return eta_against(*this, k, windows_touching(p, p), xi);
}

std::vector<Eigen::VectorXi> Covering::windows_touching(const Eigen::VectorXd& lo,
                                                        const Eigen::VectorXd& hi) const {
    const int n = spec_.n;
    if (lo.size() != n || hi.size() != n) throw ParameterError("box dimension does not match the covering");
    double reach2 = 0.0;
    for (int i = 0; i < n; ++i) {
        const double a = std::max(std::abs(lo(i)), std::abs(hi(i)));
        reach2 += a * a;
    }
    const double reach = std::sqrt(reach2);
    const double a = spec_.alpha / (1.0 - spec_.alpha);
    // |c_k| - R_k = ⟨k⟩^a (|k| - c_big) grows with |k|; windows with |k|_∞ > K stay clear.
    int K = 0;
    auto clear = [&](int m) {
        const double km = m;
        return std::pow(std::sqrt(1.0 + km * km), a) * (km - spec_.c_big) >= reach;
    };
    while (!clear(K + 1)) ++K;

    std::vector<Eigen::VectorXi> out;
    Eigen::VectorXi k(n);
    auto consider = [&] {
        const auto g = geometry(k);
        if (distance_to_box(g.center, lo, hi) < spec_.c_big * g.scale) out.push_back(k);
    };
    if (n == 1) {
        for (int i = -K; i <= K; ++i) {
            k(0) = i;
            consider();
        }
    } else {
        for (int i = -K; i <= K; ++i)
            for (int j = -K; j <= K; ++j) {
                k << i, j;
                consider();
            }
    }
    return out;
}

std::vector<Eigen::VectorXi> Covering::windows_touching_ball(const Eigen::VectorXd& center,
                                                             double radius) const {
    const Eigen::VectorXd r = Eigen::VectorXd::Constant(center.size(), radius);
    auto candidates = windows_touching(center - r, center + r);
    std::vector<Eigen::VectorXi> out;
    for (auto& k : candidates) {
        const auto g = geometry(k);
        if ((g.center - center).norm() < radius + spec_.c_big * g.scale) out.push_back(std::move(k));
    }
    return out;
}

double Covering::plateau_radius(const Eigen::VectorXi& k) const {
    const auto g = geometry(k);
    double r = spec_.c_small * g.scale;
    for (const auto& m : windows_touching_ball(g.center, r)) {
        if (m == k) continue;
        const auto h = geometry(m);
        r = std::min(r, (h.center - g.center).norm() - spec_.c_big * h.scale);
    }
    return std::max(0.0, r);
}

bool Covering::ball_in_plateau(const Eigen::VectorXi& k, const Eigen::VectorXd& c, double r) const {
    const auto g = geometry(k);
    if ((c - g.center).norm() + r > spec_.c_small * g.scale) return false;
    for (const auto& m : windows_touching_ball(c, r)) {
        if (m == k) continue;
        const auto h = geometry(m);
        if ((c - h.center).norm() - r < spec_.c_big * h.scale) return false;
    }
    return true;
}

double dyadic_phi(double radius) { return plateau_bump(radius, 4.0 / 3.0, 1.5); }

double dyadic_symbol(int j, double radius) {
    if (j < 0) throw ParameterError("dyadic level must be >= 0");
    if (j == 0) return dyadic_phi(radius);
    return dyadic_phi(std::ldexp(radius, -j)) - dyadic_phi(std::ldexp(radius, 1 - j));
}

Partition build_partition(const CoveringSpec& spec, const FrequencyGrid& grid) {
    spec.validate();
    grid.validate();
    if (spec.n != grid.n) throw ParameterError("covering and grid dimensions differ");
    return spec.dyadic() ? build_dyadic_partition(spec, grid) : build_alpha_partition(spec, grid);
}

bool IndexSet::contains(const Eigen::VectorXi& k) const {
    return std::binary_search(members.begin(), members.end(), k, lex_less);
}

IndexSet neighbor_set(NeighborRelation relation, const Eigen::VectorXi& anchor, const CoveringSpec& outer,
                      const CoveringSpec& inner) {
    outer.validate();
    inner.validate();
    if (outer.n != inner.n) throw ParameterError("covering dimensions differ");
    const bool same = relation == NeighborRelation::Lambda || relation == NeighborRelation::LambdaStar;
    if (same && outer.alpha != inner.alpha) throw ParameterError("Λ sets live in a single covering");

    IndexSet out;
    out.relation = relation;
    out.anchor = anchor;
    std::vector<Eigen::VectorXi> found;

    if (inner.dyadic()) {
        if (!outer.dyadic()) throw ParameterError("Γ sets with a dyadic inner covering are not implemented");
        if (anchor.size() != 1 || anchor(0) < 0) throw ParameterError("dyadic anchor must be a level j >= 0");
        const int j = anchor(0);
        const int w = relation == NeighborRelation::LambdaStar ? 2 : relation == NeighborRelation::GammaTilde ? 0 : 1;
        for (int m = std::max(0, j - w); m <= j + w; ++m) found.push_back(Eigen::VectorXi::Constant(1, m));
    } else {
        if (anchor.size() != inner.n) throw ParameterError("anchor dimension does not match the covering");
        const Covering cin(inner);
        if (relation == NeighborRelation::Lambda || relation == NeighborRelation::Gamma) {
            if (outer.dyadic()) {
                const int j = anchor(0);
                const double lo_edge = j == 0 ? 0.0 : 4.0 / 3.0 * std::ldexp(1.0, j - 1);
                const double hi_edge = 1.5 * std::ldexp(1.0, j);
                for (auto& l : cin.windows_touching_ball(Eigen::VectorXd::Zero(inner.n), hi_edge)) {
                    const auto g = cin.geometry(l);
                    if (g.center.norm() + cin.support_radius(l) > lo_edge) found.push_back(std::move(l));
                }
            } else {
                const Covering cout(outer);
                found = cin.windows_touching_ball(cout.geometry(anchor).center, cout.support_radius(anchor));
            }
        } else if (relation == NeighborRelation::LambdaStar) {
            std::set<std::vector<int>> seen;
            const auto first = cin.windows_touching_ball(cin.geometry(anchor).center, cin.support_radius(anchor));
            for (const auto& l : first)
                for (auto& m : cin.windows_touching_ball(cin.geometry(l).center, cin.support_radius(l)))
                    if (seen.insert(std::vector<int>(m.data(), m.data() + m.size())).second)
                        found.push_back(std::move(m));
        } else {
            if (outer.dyadic()) {
                const int j = anchor(0);
                const double lo_edge = j == 0 ? 0.0 : 0.75 * std::ldexp(1.0, j);
                const double hi_edge = 4.0 / 3.0 * std::ldexp(1.0, j);
                for (auto& l : cin.windows_touching_ball(Eigen::VectorXd::Zero(inner.n), hi_edge)) {
                    const auto g = cin.geometry(l);
                    const double R = cin.support_radius(l);
                    if (g.center.norm() + R <= hi_edge && g.center.norm() - R >= lo_edge)
                        found.push_back(std::move(l));
                }
            } else {
                const Covering cout(outer);
                for (auto& l : cin.windows_touching_ball(cout.geometry(anchor).center, cout.inner_radius(anchor))) {
                    if (cout.ball_in_plateau(anchor, cin.geometry(l).center, cin.support_radius(l)))
                        found.push_back(std::move(l));
                }
            }
        }
    }

    for (const auto& l : found) {
        const int size = inner.dyadic() ? l(0) : max_abs(l);
        if (size > inner.k_max)
            throw TruncationError("neighbour " + format_index(l) + " exceeds k_max = " + std::to_string(inner.k_max));
    }
    std::sort(found.begin(), found.end(), lex_less);
    out.members = std::move(found);
    return out;
}

PartitionReport verify_partition(const Partition& partition) {
    const auto& grid = partition.grid;
    const std::int64_t bins = grid.bins();
    std::vector<double> sum(std::size_t(bins), 0.0);
    std::vector<int> overlap(std::size_t(bins), 0);
    PartitionReport rep;
    rep.min_denominator = partition.min_denominator;

    std::vector<double> grads;
    for (const auto& m : partition.members) {
        MemberCheck mc;
        mc.index = m.index;
        mc.scale = m.scale;
        mc.fully_inside = true;
        for (int i = 0; i < grid.n; ++i) {
            if ((m.center(i) - m.support_radius) * grid.L < double(grid.lo(i)) ||
                (m.center(i) + m.support_radius) * grid.L > double(grid.hi(i)))
                mc.fully_inside = false;
        }
        const double hole = m.kind == MemberKind::Dyadic && m.index(0) > 0 ? 2.0 / 3.0 * m.scale : -1.0;
        for_each_bin(grid.n, m.box_lo, m.box_extent, [&](std::int64_t pos, const auto& bin) {
            const double v = m.samples(pos);
            const auto idx = std::size_t(grid.storage_index(bin));
            sum[idx] += v;
            if (v > 0.0) ++overlap[idx];
            mc.range_defect = std::max({mc.range_defect, -v, v - 1.0});
            const double r = (bin_frequency(grid, bin) - m.center).norm();
            if (r >= m.support_radius || r <= hole) mc.outside_max = std::max(mc.outside_max, std::abs(v));
            if (r >= m.plateau_inner && r <= m.plateau_outer)
                mc.plateau_defect = std::max(mc.plateau_defect, std::abs(v - 1.0));
            for (int axis = 0; axis < grid.n; ++axis) {
                auto prev = bin, next = bin;
                --prev[axis];
                ++next[axis];
                const double d = (m.sample(next) - m.sample(prev)) * grid.L / 2.0;
                mc.gradient_scaled = std::max(mc.gradient_scaled, std::abs(d) * m.scale);
            }
        });
        rep.support_violation = std::max(rep.support_violation, mc.outside_max);
        rep.plateau_violation = std::max(rep.plateau_violation, mc.plateau_defect);
        rep.range_violation = std::max(rep.range_violation, mc.range_defect);
        if (mc.fully_inside && m.kind == MemberKind::AlphaWindow && mc.gradient_scaled > 0.0)
            grads.push_back(mc.gradient_scaled);
        rep.members.push_back(std::move(mc));
    }
    if (!grads.empty()) {
        auto mid = grads.begin() + std::ptrdiff_t(grads.size() / 2);
        std::nth_element(grads.begin(), mid, grads.end());
        rep.gradient_ratio = *std::max_element(grads.begin(), grads.end()) / *mid;
    }
    for (std::int64_t idx = 0; idx < bins; ++idx) {
        rep.max_overlap = std::max(rep.max_overlap, overlap[std::size_t(idx)]);
        if (!partition.is_safe(idx)) continue;
        ++rep.safe_bins;
        rep.sum_deviation = std::max(rep.sum_deviation, std::abs(sum[std::size_t(idx)] - 1.0));
    }
    return rep;
}

std::vector<double> gradient_scale_profile(const Covering& covering, const std::vector<Eigen::VectorXi>& ks,
                                           int samples_per_radius) {
    if (samples_per_radius < 4) throw ParameterError("samples_per_radius must be >= 4");
    std::vector<double> out;
    out.reserve(ks.size());
    for (const auto& k : ks) {
        const auto g = covering.geometry(k);
        const double R = covering.support_radius(k);
        const auto others = covering.windows_touching_ball(g.center, R);
        const double h = R / samples_per_radius;
        double best = 0.0;
        for (int axis = 0; axis < covering.spec().n; ++axis) {
            Eigen::VectorXd x = g.center;
            for (int i = -samples_per_radius; i < samples_per_radius; ++i) {
                x(axis) = g.center(axis) + i * h;
                const double a = eta_against(covering, k, others, x);
                x(axis) += h;
                const double b = eta_against(covering, k, others, x);
                best = std::max(best, std::abs(b - a) / h);
            }
        }
        out.push_back(best * g.scale);
    }
    return out;
}

const char* to_string(NeighborRelation r) {
    switch (r) {
        case NeighborRelation::Lambda: return "Lambda";
        case NeighborRelation::LambdaStar: return "LambdaStar";
        case NeighborRelation::Gamma: return "Gamma";
        case NeighborRelation::GammaTilde: return "GammaTilde";
    }
    return "?";
}

}  // namespace alphamod
