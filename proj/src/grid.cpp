#include "alphamod/grid.hpp"

#include <cmath>
#include <numbers>

#include <unsupported/Eigen/FFT>

namespace alphamod {

namespace {

using cd = std::complex<double>;

Eigen::FFT<double>& engine() {
    thread_local Eigen::FFT<double> fft = [] {
        Eigen::FFT<double> f;
        f.SetFlag(Eigen::FFT<double>::Unscaled);
        return f;
    }();
    return fft;
}

// Unnormalized DFT along every axis (sign -1 forward, +1 inverse).
void dft(Eigen::VectorXcd& data, int n, int N, bool forward) {
    auto& fft = engine();
    Eigen::VectorXcd tmp(N), out(N);
    auto line = [&](cd* base, std::int64_t stride) {
        for (int i = 0; i < N; ++i) tmp(i) = base[i * stride];
        if (forward)
            fft.fwd(out.data(), tmp.data(), N);
        else
            fft.inv(out.data(), tmp.data(), N);
        for (int i = 0; i < N; ++i) base[i * stride] = out(i);
    };
    if (n == 1) {
        line(data.data(), 1);
        return;
    }
    for (int r = 0; r < N; ++r) line(data.data() + std::int64_t(r) * N, 1);
    for (int c = 0; c < N; ++c) line(data.data() + c, N);
}

// exp(2πi o·x/L) at sample i.
cd modulation(const GridFunction& f, std::int64_t i, double sign) {
    double phase = 0.0;
    std::int64_t rest = i;
    for (int axis = f.n - 1; axis >= 0; --axis) {
        const std::int64_t j = rest % f.N;
        rest /= f.N;
        // o·j/N reduced mod 1 before scaling keeps the phase accurate for large offsets.
        const std::int64_t num = (f.freq_offset[axis] % f.N) * j % f.N;
        phase += double(num) / double(f.N);
    }
    return std::polar(1.0, sign * 2.0 * std::numbers::pi * phase);
}

bool has_offset(const GridFunction& f) { return f.freq_offset[0] != 0 || f.freq_offset[1] != 0; }

}  // namespace

GridFunction GridFunction::zeros(int n, int N, double L, std::array<std::int64_t, 2> offset) {
    GridFunction f;
    f.n = n;
    f.N = N;
    f.L = L;
    f.freq_offset = offset;
    if (n < 1 || n > 2 || N < 2) throw ParameterError("grids need n in {1,2} and N >= 2");
    f.values = Eigen::VectorXcd::Zero(f.size());
    f.validate();
    return f;
}

GridFunction GridFunction::sample(int n, int N, double L, const std::function<cd(const Eigen::VectorXd&)>& fn,
                                  std::array<std::int64_t, 2> offset) {
    GridFunction f = zeros(n, N, L, offset);
    const bool demod = has_offset(f);
    for (std::int64_t i = 0; i < f.size(); ++i) {
        f.values(i) = fn(f.point(i));
        if (demod) f.values(i) *= modulation(f, i, -1.0);
    }
    return f;
}

void GridFunction::validate() const {
    if (n < 1 || n > 2) throw ParameterError("grids are implemented for n = 1, 2");
    if (N < 2 || (N & (N - 1)) != 0) throw ParameterError("grid size N must be a power of two");
    if (!(L > 0.0)) throw ParameterError("period L must be positive");
    if (values.size() != size()) throw ParameterError("sample count does not match N^n");
}

double GridFunction::cell() const { return std::pow(L / N, n); }

bool GridFunction::same_grid(const GridFunction& o) const {
    return n == o.n && N == o.N && L == o.L && freq_offset == o.freq_offset;
}

Eigen::VectorXd GridFunction::point(std::int64_t i) const {
    Eigen::VectorXd x(n);
    for (int axis = n - 1; axis >= 0; --axis) {
        x(axis) = double(i % N) * L / N;
        i /= N;
    }
    return x;
}

Eigen::VectorXcd GridFunction::spatial_values() const {
    if (domain != Domain::Space) throw ParameterError("spatial values need a space-domain function");
    if (!has_offset(*this)) return values;
    Eigen::VectorXcd out(values.size());
    for (std::int64_t i = 0; i < size(); ++i) out(i) = values(i) * modulation(*this, i, 1.0);
    return out;
}

GridFunction fourier_transform(const GridFunction& f, Direction direction) {
    f.validate();
    GridFunction out = f;
    if (direction == Direction::Forward) {
        if (f.domain != Domain::Space) throw ParameterError("forward transform needs a space-domain function");
        dft(out.values, f.n, f.N, true);
        out.values *= f.cell();
        out.domain = Domain::Frequency;
    } else {
        if (f.domain != Domain::Frequency) throw ParameterError("inverse transform needs a spectrum");
        dft(out.values, f.n, f.N, false);
        out.values /= std::pow(f.L, f.n);
        out.domain = Domain::Space;
    }
    return out;
}

GridFunction box_apply_spectrum(const GridFunction& spectrum, const Partition& partition,
                                const PartitionMember& member) {
    if (spectrum.domain != Domain::Frequency) throw ParameterError("box_apply_spectrum needs a spectrum");
    if (!(spectrum.frequency_grid() == partition.grid)) throw ParameterError("function and partition grids differ");
    GridFunction out = spectrum;
    out.values.setZero();
    out.band_limit.reset();
    const auto& g = partition.grid;
    const std::int64_t rows = member.box_extent[0];
    const std::int64_t cols = g.n == 1 ? 1 : member.box_extent[1];
    for (std::int64_t a = 0; a < rows; ++a)
        for (std::int64_t b = 0; b < cols; ++b) {
            const double eta = member.samples(a * cols + b);
            if (eta == 0.0) continue;
            const std::int64_t idx = g.storage_index({member.box_lo[0] + a, member.box_lo[1] + b});
            out.values(idx) = spectrum.values(idx) * eta;
        }
    return fourier_transform(out, Direction::Inverse);
}

GridFunction box_apply(const GridFunction& f, const Partition& partition, const PartitionMember& member) {
    return box_apply_spectrum(fourier_transform(f, Direction::Forward), partition, member);
}

double lp_quasinorm(const Eigen::Ref<const Eigen::VectorXcd>& values, double rp, double cell) {
    if (rp < 0.0) throw ParameterError("reciprocal exponent must be >= 0");
    if (values.size() == 0) return 0.0;
    const double peak = values.cwiseAbs().maxCoeff();
    if (rp == 0.0 || peak == 0.0) return peak;
    const double p = 1.0 / rp;
    double acc = 0.0;
    for (Eigen::Index i = 0; i < values.size(); ++i) acc += std::pow(std::abs(values(i)) / peak, p);
    return peak * std::pow(acc * cell, rp);
}

double lp_quasinorm(const GridFunction& f, double rp) {
    f.validate();
    if (f.domain != Domain::Space) throw ParameterError("L^p norms are taken in the space domain");
    return lp_quasinorm(f.values, rp, f.cell());
}

double spectral_leakage(const GridFunction& spectrum, const Partition& partition) {
    if (spectrum.domain != Domain::Frequency) throw ParameterError("leakage is measured on a spectrum");
    if (!(spectrum.frequency_grid() == partition.grid)) throw ParameterError("function and partition grids differ");
    double total = 0.0, outside = 0.0;
    for (std::int64_t i = 0; i < spectrum.size(); ++i) {
        const double e = std::norm(spectrum.values(i));
        total += e;
        if (!partition.is_safe(i)) outside += e;
    }
    return total == 0.0 ? 0.0 : outside / total;
}

GridFunction translate(const GridFunction& f, const Eigen::VectorXd& a) {
    if (f.domain != Domain::Space) throw ParameterError("translation acts on space-domain functions");
    if (a.size() != f.n) throw ParameterError("shift dimension does not match the grid");
    GridFunction spec = fourier_transform(f, Direction::Forward);
    const auto grid = f.frequency_grid();
    for (std::int64_t i = 0; i < spec.size(); ++i) {
        const auto bin = grid.bin_of_storage(i);
        double phase = 0.0;
        for (int axis = 0; axis < f.n; ++axis) phase += double(bin[axis]) * a(axis) / f.L;
        phase -= std::floor(phase);
        spec.values(i) *= std::polar(1.0, -2.0 * std::numbers::pi * phase);
    }
    GridFunction out = fourier_transform(spec, Direction::Inverse);
    out.band_limit = f.band_limit;
    return out;
}

GridFunction random_band_limited(const FrequencyGrid& grid, const Eigen::VectorXd& center, double radius,
                                 std::mt19937_64& rng) {
    if (center.size() != grid.n) throw ParameterError("centre dimension does not match the grid");
    GridFunction spec = GridFunction::zeros(grid.n, grid.N, grid.L, grid.offset);
    spec.domain = Domain::Frequency;
    std::normal_distribution<double> gauss;
    Eigen::VectorXd xi(grid.n);
    for (std::int64_t i = 0; i < spec.size(); ++i) {
        const auto bin = grid.bin_of_storage(i);
        for (int a = 0; a < grid.n; ++a) xi(a) = grid.frequency_of_bin(bin[a]);
        if ((xi - center).norm() > radius) continue;
        const double re = gauss(rng);
        spec.values(i) = {re, gauss(rng)};
    }
    GridFunction f = fourier_transform(spec, Direction::Inverse);
    f.band_limit = center.norm() + radius;
    return f;
}

}  // namespace alphamod
