#pragma once

// Sampled functions on the periodic grid [0, L)^n with N points per axis,
// their Fourier transforms and frequency-localization operators.
//
// Conventions: f̂(ξ) = ∫ f(x) e^{-2πi x·ξ} dx. The forward transform is the
// DFT scaled by (L/N)^n and lives on the lattice (1/L)Z^n; the inverse is the
// unnormalized inverse DFT divided by L^n. A nonzero frequency offset o shifts
// the represented band to (o + [-N/2, N/2))/L; the stored samples are then the
// demodulated values e^{-2πi o·x/L} f(x), which have the same modulus as f.

#include <array>
#include <complex>
#include <cstdint>
#include <functional>
#include <optional>
#include <random>

#include <Eigen/Core>

#include "alphamod/covering.hpp"
#include "alphamod/errors.hpp"

namespace alphamod {

enum class Domain { Space, Frequency };

struct GridFunction {
    int n = 1;
    int N = 0;
    double L = 1.0;
    std::array<std::int64_t, 2> freq_offset{0, 0};
    Domain domain = Domain::Space;
    // Space: demodulated samples, row-major with axis 0 slowest.
    // Frequency: f̂ at the bins of frequency_grid() in FFT storage order.
    Eigen::VectorXcd values;
    std::optional<double> band_limit;

    static GridFunction zeros(int n, int N, double L, std::array<std::int64_t, 2> offset = {0, 0});
    /// Samples f at x_i = i·L/N (per axis). With an offset, f is demodulated on the fly.
    static GridFunction sample(int n, int N, double L,
                               const std::function<std::complex<double>(const Eigen::VectorXd&)>& f,
                               std::array<std::int64_t, 2> offset = {0, 0});

    void validate() const;
    std::int64_t size() const { return n == 1 ? N : std::int64_t(N) * N; }
    double cell() const;  // (L/N)^n
    FrequencyGrid frequency_grid() const { return {n, N, L, freq_offset}; }
    bool same_grid(const GridFunction& o) const;
    /// Spatial point of sample i.
    Eigen::VectorXd point(std::int64_t i) const;
    /// True samples f(x_i) (remodulated when the offset is nonzero).
    Eigen::VectorXcd spatial_values() const;
};

enum class Direction { Forward, Inverse };

/// Forward maps a space-domain function to its spectrum; Inverse maps back.
GridFunction fourier_transform(const GridFunction& f, Direction direction);

/// F^{-1}(symbol · F f) for one partition member; f must live on the partition grid.
GridFunction box_apply(const GridFunction& f, const Partition& partition, const PartitionMember& member);

/// Same operation on a precomputed spectrum (Frequency domain), returning a space-domain function.
GridFunction box_apply_spectrum(const GridFunction& spectrum, const Partition& partition,
                                const PartitionMember& member);

/// Riemann-sum L^p (quasi-)norm with rp = 1/p; rp = 0 gives the maximum modulus.
double lp_quasinorm(const GridFunction& f, double rp);

/// Same quadrature on raw samples with cell volume `cell`.
double lp_quasinorm(const Eigen::Ref<const Eigen::VectorXcd>& values, double rp, double cell);

/// Fraction of spectral energy Σ|f̂|² outside the safe bins of the partition.
double spectral_leakage(const GridFunction& spectrum, const Partition& partition);

/// Translate by a (spatial shift): f(· - a). Exact for grid-compatible shifts,
/// band-limited interpolation otherwise.
GridFunction translate(const GridFunction& f, const Eigen::VectorXd& a);

/// Random trigonometric polynomial: independent complex Gaussian coefficients
/// on the bins within distance `radius` of `center` (space domain result).
GridFunction random_band_limited(const FrequencyGrid& grid, const Eigen::VectorXd& center, double radius,
                                 std::mt19937_64& rng);

}  // namespace alphamod
