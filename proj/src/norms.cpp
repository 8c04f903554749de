#include "alphamod/norms.hpp"

#include <cmath>

#include "alphamod/parallel.hpp"
#include "alphamod/sequence.hpp"

namespace alphamod {

namespace {

void require_band_limited(const GridFunction& spectrum, const Partition& partition) {
    const double leak = std::sqrt(spectral_leakage(spectrum, partition));
    if (leak > kBandLimitTolerance)
        throw TruncationError("spectrum leaves the safe window (relative amplitude " + std::to_string(leak) + ")");
}

bool touches(const GridFunction& spectrum, const Partition& partition, const PartitionMember& m) {
    const auto& g = partition.grid;
    const std::int64_t rows = m.box_extent[0];
    const std::int64_t cols = g.n == 1 ? 1 : m.box_extent[1];
    for (std::int64_t a = 0; a < rows; ++a)
        for (std::int64_t b = 0; b < cols; ++b)
            if (m.samples(a * cols + b) != 0.0 &&
                spectrum.values(g.storage_index({m.box_lo[0] + a, m.box_lo[1] + b})) != 0.0)
                return true;
    return false;
}

IndexedSequence make_sequence(const Partition& partition) {
    return partition.spec.dyadic() ? IndexedSequence::dyadic() : IndexedSequence::lattice(partition.grid.n);
}

}  // namespace

NormResult space_norm_spectrum(const GridFunction& spectrum, const Space& params, const Partition& partition) {
    params.validate();
    if (params.alpha != partition.spec.alpha) throw ParameterError("space alpha differs from the partition alpha");
    if (params.n != partition.grid.n) throw ParameterError("space dimension differs from the grid dimension");
    require_band_limited(spectrum, partition);

    const auto& members = partition.members;
    std::vector<double> piece(members.size(), 0.0);
    std::vector<char> active(members.size(), 0);
    parallel_for(members.size(), [&](std::size_t i) {
        if (!touches(spectrum, partition, members[i])) return;
        active[i] = 1;
        piece[i] = lp_quasinorm(box_apply_spectrum(spectrum, partition, members[i]), params.rp);
    });

    NormResult out;
    IndexedSequence seq = make_sequence(partition);
    for (std::size_t i = 0; i < members.size(); ++i) {
        if (!active[i] || piece[i] == 0.0) continue;
        out.pieces.emplace_back(members[i].index, piece[i]);
        seq.push(members[i].index, piece[i]);
    }
    out.value = seq.size() ? sequence_norm(seq, params.s, params.rq, params.alpha) : 0.0;
    return out;
}

NormResult space_norm(const GridFunction& f, const Space& params, const Partition& partition) {
    return space_norm_spectrum(fourier_transform(f, Direction::Forward), params, partition);
}

NormResult coarse_norm(const GridFunction& f, double s, double rp, double rq, const Partition& inner,
                       const Partition& outer) {
    if (inner.spec.alpha > outer.spec.alpha) throw ParameterError("coarse norm needs alpha1 <= alpha2");
    if (inner.spec.dyadic()) throw ParameterError("the inner covering of a coarse norm must have alpha < 1");
    if (!(inner.grid == outer.grid)) throw ParameterError("inner and outer partitions use different grids");
    const GridFunction spectrum = fourier_transform(f, Direction::Forward);
    require_band_limited(spectrum, outer);
    const Space inner_params{rp, rq, 0.0, inner.spec.alpha, inner.grid.n};

    const auto& members = outer.members;
    std::vector<double> piece(members.size(), 0.0);
    std::vector<char> active(members.size(), 0);
    for (std::size_t i = 0; i < members.size(); ++i) {
        if (!touches(spectrum, outer, members[i])) continue;
        active[i] = 1;
        const GridFunction local = box_apply_spectrum(spectrum, outer, members[i]);
        piece[i] = space_norm(local, inner_params, inner).value;
    }
    NormResult out;
    IndexedSequence seq = make_sequence(outer);
    for (std::size_t i = 0; i < members.size(); ++i) {
        if (!active[i] || piece[i] == 0.0) continue;
        out.pieces.emplace_back(members[i].index, piece[i]);
        seq.push(members[i].index, piece[i]);
    }
    out.value = seq.size() ? sequence_norm(seq, s, rq, outer.spec.alpha) : 0.0;
    return out;
}

}  // namespace alphamod
