#include "alphamod/io.hpp"

#include <bit>
#include <cmath>
#include <cstring>
#include <fstream>
#include <iomanip>
#include <istream>
#include <ostream>
#include <sstream>

namespace alphamod {

static_assert(std::endian::native == std::endian::little, "binary formats assume a little-endian host");

namespace {

constexpr std::uint32_t kVersion = 1;

template <typename T>
void put(std::ostream& out, T v) {
    out.write(reinterpret_cast<const char*>(&v), sizeof(T));
}

template <typename T>
T get(std::istream& in) {
    T v{};
    if (!in.read(reinterpret_cast<char*>(&v), sizeof(T))) throw ParameterError("unexpected end of file");
    return v;
}

GridFunction space_samples(const GridFunction& f) {
    f.validate();
    if (f.freq_offset[0] != 0 || f.freq_offset[1] != 0)
        throw ParameterError("file formats store functions without a frequency offset");
    return f.domain == Domain::Space ? f : fourier_transform(f, Direction::Inverse);
}

}  // namespace

void write_grid_function(std::ostream& out, const GridFunction& f) {
    const GridFunction g = space_samples(f);
    out.write("AMGF", 4);
    put<std::uint32_t>(out, kVersion);
    put<std::uint32_t>(out, std::uint32_t(g.n));
    put<std::uint32_t>(out, std::uint32_t(g.N));
    put<double>(out, g.L);
    for (std::int64_t i = 0; i < g.size(); ++i) {
        put<double>(out, g.values(i).real());
        put<double>(out, g.values(i).imag());
    }
    if (!out) throw Error("write failed");
}

GridFunction read_grid_function(std::istream& in) {
    char magic[4];
    if (!in.read(magic, 4) || std::memcmp(magic, "AMGF", 4) != 0) throw ParameterError("not a grid function file");
    if (get<std::uint32_t>(in) != kVersion) throw ParameterError("unsupported grid function version");
    const auto n = get<std::uint32_t>(in);
    const auto N = get<std::uint32_t>(in);
    const auto L = get<double>(in);
    if (n < 1 || n > 2 || N < 2 || N > (1u << 24)) throw ParameterError("grid header out of range");
    GridFunction f = GridFunction::zeros(int(n), int(N), L);
    for (std::int64_t i = 0; i < f.size(); ++i) {
        const double re = get<double>(in);
        f.values(i) = {re, get<double>(in)};
    }
    return f;
}

void write_grid_csv(std::ostream& out, const GridFunction& f) {
    const GridFunction g = space_samples(f);
    if (g.n != 1) throw ParameterError("CSV export is for n = 1");
    out << "x,re,im\n" << std::setprecision(17);
    for (std::int64_t i = 0; i < g.size(); ++i)
        out << g.point(i)(0) << ',' << g.values(i).real() << ',' << g.values(i).imag() << '\n';
}

GridFunction read_grid_csv(std::istream& in) {
    std::string line;
    if (!std::getline(in, line)) throw ParameterError("empty CSV file");
    std::vector<double> x, re, im;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        std::istringstream row(line);
        double a, b, c;
        char s1, s2;
        if (!(row >> a >> s1 >> b >> s2 >> c) || s1 != ',' || s2 != ',')
            throw ParameterError("malformed CSV row: " + line);
        x.push_back(a);
        re.push_back(b);
        im.push_back(c);
    }
    if (x.size() < 2) throw ParameterError("CSV needs at least two samples");
    const int N = int(x.size());
    GridFunction f = GridFunction::zeros(1, N, N * (x[1] - x[0]));
    for (int i = 0; i < N; ++i) f.values(i) = {re[std::size_t(i)], im[std::size_t(i)]};
    return f;
}

GridFunction load_grid_function(const std::string& path) {
    const bool csv = path.size() >= 4 && path.compare(path.size() - 4, 4, ".csv") == 0;
    std::ifstream in(path, csv ? std::ios::in : std::ios::binary);
    if (!in) throw ParameterError("cannot open " + path);
    return csv ? read_grid_csv(in) : read_grid_function(in);
}

void save_grid_function(const std::string& path, const GridFunction& f) {
    const bool csv = path.size() >= 4 && path.compare(path.size() - 4, 4, ".csv") == 0;
    std::ofstream out(path, csv ? std::ios::out : std::ios::binary);
    if (!out) throw Error("cannot write " + path);
    if (csv)
        write_grid_csv(out, f);
    else
        write_grid_function(out, f);
}

void write_partition(std::ostream& out, const Partition& p) {
    out.write("AMPT", 4);
    put<std::uint32_t>(out, kVersion);
    put<std::uint32_t>(out, std::uint32_t(p.grid.n));
    put<std::uint32_t>(out, std::uint32_t(p.grid.N));
    put<double>(out, p.grid.L);
    put<double>(out, p.spec.alpha);
    put<std::uint32_t>(out, std::uint32_t(p.members.size()));
    for (const auto& m : p.members) {
        for (int i = 0; i < p.grid.n; ++i) put<std::int32_t>(out, i < m.index.size() ? m.index(i) : 0);
        for (int i = 0; i < p.grid.n; ++i) put<std::int64_t>(out, m.box_lo[i]);
        for (int i = 0; i < p.grid.n; ++i) put<std::int64_t>(out, m.box_extent[i]);
        for (Eigen::Index i = 0; i < m.samples.size(); ++i) put<double>(out, m.samples(i));
    }
    if (!out) throw Error("write failed");
}

}  // namespace alphamod
