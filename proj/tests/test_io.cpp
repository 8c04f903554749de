#include <cstring>
#include <random>
#include <sstream>

#include <doctest.h>

#include "alphamod/io.hpp"

using namespace alphamod;

namespace {

GridFunction random_samples(int n, int N, double L, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::normal_distribution<double> g;
    GridFunction f = GridFunction::zeros(n, N, L);
    for (std::int64_t i = 0; i < f.size(); ++i) f.values(i) = {g(rng), g(rng)};
    return f;
}

}  // namespace

TEST_CASE("binary grid functions round-trip bit for bit") {
    for (int n : {1, 2}) {
        const auto f = random_samples(n, 32, 3.5, 11 + n);
        std::stringstream buf;
        write_grid_function(buf, f);
        const std::string bytes = buf.str();
        CHECK(bytes.size() == 24 + 16 * std::size_t(f.size()));
        CHECK(bytes.compare(0, 4, "AMGF") == 0);
        std::uint32_t version, dim, N;
        double L;
        std::memcpy(&version, bytes.data() + 4, 4);
        std::memcpy(&dim, bytes.data() + 8, 4);
        std::memcpy(&N, bytes.data() + 12, 4);
        std::memcpy(&L, bytes.data() + 16, 8);
        CHECK(version == 1);
        CHECK(dim == std::uint32_t(n));
        CHECK(N == 32);
        CHECK(L == 3.5);
        const auto g = read_grid_function(buf);
        CHECK(g.n == n);
        CHECK(g.N == 32);
        CHECK(g.L == 3.5);
        CHECK(g.values == f.values);
    }
}

TEST_CASE("spectra are written as space samples") {
    const auto f = random_samples(1, 64, 2.0, 5);
    std::stringstream buf;
    write_grid_function(buf, fourier_transform(f, Direction::Forward));
    const auto g = read_grid_function(buf);
    CHECK((g.values - f.values).cwiseAbs().maxCoeff() < 1e-12);
}

TEST_CASE("CSV round-trip for n = 1") {
    const auto f = random_samples(1, 16, 4.0, 9);
    std::stringstream buf;
    write_grid_csv(buf, f);
    std::string header;
    std::getline(std::stringstream(buf.str()), header);
    CHECK(header == "x,re,im");
    const auto g = read_grid_csv(buf);
    CHECK(g.N == 16);
    CHECK(g.L == doctest::Approx(4.0).epsilon(1e-15));
    CHECK(g.values == f.values);
    CHECK_THROWS_AS(write_grid_csv(buf, random_samples(2, 4, 1.0, 1)), ParameterError);
}

TEST_CASE("malformed input is rejected") {
    std::stringstream bad("XXXX0000");
    CHECK_THROWS_AS(read_grid_function(bad), ParameterError);
    const auto f = random_samples(1, 16, 1.0, 2);
    std::stringstream buf;
    write_grid_function(buf, f);
    std::stringstream cut(buf.str().substr(0, 40));
    CHECK_THROWS_AS(read_grid_function(cut), ParameterError);
    std::stringstream csv("x,re,im\n0,1\n");
    CHECK_THROWS_AS(read_grid_csv(csv), ParameterError);

    auto shifted = GridFunction::zeros(1, 16, 1.0, {8, 0});
    std::stringstream out;
    CHECK_THROWS_AS(write_grid_function(out, shifted), ParameterError);
}

TEST_CASE("partition dump layout") {
    const auto P = build_partition(CoveringSpec::defaults(0.5, 1), FrequencyGrid{1, 256, 8.0, {0, 0}});
    std::stringstream buf;
    write_partition(buf, P);
    const std::string bytes = buf.str();
    CHECK(bytes.compare(0, 4, "AMPT") == 0);
    double L, alpha;
    std::uint32_t count;
    std::memcpy(&L, bytes.data() + 16, 8);
    std::memcpy(&alpha, bytes.data() + 24, 8);
    std::memcpy(&count, bytes.data() + 32, 4);
    CHECK(L == 8.0);
    CHECK(alpha == 0.5);
    CHECK(count == P.members.size());
    std::size_t expected = 36;
    for (const auto& m : P.members) expected += 4 + 16 + 8 * std::size_t(m.samples.size());
    CHECK(bytes.size() == expected);
}
