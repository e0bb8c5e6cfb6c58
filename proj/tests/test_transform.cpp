#include <doctest.h>

#include <cmath>
#include <random>

#include "inls/transform.hpp"

using namespace inls;

namespace {

State random_state(const GridPtr& g, unsigned seed) {
    std::mt19937_64 rng(seed);
    std::normal_distribution<double> dist(0.0, 1.0);
    State u;
    u.grid = g;
    u.values.resize(g->interior_count());
    for (auto& v : u.values) v = Complex(dist(rng), dist(rng));
    return u;
}

double l2_diff(const State& a, const State& b) {
    double s = 0.0;
    for (size_t j = 0; j < a.values.size(); ++j) s += std::norm(a.values[j] - b.values[j]);
    return std::sqrt(s);
}

State sine_mode(const GridPtr& g, int m) {
    State u;
    u.grid = g;
    u.values.resize(g->interior_count());
    for (int j = 0; j < g->interior_count(); ++j)
        u.values[j] = std::sin(g->wavenumbers[m - 1] * g->nodes[j]);
    return u;
}

}  // namespace

TEST_CASE("sine transform maps basis functions to unit coefficient vectors") {
    auto g = make_grid(7.0, 64);
    State u = sine_mode(g, 3);
    SpectralState sp = to_spectral(u);
    for (int m = 0; m < g->interior_count(); ++m) {
        double expect = (m == 2) ? 1.0 : 0.0;
        CHECK(std::abs(sp.coeffs[m] - expect) < 1e-12);
    }

    State zero;
    zero.grid = g;
    zero.values.assign(g->interior_count(), Complex(0, 0));
    SpectralState spz = to_spectral(zero);
    for (const auto& c : spz.coeffs) CHECK(std::abs(c) == 0.0);
}

TEST_CASE("round trip is the identity to 1e-12 relative") {
    auto g = make_grid(11.0, 256);
    State u = random_state(g, 42);
    State back = from_spectral(to_spectral(u));
    double scale = sobolev_norm(u, 0.0, NormKind::homogeneous);
    CHECK(l2_diff(u, back) <= 1e-12 * scale);
}

TEST_CASE("free propagator: eigenfunction phase, identity, group law, unitarity") {
    auto g = make_grid(10.0, 128);

    SUBCASE("sin(k_1 x) advanced so k_1^2 t = pi flips sign") {
        State u = sine_mode(g, 1);
        double k1 = g->wavenumbers[0];
        State v = free_propagate(u, M_PI / (k1 * k1));
        for (int j = 0; j < g->interior_count(); ++j)
            CHECK(std::abs(v.values[j] + u.values[j]) < 1e-12);
    }

    SUBCASE("dt = 0 is the identity") {
        State u = random_state(g, 1);
        State v = free_propagate(u, 0.0);
        CHECK(l2_diff(u, v) == 0.0);
    }

    SUBCASE("multiplier group law") {
        State u = random_state(g, 2);
        State ab = free_propagate(free_propagate(u, 0.37), 0.21);
        State once = free_propagate(u, 0.58);
        CHECK(l2_diff(ab, once) <= 1e-12 * sobolev_norm(u, 0.0, NormKind::homogeneous));
    }

    SUBCASE("L2 norm preserved for random states and times") {
        std::mt19937_64 rng(5);
        std::uniform_real_distribution<double> ts(-10.0, 10.0);
        for (int i = 0; i < 20; ++i) {
            State u = random_state(g, 100 + i);
            double n0 = sobolev_norm(u, 0.0, NormKind::homogeneous);
            double n1 = sobolev_norm(free_propagate(u, ts(rng)), 0.0, NormKind::homogeneous);
            CHECK(std::abs(n1 - n0) <= 1e-12 * n0);
        }
    }
}

TEST_CASE("sobolev norms") {
    SUBCASE("single mode ratio recovers the wavenumber") {
        auto g = make_grid(M_PI, 2048);
        State u = sine_mode(g, 2);
        double h1 = sobolev_norm(u, 1.0, NormKind::homogeneous);
        double l2 = sobolev_norm(u, 0.0, NormKind::homogeneous);
        CHECK(h1 / l2 == doctest::Approx(2.0).epsilon(1e-10));
    }

    SUBCASE("zero state has zero norm") {
        auto g = make_grid(5.0, 32);
        State u;
        u.grid = g;
        u.values.assign(g->interior_count(), Complex(0, 0));
        CHECK(sobolev_norm(u, 0.5, NormKind::inhomogeneous) == 0.0);
    }

    SUBCASE("odd gaussian closed forms") {
        // ||u||_{L2}^2 = sqrt(pi)/2^{5/2}, ||u||_{Hdot1}^2 = (3/4) sqrt(pi/2)
        auto g = make_grid(40.0, 4096);
        State u;
        u.grid = g;
        u.values.resize(g->interior_count());
        for (int j = 0; j < g->interior_count(); ++j) {
            double x = g->nodes[j];
            u.values[j] = x * std::exp(-x * x);
        }
        double l2sq = std::pow(sobolev_norm(u, 0.0, NormKind::homogeneous), 2);
        double h1sq = std::pow(sobolev_norm(u, 1.0, NormKind::homogeneous), 2);
        CHECK(l2sq == doctest::Approx(0.31332853432887503).epsilon(1e-9));
        CHECK(h1sq == doctest::Approx(0.93998560298662509).epsilon(1e-9));
    }

    SUBCASE("inhomogeneous norm dominates L2") {
        auto g = make_grid(9.0, 128);
        State u = random_state(g, 3);
        double l2 = sobolev_norm(u, 0.0, NormKind::homogeneous);
        for (double s : {0.25, 0.5, 1.0})
            CHECK(sobolev_norm(u, s, NormKind::inhomogeneous) >= l2);
    }

    SUBCASE("s outside [0,1] rejected") {
        auto g = make_grid(9.0, 128);
        State u = random_state(g, 4);
        CHECK_THROWS_AS(sobolev_norm(u, 1.5, NormKind::homogeneous), SpecError);
    }
}

TEST_CASE("Parseval: node quadrature matches spectral L2") {
    auto g = make_grid(13.0, 512);
    State u = random_state(g, 9);
    double node = 0.0;
    for (const auto& v : u.values) node += std::norm(v);
    node *= 2.0 * g->dx;
    double spec = std::pow(sobolev_norm(u, 0.0, NormKind::homogeneous), 2);
    CHECK(node == doctest::Approx(spec).epsilon(1e-10));
}
