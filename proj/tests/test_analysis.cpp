#include <doctest.h>

#include <cmath>
#include <random>

#include "inls/analysis.hpp"

using namespace inls;

namespace {

State gaussian(const GridPtr& g, double A = 1.0) {
    InitialSpec s;
    s.kind = InitialKind::odd_gaussian;
    s.amplitude = A;
    return sample_initial(s, g);
}

InitialSpec random_packet(std::mt19937_64& rng) {
    std::uniform_real_distribution<double> amp(0.2, 2.0), width(0.5, 2.0),
        center(1.0, 5.0), k(0.5, 3.0);
    InitialSpec s;
    s.kind = InitialKind::sine_packet;
    s.amplitude = amp(rng);
    s.width = width(rng);
    s.center = center(rng);
    s.wavenumber = k(rng);
    return s;
}

double l2_diff(const State& a, const State& b) {
    State d = a;
    for (size_t j = 0; j < d.values.size(); ++j) d.values[j] -= b.values[j];
    return sobolev_norm(d, 0.0, NormKind::homogeneous);
}

}  // namespace

TEST_CASE("hardy ratio: analytic exponential oracle") {
    // u(r) = r e^{-r}: lhs = int e^{-2r} = 1/2, rhs = int (1-r)^2 e^{-2r} = 1/4
    auto u = [](double r) { return r * std::exp(-r); };
    auto du = [](double r) { return (1.0 - r) * std::exp(-r); };
    HardyReport rep = hardy_ratio(u, du, 2.0, 40.0);
    CHECK(rep.lhs == doctest::Approx(0.5).epsilon(1e-10));
    CHECK(rep.rhs == doctest::Approx(0.25).epsilon(1e-10));
    CHECK(rep.ratio == doctest::Approx(2.0).epsilon(1e-9));
    CHECK(rep.sharp_constant == doctest::Approx(4.0).epsilon(1e-15));
    CHECK(rep.ratio <= rep.sharp_constant);
}

TEST_CASE("hardy ratio: zero state and bad p") {
    auto g = make_grid(40.0, 1024);
    State z;
    z.grid = g;
    z.values.assign(g->interior_count(), Complex(0, 0));
    HardyReport rep = hardy_ratio(z, 2.0);
    CHECK(rep.lhs == 0.0);
    CHECK(rep.rhs == 0.0);
    CHECK(rep.ratio == 0.0);
    CHECK_THROWS_AS(hardy_ratio(z, 1.0), SpecError);
}

TEST_CASE("hardy inequality holds across random odd packets") {
    auto g = make_grid(40.0, 1024);
    std::mt19937_64 rng(2024);
    for (int i = 0; i < 50; ++i) {
        State u = sample_initial(random_packet(rng), g);
        for (double p : {1.5, 2.0, 3.0}) {
            HardyReport rep = hardy_ratio(u, p);
            CHECK(rep.ratio <= rep.sharp_constant);
        }
    }
}

TEST_CASE("scale_state") {
    auto g = make_grid(40.0, 2048);
    PhysParams p = make_params(4.0, 0.5);
    State u = gaussian(g);

    SUBCASE("lambda = 1 is the identity") {
        State v = scale_state(u, 1.0, p);
        CHECK(v.grid->L == u.grid->L);
        CHECK(l2_diff(u, v) <= 1e-14);
    }

    SUBCASE("critical norm preserved") {
        double before = sobolev_norm(u, p.s_c, NormKind::homogeneous);
        for (double lambda : {0.25, 0.5, 2.0, 4.0}) {
            State v = scale_state(u, lambda, p);
            double after = sobolev_norm(v, p.s_c, NormKind::homogeneous);
            CHECK(std::abs(after - before) <= 1e-6 * before);
        }
    }

    SUBCASE("mass scales by lambda^{2(2-b)/alpha - 1}") {
        State v = scale_state(u, 2.0, p);
        double expected = mass(u) * std::pow(2.0, 2.0 * (2.0 - p.b) / p.alpha - 1.0);
        CHECK(mass(v) == doctest::Approx(expected).epsilon(1e-12));
        CHECK(std::pow(2.0, -0.25) == doctest::Approx(0.84089641525371454));
    }

    CHECK_THROWS_AS(scale_state(u, -1.0, p), SpecError);
}

TEST_CASE("interaction picture") {
    auto g = make_grid(30.0, 1024);
    State u = gaussian(g);

    SUBCASE("t = 0 is the identity") {
        CHECK(l2_diff(interaction_picture(u), u) <= 1e-14);
    }

    SUBCASE("constant along the free flow") {
        for (double t : {0.5, 1.0, 3.0}) {
            State ut = free_propagate(u, t);
            State v = interaction_picture(ut);
            CHECK(l2_diff(v, u) <= 1e-12 * sobolev_norm(u, 0.0, NormKind::homogeneous));
        }
    }
}

TEST_CASE("scattering report on trivial inputs") {
    auto g = make_grid(30.0, 1024);
    PhysParams p = make_params(4.0, 0.5);
    std::vector<double> window{0.25, 0.5, 1.0, 2.0};

    SUBCASE("linear-only run scatters at any reasonable tol") {
        State u0 = gaussian(g);
        Schedule sch{1e-2, 2.0, 5, 0};
        EvolveOptions opts;
        opts.linear_only = true;
        opts.store_at_times = window;
        Trajectory tr = evolve(u0, sch, p, opts);
        ScatteringReport rep = scattering_report(tr, window, 1e-10);
        for (double r : rep.residuals) CHECK(r <= 1e-12);
        CHECK(rep.scattered);
        CHECK(rep.final_mismatch <= 1e-11);
    }

    SUBCASE("zero data scatters vacuously") {
        State z;
        z.grid = g;
        z.values.assign(g->interior_count(), Complex(0, 0));
        Schedule sch{1e-2, 2.0, 5, 0};
        EvolveOptions opts;
        opts.store_at_times = window;
        Trajectory tr = evolve(z, sch, p, opts);
        ScatteringReport rep = scattering_report(tr, window, 1e-10);
        for (double r : rep.residuals) CHECK(r == 0.0);
        CHECK(rep.scattered);
    }

    SUBCASE("missing stored states rejected") {
        State u0 = gaussian(g);
        Schedule sch{1e-2, 2.0, 5, 0};
        Trajectory tr = evolve(u0, sch, p);
        CHECK_THROWS_AS(scattering_report(tr, window, 1e-2), SpecError);
    }
}

TEST_CASE("wave operator round trip") {
    auto g = make_grid(30.0, 1024);
    PhysParams p = make_params(4.0, 0.5);

    SUBCASE("zero profile gives zero mismatch") {
        State z;
        z.grid = g;
        z.values.assign(g->interior_count(), Complex(0, 0));
        Schedule sch{1e-2, 1.0, 10, 0};
        WaveOperatorReport rep = wave_operator_roundtrip(z, 1.0, sch, p);
        CHECK(rep.mismatch == 0.0);
        CHECK(rep.mass_mismatch == 0.0);
    }

    SUBCASE("linear-only hook: round trip is the exact free flow") {
        State phi = gaussian(g);
        Schedule sch{1e-2, 1.0, 10, 0};
        WaveOperatorReport rep = wave_operator_roundtrip(phi, 1.0, sch, p, true);
        CHECK(rep.mismatch <= 1e-10);
        CHECK(rep.mass_mismatch <= 1e-12);
    }

    SUBCASE("small data: mass nearly preserved, mismatch small") {
        State phi = gaussian(g, 0.1);
        Schedule sch{1e-2, 2.0, 10, 0};
        WaveOperatorReport rep = wave_operator_roundtrip(phi, 2.0, sch, p);
        CHECK(rep.mass_mismatch <= 1e-10 * mass(phi));
        CHECK(rep.mismatch < 1.0);  // reported, no hard threshold
    }
}

TEST_CASE("small data certificate on trivial inputs") {
    auto g = make_grid(30.0, 1024);
    PhysParams p = make_params(4.0, 0.5);
    auto pairs = admissible_pairs(p.s_c, {4.0});

    SUBCASE("zero data passes vacuously") {
        State z;
        z.grid = g;
        z.values.assign(g->interior_count(), Complex(0, 0));
        Schedule sch{1e-2, 1.0, 10, 0};
        EvolveOptions opts;
        opts.store_state_every = 1;
        Trajectory tr = evolve(z, sch, p, opts);
        SmallDataReport rep = small_data_certificate(z, tr, pairs);
        CHECK(rep.max_ratio == 0.0);
        CHECK(rep.passes);
    }

    SUBCASE("linear-only run gives ratio 1") {
        State u0 = gaussian(g);
        Schedule sch{1e-2, 1.0, 10, 0};
        EvolveOptions opts;
        opts.linear_only = true;
        opts.store_state_every = 1;
        Trajectory tr = evolve(u0, sch, p, opts);
        SmallDataReport rep = small_data_certificate(u0, tr, pairs);
        CHECK(rep.max_ratio == doctest::Approx(1.0).epsilon(1e-10));
        CHECK(rep.passes);
    }

    SUBCASE("mismatched pair regularity rejected") {
        State u0 = gaussian(g);
        Schedule sch{1e-2, 1.0, 10, 0};
        EvolveOptions opts;
        opts.store_state_every = 1;
        Trajectory tr = evolve(u0, sch, p, opts);
        auto wrong = admissible_pairs(0.0, {4.0});
        CHECK_THROWS_AS(small_data_certificate(u0, tr, wrong), SpecError);
    }
}

TEST_CASE("flow covariance under scaling") {
    // evolving the rescaled data for t/lambda^2 matches rescaling the evolved
    // state, to 1e-4 in L2
    auto g = make_grid(40.0, 2048);
    PhysParams p = make_params(4.0, 0.5);
    State u0 = gaussian(g);
    const double lambda = 2.0;
    const double t = 0.5;

    Schedule sch{1e-3, t, 1 << 30, 0};
    EvolveOptions opts;
    opts.store_at_times = {t};
    Trajectory tr = evolve(u0, sch, p, opts);
    State a = scale_state(tr.states.back(), lambda, p);

    State u0s = scale_state(u0, lambda, p);
    Schedule sch2{1e-3 / (lambda * lambda), t / (lambda * lambda), 1 << 30, 0};
    EvolveOptions opts2;
    opts2.store_at_times = {t / (lambda * lambda)};
    Trajectory tr2 = evolve(u0s, sch2, p, opts2);
    const State& b = tr2.states.back();

    CHECK(l2_diff(a, b) <= 1e-4 * sobolev_norm(a, 0.0, NormKind::homogeneous));
}
