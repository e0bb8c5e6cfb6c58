#include "inls/observables.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "inls/integrator.hpp"

namespace inls {

double mass(const State& state) {
    require(state.finite(), "mass: non-finite state");
    double sum = 0.0;
    for (const auto& v : state.values) sum += std::norm(v);
    return 2.0 * sum * state.grid->dx;
}

EnergyParts energy(const State& state, const PhysParams& params,
                   const PotentialWeights& weights) {
    EnergyParts e;
    e.kinetic = 0.5 * std::pow(sobolev_norm(state, 1.0, NormKind::homogeneous), 2);
    e.potential = potential_energy(state, params, weights);
    e.total = e.kinetic + e.potential;
    return e;
}

EnergyParts energy(const State& state, const PhysParams& params) {
    return energy(state, params, potential_weight(state.grid, params.b));
}

LocalNorms local_norms(const State& state, double a1, double a2) {
    const Grid& g = *state.grid;
    require(a1 >= -g.L && a2 <= g.L && a1 < a2,
            "local_norms: interval must satisfy -L <= a1 < a2 <= L");
    // Odd extension: value at -x_j is -u(x_j); |u| is even.
    double sum = 0.0;
    double linf = 0.0;
    for (int j = 0; j < g.interior_count(); ++j) {
        double m2 = std::norm(state.values[j]);
        double x = g.nodes[j];
        if (x >= a1 && x <= a2) {
            sum += m2;
            linf = std::max(linf, std::sqrt(m2));
        }
        if (-x >= a1 && -x <= a2) {
            sum += m2;
            linf = std::max(linf, std::sqrt(m2));
        }
    }
    return {std::sqrt(sum * g.dx), linf};
}

double morawetz(const State& state) {
    require(state.finite(), "morawetz: non-finite state");
    const Grid& g = *state.grid;
    std::vector<Complex> du = derivative_at_nodes(state);
    // Integrand phi*u*conj(u_x) is even (phi odd, u odd, u_x even), so the
    // integral over [-L, L] is twice the half-line one. Trapezoid over [0, L]:
    // endpoints vanish (phi(0)=0, u(L)=0).
    double im = 0.0;
    for (int j = 0; j < g.interior_count(); ++j) {
        double x = g.nodes[j];
        double phi = x / (1.0 + std::abs(x));
        im += phi * std::imag(state.values[j] * std::conj(du[j + 1]));
    }
    return 2.0 * im * g.dx;
}

std::vector<AdmissiblePair> admissible_pairs(double s,
                                             const std::vector<double>& r_values) {
    require(s > -0.5 && s < 0.5, "admissible_pairs: s must lie in (-1/2, 1/2)");
    const double r_min = 2.0 / (1.0 - 2.0 * s);
    std::vector<AdmissiblePair> out;
    out.reserve(r_values.size());
    for (double r : r_values) {
        require(r >= r_min - 1e-12, "admissible_pairs: r below admissible range");
        double rhs = 0.5 - 1.0 / r - s;  // = 2/q
        AdmissiblePair p;
        p.s = s;
        p.r = r;
        p.q = rhs <= 0.0 ? std::numeric_limits<double>::infinity() : 2.0 / rhs;
        out.push_back(p);
    }
    return out;
}

double lr_norm(const State& state, double r) {
    const Grid& g = *state.grid;
    if (std::isinf(r)) {
        double m = 0.0;
        for (const auto& v : state.values) m = std::max(m, std::abs(v));
        return m;
    }
    double sum = 0.0;
    for (const auto& v : state.values) sum += std::pow(std::abs(v), r);
    return std::pow(2.0 * sum * g.dx, 1.0 / r);
}

namespace {

double w1r_norm(const State& state, double r) {
    std::vector<Complex> du = derivative_at_nodes(state);
    const Grid& g = *state.grid;
    double sum = 0.0;
    for (const auto& v : state.values) sum += std::pow(std::abs(v), r);
    double dsum = 0.0;
    // derivative is even; trapezoid over [-L, L] = 2x trapezoid over [0, L]
    dsum += 0.5 * std::pow(std::abs(du.front()), r);
    dsum += 0.5 * std::pow(std::abs(du.back()), r);
    for (int j = 1; j < g.N; ++j) dsum += std::pow(std::abs(du[j]), r);
    double lr_r = 2.0 * sum * g.dx;
    double dlr_r = 2.0 * dsum * g.dx;
    return std::pow(lr_r + dlr_r, 1.0 / r);
}

}  // namespace

double strichartz_norm(const Trajectory& traj, const AdmissiblePair& pair,
                       bool derivative) {
    require(!traj.states.empty(), "strichartz_norm: trajectory stores no full states");
    auto spatial = [&](const State& st) {
        return derivative ? w1r_norm(st, pair.r) : lr_norm(st, pair.r);
    };
    if (std::isinf(pair.q)) {
        double m = 0.0;
        for (const auto& st : traj.states) m = std::max(m, spatial(st));
        return m;
    }
    require(traj.states.size() >= 2,
            "strichartz_norm: need at least two stored states for finite q");
    // uniform sampling stride required
    double dt0 = traj.states[1].t - traj.states[0].t;
    for (size_t i = 1; i + 1 < traj.states.size(); ++i) {
        double d = traj.states[i + 1].t - traj.states[i].t;
        require(std::abs(d - dt0) < 1e-9 * std::max(1.0, std::abs(dt0)),
                "strichartz_norm: stored states are not uniformly spaced");
    }
    double sum = 0.0;  // left-endpoint Riemann sum
    for (size_t i = 0; i + 1 < traj.states.size(); ++i)
        sum += std::pow(spatial(traj.states[i]), pair.q) * dt0;
    return std::pow(sum, 1.0 / pair.q);
}

}  // namespace inls
