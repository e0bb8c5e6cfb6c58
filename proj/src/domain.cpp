#include "inls/domain.hpp"

#include <cmath>
#include <cstdio>

#include "inls/experiments.hpp"

namespace inls {

GridPtr make_grid(double L, int N) {
    require(L > 0.0, "make_grid: L must be positive");
    require(N >= 8, "make_grid: N must be at least 8");
    auto g = std::make_shared<Grid>();
    g->L = L;
    g->N = N;
    g->dx = L / N;
    g->nodes.resize(N - 1);
    g->wavenumbers.resize(N - 1);
    const double pi = M_PI;
    for (int j = 1; j < N; ++j) {
        g->nodes[j - 1] = j * g->dx;
        g->wavenumbers[j - 1] = j * pi / L;
    }
    return g;
}

PhysParams make_params(double alpha, double b) {
    require(alpha > 0.0, "make_params: alpha must be positive");
    require(b > 0.0 && b < 1.0, "make_params: b must lie in (0,1)");
    PhysParams p;
    p.alpha = alpha;
    p.b = b;
    p.s_c = 0.5 - (2.0 - b) / alpha;
    p.mass_critical_alpha = 4.0 - 2.0 * b;
    p.scattering_warning = (alpha <= p.mass_critical_alpha);
    return p;
}

bool State::finite() const {
    for (const auto& v : values) {
        if (!std::isfinite(v.real()) || !std::isfinite(v.imag())) return false;
    }
    return true;
}

double initial_value_at(const InitialSpec& spec, double x) {
    switch (spec.kind) {
        case InitialKind::odd_gaussian:
            return spec.amplitude * x * std::exp(-spec.width * x * x);
        case InitialKind::sine_packet: {
            auto f = [&](double y) {
                return spec.amplitude * std::sin(spec.wavenumber * y) *
                       std::exp(-spec.width * (y - spec.center) * (y - spec.center));
            };
            return f(x) - f(-x);
        }
        case InitialKind::sine_mode:
            throw SpecError("initial_value_at: sine_mode needs a grid; use sample_initial");
        case InitialKind::file:
            throw SpecError("initial_value_at: file kind has no analytic generator");
    }
    return 0.0;
}

namespace {

// Largest value the generator's envelope can take at the wall, as a fraction
// of its peak over the grid. Used by the domain-too-small guard.
double tail_over_peak(const InitialSpec& spec, const Grid& g,
                      const std::vector<Complex>& values) {
    double peak = 0.0;
    for (const auto& v : values) peak = std::max(peak, std::abs(v));
    if (peak == 0.0) return 0.0;
    double wall = 0.0;
    switch (spec.kind) {
        case InitialKind::odd_gaussian:
            wall = std::abs(spec.amplitude) * g.L * std::exp(-spec.width * g.L * g.L);
            break;
        case InitialKind::sine_packet: {
            double d1 = g.L - spec.center;
            double d2 = g.L + spec.center;
            wall = std::abs(spec.amplitude) *
                   (std::exp(-spec.width * d1 * d1) + std::exp(-spec.width * d2 * d2));
            break;
        }
        default:
            return 0.0;  // sine_mode vanishes at the wall exactly
    }
    return wall / peak;
}

}  // namespace

State sample_initial(const InitialSpec& spec, const GridPtr& grid) {
    require(grid != nullptr, "sample_initial: null grid");
    State st;
    st.grid = grid;
    st.t = 0.0;
    st.values.resize(grid->interior_count());

    switch (spec.kind) {
        case InitialKind::odd_gaussian:
        case InitialKind::sine_packet:
            require(spec.width > 0.0, "sample_initial: width must be positive");
            for (int j = 0; j < grid->interior_count(); ++j)
                st.values[j] = initial_value_at(spec, grid->nodes[j]);
            break;
        case InitialKind::sine_mode: {
            require(spec.mode >= 1 && spec.mode <= grid->N - 1,
                    "sample_initial: mode index out of range");
            const double k = grid->wavenumbers[spec.mode - 1];
            for (int j = 0; j < grid->interior_count(); ++j)
                st.values[j] = spec.amplitude * std::sin(k * grid->nodes[j]);
            break;
        }
        case InitialKind::file: {
            State loaded = load_checkpoint(spec.path);
            require(loaded.grid->N == grid->N && loaded.grid->L == grid->L,
                    "sample_initial: checkpoint grid does not match configuration");
            // Non-odd data shows up as a nonzero extrapolated value at the
            // origin; quadratic extrapolation through the first three nodes.
            double peak = 0.0;
            for (const auto& v : loaded.values) peak = std::max(peak, std::abs(v));
            if (peak > 0.0 && loaded.values.size() >= 3) {
                Complex u0 = 3.0 * loaded.values[0] - 3.0 * loaded.values[1] +
                             loaded.values[2];
                require(std::abs(u0) <= 1e-3 * peak,
                        "sample_initial: file data does not extrapolate to u(0)=0");
            }
            loaded.grid = grid;
            loaded.t = 0.0;
            return loaded;
        }
    }

    if (tail_over_peak(spec, *grid, st.values) > 1e-12)
        throw SpecError("sample_initial: domain too small, packet tail at x=L exceeds 1e-12 of peak");
    return st;
}

}  // namespace inls
