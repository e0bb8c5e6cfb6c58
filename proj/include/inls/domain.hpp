// Core value types: grid, physical parameters, states, initial-condition catalogue.
#pragma once

#include <complex>
#include <memory>
#include <stdexcept>
#include <string>
#include <vector>

namespace inls {

using Complex = std::complex<double>;

// Half-line sine-spectral grid on [0, L] with Dirichlet walls at 0 and L.
// Only interior nodes x_j = j*dx, j = 1..N-1 are stored; the field is the
// odd extension of its half-line samples, so x = 0 and x = L are exact zeros.
struct Grid {
    double L;
    int N;
    double dx;
    std::vector<double> nodes;        // x_j, j = 1..N-1
    std::vector<double> wavenumbers;  // k_m = m*pi/L, m = 1..N-1

    int interior_count() const { return N - 1; }
};

// Grids are immutable after make_grid; shared freely across states.
using GridPtr = std::shared_ptr<Grid>;

GridPtr make_grid(double L, int N);

// Exponents of the equation i u_t + u_xx = |x|^{-b} |u|^alpha u (defocusing).
struct PhysParams {
    double alpha;
    double b;
    double s_c;                  // 1/2 - (2-b)/alpha
    double mass_critical_alpha;  // 4 - 2b
    // Set when alpha <= 4 - 2b: scattering certificates lack theoretical
    // backing in that regime (mass-critical or subcritical).
    bool scattering_warning = false;
};

PhysParams make_params(double alpha, double b);

// Complex field at interior grid nodes at one time instant.
struct State {
    GridPtr grid;
    double t = 0.0;
    std::vector<Complex> values;  // size N-1

    bool finite() const;
};

enum class InitialKind { odd_gaussian, sine_packet, sine_mode, file };

// Catalogue of odd initial conditions. Field meaning depends on kind:
//   odd_gaussian: A * x * exp(-sigma x^2)
//   sine_packet:  A * sin(k x) * exp(-sigma (x - x0)^2), oddly symmetrized
//   sine_mode:    A * sin(k_m x)
//   file:         checkpoint file at `path`
struct InitialSpec {
    InitialKind kind = InitialKind::odd_gaussian;
    double amplitude = 1.0;
    double width = 1.0;    // sigma
    double center = 0.0;   // x0
    double wavenumber = 1.0;  // k of the packet carrier
    int mode = 1;          // m
    std::string path;
};

// Samples the specified odd function at interior nodes; t = 0.
// Throws if the packet tail at x = L exceeds 1e-12 of its peak (domain too
// small), or for invalid/non-odd file data.
State sample_initial(const InitialSpec& spec, const GridPtr& grid);

// Evaluates the analytic generator of a catalogue kind at a point (any sign).
// Not defined for kind == file.
double initial_value_at(const InitialSpec& spec, double x);

struct SpecError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

inline void require(bool cond, const std::string& msg) {
    if (!cond) throw SpecError(msg);
}

}  // namespace inls
