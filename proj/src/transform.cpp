#include "inls/transform.hpp"

#include <fftw3.h>

#include <cmath>
#include <map>
#include <mutex>

namespace inls {

namespace {

// FFTW plan creation is not thread-safe; execution via fftw_execute_r2r is.
// Each thread keeps its own buffers + plans per grid size.
std::mutex g_planner_mutex;

struct Engine {
    int N = 0;
    double* dst_buf = nullptr;  // length N-1, RODFT00
    double* dct_buf = nullptr;  // length N+1, REDFT00
    fftw_plan dst_plan = nullptr;
    fftw_plan dct_plan = nullptr;

    explicit Engine(int n) : N(n) {
        dst_buf = fftw_alloc_real(N - 1);
        dct_buf = fftw_alloc_real(N + 1);
        std::lock_guard<std::mutex> lock(g_planner_mutex);
        dst_plan = fftw_plan_r2r_1d(N - 1, dst_buf, dst_buf, FFTW_RODFT00,
                                    FFTW_ESTIMATE);
        dct_plan = fftw_plan_r2r_1d(N + 1, dct_buf, dct_buf, FFTW_REDFT00,
                                    FFTW_ESTIMATE);
    }
    ~Engine() {
        std::lock_guard<std::mutex> lock(g_planner_mutex);
        fftw_destroy_plan(dst_plan);
        fftw_destroy_plan(dct_plan);
        fftw_free(dst_buf);
        fftw_free(dct_buf);
    }
    Engine(const Engine&) = delete;
    Engine& operator=(const Engine&) = delete;

    // In-place RODFT00 on a complex vector, component-wise:
    //   out_k = 2 sum_{j=1}^{N-1} in_j sin(pi j k / N)
    void dst(std::vector<Complex>& v, double scale) {
        const int n = N - 1;
        std::vector<double> re(n);
        for (int j = 0; j < n; ++j) dst_buf[j] = v[j].real();
        fftw_execute(dst_plan);
        for (int j = 0; j < n; ++j) re[j] = dst_buf[j] * scale;
        for (int j = 0; j < n; ++j) dst_buf[j] = v[j].imag();
        fftw_execute(dst_plan);
        for (int j = 0; j < n; ++j) v[j] = Complex(re[j], dst_buf[j] * scale);
    }

    // Cosine synthesis at nodes j = 0..N from coefficients a_m, m = 1..N-1:
    //   out_j = sum_m a_m cos(pi m j / N)
    std::vector<Complex> cosine_synthesis(const std::vector<Complex>& a) {
        std::vector<Complex> out(N + 1);
        for (int part = 0; part < 2; ++part) {
            dct_buf[0] = 0.0;
            dct_buf[N] = 0.0;
            for (int m = 1; m < N; ++m)
                dct_buf[m] = 0.5 * (part == 0 ? a[m - 1].real() : a[m - 1].imag());
            fftw_execute(dct_plan);
            for (int j = 0; j <= N; ++j) {
                if (part == 0)
                    out[j] = Complex(dct_buf[j], 0.0);
                else
                    out[j] += Complex(0.0, dct_buf[j]);
            }
        }
        return out;
    }
};

Engine& engine_for(int N) {
    thread_local std::map<int, std::unique_ptr<Engine>> cache;
    auto& slot = cache[N];
    if (!slot) slot = std::make_unique<Engine>(N);
    return *slot;
}

}  // namespace

SpectralState to_spectral(const State& state) {
    require(state.finite(), "to_spectral: non-finite state");
    SpectralState sp;
    sp.grid = state.grid;
    sp.t = state.t;
    sp.coeffs = state.values;
    // DST gives 2 * (N/2) c_k = N c_k by discrete orthogonality.
    engine_for(state.grid->N).dst(sp.coeffs, 1.0 / state.grid->N);
    return sp;
}

State from_spectral(const SpectralState& sp) {
    State st;
    st.grid = sp.grid;
    st.t = sp.t;
    st.values = sp.coeffs;
    engine_for(sp.grid->N).dst(st.values, 0.5);
    return st;
}

SpectralState free_propagate(const SpectralState& sp, double dt) {
    SpectralState out = sp;
    const auto& k = sp.grid->wavenumbers;
    for (size_t m = 0; m < out.coeffs.size(); ++m) {
        double phase = -k[m] * k[m] * dt;
        out.coeffs[m] *= Complex(std::cos(phase), std::sin(phase));
    }
    out.t = sp.t + dt;
    return out;
}

State free_propagate(const State& state, double dt) {
    if (dt == 0.0) return state;  // multiplier is identically 1
    return from_spectral(free_propagate(to_spectral(state), dt));
}

double sobolev_norm(const SpectralState& sp, double s, NormKind kind) {
    require(s >= 0.0 && s <= 1.0, "sobolev_norm: s must lie in [0,1]");
    const auto& k = sp.grid->wavenumbers;
    const double L = sp.grid->L;
    double homog2 = 0.0;
    double l22 = 0.0;
    for (size_t m = 0; m < sp.coeffs.size(); ++m) {
        double c2 = std::norm(sp.coeffs[m]);
        l22 += c2;
        homog2 += std::pow(k[m], 2.0 * s) * c2;
    }
    homog2 *= L;
    l22 *= L;
    if (kind == NormKind::homogeneous) return std::sqrt(homog2);
    if (s == 0.0) return std::sqrt(l22);
    return std::sqrt(l22 + homog2);
}

double sobolev_norm(const State& state, double s, NormKind kind) {
    return sobolev_norm(to_spectral(state), s, kind);
}

std::vector<Complex> derivative_at_nodes(const State& state) {
    SpectralState sp = to_spectral(state);
    const auto& k = state.grid->wavenumbers;
    std::vector<Complex> a(sp.coeffs.size());
    for (size_t m = 0; m < a.size(); ++m) a[m] = k[m] * sp.coeffs[m];
    return engine_for(state.grid->N).cosine_synthesis(a);
}

}  // namespace inls
