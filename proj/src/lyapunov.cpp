#include "zs/lyapunov.hpp"

#include <cmath>

#include "zs/ensemble.hpp"
#include "zs/errors.hpp"
#include "zs/rng.hpp"

namespace zs {

namespace {

using cd = std::complex<double>;

// One cell of v' = [[-iz, q],[r, iz]] v: e^{M dx} = C(s) I + dx S(s) M with
// s = (q r - z^2) dx^2. Even series below |s| = 0.25, exact branch above.
struct CellStep {
    cd a, b, c, d;
};

CellStep cell_propagator(cd z, cd q, cd r, double dx) {
    cd s = (q * r - z * z) * (dx * dx);
    cd C, S;
    if (std::abs(s) < 0.25) {
        C = 1.0 + s * (0.5 + s * (1.0 / 24.0 + s * (1.0 / 720.0 + s / 40320.0)));
        S = 1.0 + s * (1.0 / 6.0 + s * (1.0 / 120.0 + s * (1.0 / 5040.0 + s / 362880.0)));
    } else {
        cd w = std::sqrt(s);
        C = std::cosh(w);
        S = std::sinh(w) / w;
    }
    CellStep st;
    cd izdxS = cd(0.0, 1.0) * z * dx * S;
    st.a = C - izdxS;
    st.b = q * dx * S;
    st.c = r * dx * S;
    st.d = C + izdxS;
    return st;
}

inline void apply(const CellStep& st, cd& v1, cd& v2) {
    cd w1 = st.a * v1 + st.b * v2;
    cd w2 = st.c * v1 + st.d * v2;
    v1 = w1;
    v2 = w2;
}

} // namespace

LyapunovEstimate lyapunov_exponent(cd z, double d, double x_max, double dx, std::uint64_t seed,
                                   Polarization pol) {
    if (!(dx > 0.0) || !(x_max >= 100.0 * dx))
        throw validation_error("lyapunov_exponent: need x_max >= 100 dx");
    if (d < 0.0) throw validation_error("lyapunov_exponent: D >= 0 required");
    const long n = std::lround(x_max / dx);
    const int renorm_every = 10;
    const int n_batches = 50;
    const long per_batch = std::max<long>(n / n_batches, renorm_every);

    Rng rng(seed);
    const double amp = std::sqrt(d / dx);
    cd v1(1.0, 0.0), v2(0.7, -0.3);
    double inv = 1.0 / std::sqrt(std::norm(v1) + std::norm(v2));
    v1 *= inv;
    v2 *= inv;

    std::vector<double> batch_rates;
    double batch_acc = 0.0;
    long batch_cells = 0;
    for (long k = 0; k < n; ++k) {
        cd u;
        if (d == 0.0)
            u = 0.0;
        else if (pol == Polarization::Unpolarized)
            u = rng.gaussian_complex() * amp;
        else
            u = amp * rng.gaussian();
        cd q = cd(0.0, 1.0) * std::conj(u);
        cd r = cd(0.0, 1.0) * u;
        apply(cell_propagator(z, q, r, dx), v1, v2);
        if ((k + 1) % renorm_every == 0) {
            double nn = std::sqrt(std::norm(v1) + std::norm(v2));
            batch_acc += std::log(nn);
            v1 /= nn;
            v2 /= nn;
            batch_cells += renorm_every;
            if (batch_cells >= per_batch) {
                batch_rates.push_back(batch_acc / (batch_cells * dx));
                batch_acc = 0.0;
                batch_cells = 0;
            }
        }
    }
    if (batch_rates.size() < 4) throw numerical_error("lyapunov_exponent: too few batches");

    LyapunovEstimate e;
    e.z = z;
    e.power_d = d;
    e.x_total = n * dx;
    e.renorm_interval = renorm_every * dx;
    // drop the alignment transient
    double m = 0.0;
    const size_t b0 = 1;
    for (size_t i = b0; i < batch_rates.size(); ++i) m += batch_rates[i];
    m /= (batch_rates.size() - b0);
    double var = 0.0;
    for (size_t i = b0; i < batch_rates.size(); ++i)
        var += (batch_rates[i] - m) * (batch_rates[i] - m);
    var /= (batch_rates.size() - b0 - 1);
    e.lambda_hat = m;
    e.stderr_ = std::sqrt(var / (batch_rates.size() - b0));
    e.converged = e.lambda_hat > 0.0 && e.stderr_ <= 0.1 * e.lambda_hat &&
                  e.x_total >= 100.0 / std::max(e.lambda_hat, 1e-12);
    return e;
}

LyapunovGrid fill_lyapunov_grid(const std::vector<double>& xi_axis,
                                const std::vector<double>& eta_axis, double d, double x_max,
                                double dx, std::uint64_t seed, int threads, Polarization pol) {
    LyapunovGrid g;
    g.xi = xi_axis;
    g.eta = eta_axis;
    g.power_d = d;
    const int nx = static_cast<int>(xi_axis.size());
    const int ne = static_cast<int>(eta_axis.size());
    g.lambda.resize(nx, ne);
    g.stderr_.resize(nx, ne);
    auto cells = parallel_map<LyapunovEstimate>(nx * ne, threads, [&](int idx) {
        int i = idx % nx, j = idx / nx;
        return lyapunov_exponent(cd(xi_axis[i], eta_axis[j]), d, x_max, dx,
                                 mix_seed(seed, static_cast<std::uint64_t>(idx)), pol);
    });
    for (int idx = 0; idx < nx * ne; ++idx) {
        g.lambda(idx % nx, idx / nx) = cells[idx].lambda_hat;
        g.stderr_(idx % nx, idx / nx) = cells[idx].stderr_;
    }
    return g;
}

std::vector<double> default_axis(double lo, double hi, int n) {
    std::vector<double> a(n);
    for (int i = 0; i < n; ++i) a[i] = lo + (hi - lo) * i / (n - 1);
    return a;
}

ThoulessResult thouless_dos(const LyapunovGrid& g) {
    const int nx = static_cast<int>(g.xi.size());
    const int ne = static_cast<int>(g.eta.size());
    if (nx < 3 || ne < 3) throw validation_error("thouless_dos: grid too small");
    const double dxi = g.xi[1] - g.xi[0];
    const double deta = g.eta[1] - g.eta[0];
    ThoulessResult t;
    t.power_d = g.power_d;
    t.xi.assign(g.xi.begin() + 1, g.xi.end() - 1);
    t.eta.assign(g.eta.begin() + 1, g.eta.end() - 1);
    t.rho.resize(nx - 2, ne - 2);
    std::vector<double> noise, curv;
    for (int i = 1; i + 1 < nx; ++i)
        for (int j = 1; j + 1 < ne; ++j) {
            double d2xi = (g.lambda(i + 1, j) - 2 * g.lambda(i, j) + g.lambda(i - 1, j));
            double d2eta = (g.lambda(i, j + 1) - 2 * g.lambda(i, j) + g.lambda(i, j - 1));
            double rho = (d2xi / (dxi * dxi) + d2eta / (deta * deta)) / (2.0 * M_PI);
            noise.push_back(g.stderr_(i, j));
            curv.push_back(std::fabs(d2xi) + std::fabs(d2eta));
            if (rho < 0.0) {
                rho = 0.0;
                ++t.n_clipped;
            }
            t.rho(i - 1, j - 1) = rho;
        }
    std::sort(noise.begin(), noise.end());
    std::sort(curv.begin(), curv.end());
    double med_noise = noise[noise.size() / 2];
    double med_curv = curv[curv.size() / 2];
    t.noise_to_curvature = med_noise / std::max(med_curv, 1e-300);
    if (t.noise_to_curvature >= 0.1)
        throw numerical_error("thouless_dos: noise dominates curvature, ratio = " +
                              std::to_string(t.noise_to_curvature));
    return t;
}

std::vector<EtaProfilePoint> thouless_eta_profile(const ThoulessResult& t) {
    std::vector<EtaProfilePoint> out;
    const int nx = static_cast<int>(t.xi.size());
    for (int j = 0; j < static_cast<int>(t.eta.size()); ++j) {
        double m = 0.0;
        for (int i = 0; i < nx; ++i) m += t.rho(i, j);
        m /= nx;
        double v = 0.0;
        for (int i = 0; i < nx; ++i) v += (t.rho(i, j) - m) * (t.rho(i, j) - m);
        EtaProfilePoint p;
        p.eta = t.eta[j];
        p.rho = m;
        p.stderr_ = std::sqrt(v / (nx * std::max(nx - 1, 1)));
        out.push_back(p);
    }
    return out;
}

PhaseDos phase_dos_hermitian(const SignalRealization& s, const std::vector<double>& lambdas) {
    PhaseDos out;
    out.lambda = lambdas;
    out.n_per_length.reserve(lambdas.size());
    const int n = s.grid.n_points;
    const double dx = s.grid.step;
    for (double lam : lambdas) {
        double theta = 0.0;
        for (int k = 0; k < n; ++k) {
            const cd u = s.samples[k];
            const double au = std::abs(u);
            int m = static_cast<int>(std::ceil(dx * (2.0 * std::fabs(lam) + 2.0 * au) / 0.5));
            if (m < 1) m = 1;
            if (m > 20000)
                throw numerical_error("phase_dos_hermitian: step too large for phase tracking");
            const double h = dx / m;
            auto rhs = [&](double th) {
                return -2.0 * lam + 2.0 * (u.real() * std::cos(th) - u.imag() * std::sin(th));
            };
            for (int q = 0; q < m; ++q) {
                double k1 = rhs(theta);
                double k2 = rhs(theta + 0.5 * h * k1);
                double k3 = rhs(theta + 0.5 * h * k2);
                double k4 = rhs(theta + h * k3);
                theta += h / 6.0 * (k1 + 2 * k2 + 2 * k3 + k4);
            }
        }
        out.n_per_length.push_back(-theta / (2.0 * M_PI * s.grid.length));
    }
    return out;
}

} // namespace zs
