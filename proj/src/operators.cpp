#include "zs/operators.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "zs/errors.hpp"
#include "zs/lapack.hpp"

namespace zs {

namespace {

using cd = std::complex<double>;

struct HalfProp {
    // e^{+-h C/2}, C = [[0,q],[r,0]]: P = [[c, q s],[r s, c]], Pb = [[c, -q s],[-r s, c]]
    cd c, qs, rs;
};

HalfProp half_prop(cd q, cd r, double h) {
    cd mu2 = q * r;
    cd mu = std::sqrt(mu2);
    double a = 0.5 * h;
    HalfProp p;
    if (std::abs(mu) < 1e-30) {
        p.c = 1.0;
        p.qs = q * a;
        p.rs = r * a;
    } else {
        cd am = a * mu;
        p.c = std::cosh(am);
        cd s = std::sinh(am) / mu;
        p.qs = q * s;
        p.rs = r * s;
    }
    return p;
}

void coupling_of(const SignalRealization& s, OperatorKind kind, int k, cd& q, cd& r) {
    cd u = s.samples[k];
    q = cd(0.0, 1.0) * std::conj(u);
    r = (kind == OperatorKind::NonHermitianBright) ? cd(0.0, 1.0) * u : cd(0.0, -1.0) * u;
}

Eigen::MatrixXcd build_central_difference(const SignalRealization& s, OperatorKind kind) {
    const int n = s.grid.n_points;
    const double inv2h = 1.0 / (2.0 * s.grid.step);
    Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(2 * n, 2 * n);
    const cd iu(0.0, 1.0);
    for (int k = 0; k < n; ++k) {
        if (k + 1 < n) {
            m(k, k + 1) = iu * inv2h;
            m(k + 1, k) = -iu * inv2h;
            m(n + k, n + k + 1) = -iu * inv2h;
            m(n + k + 1, n + k) = iu * inv2h;
        }
        m(k, n + k) = std::conj(s.samples[k]);
        m(n + k, k) = (kind == OperatorKind::NonHermitianBright) ? -s.samples[k] : s.samples[k];
    }
    return m;
}

// Symmetrized Ablowitz-Ladik lattice: per-cell transfer
//   v_{k+1} = K_{k+1}^{1/2} diag(z, 1/z) K_k^{1/2} v_k,  K_k = exp(dx C_k),
// assembled as the linear pencil A v = z B v with
//   row1_k:  z [K_k^{1/2} v_k]_1   = [K_{k+1}^{-1/2} v_{k+1}]_1
//   row2_k:  z [K_k^{-1/2} v_k]_2  = [K_{k-1}^{1/2} v_{k-1}]_2
// B is block-diagonal per node (det = cosh(dx mu_k)), so the standard matrix
// B^{-1}A is formed directly. Second-order accurate and lattice-gauge
// covariant, so the white-noise spectrum is exactly xi-uniform.
Eigen::MatrixXcd build_mal(const SignalRealization& s, OperatorKind kind) {
    const int n = s.grid.n_points;
    const double h = s.grid.step;
    std::vector<HalfProp> hp(n);
    for (int k = 0; k < n; ++k) {
        cd q, r;
        coupling_of(s, kind, k, q, r);
        hp[k] = half_prop(q, r, h);
    }
    Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(2 * n, 2 * n);
    for (int k = 0; k < n; ++k) {
        // B_k = [[c, qs],[-rs, c]] over columns (k, n+k); det = cosh(h mu_k)
        cd det = hp[k].c * hp[k].c + hp[k].qs * hp[k].rs;
        if (std::abs(det) < 1e-12)
            throw numerical_error("MAL assembly: singular node propagator (cosh(h mu) ~ 0)");
        cd b11 = hp[k].c / det, b12 = -hp[k].qs / det;
        cd b21 = hp[k].rs / det, b22 = hp[k].c / det;
        // A row k: [K_{k+1}^{-1/2}]_1 at node k+1
        if (k + 1 < n) {
            cd a1 = hp[k + 1].c, a2 = -hp[k + 1].qs;
            m(k, k + 1) += b11 * a1;
            m(k, n + k + 1) += b11 * a2;
            m(n + k, k + 1) += b21 * a1;
            m(n + k, n + k + 1) += b21 * a2;
        }
        // A row n+k: [K_{k-1}^{1/2}]_2 at node k-1
        if (k - 1 >= 0) {
            cd a1 = hp[k - 1].rs, a2 = hp[k - 1].c;
            m(k, k - 1) += b12 * a1;
            m(k, n + k - 1) += b12 * a2;
            m(n + k, k - 1) += b22 * a1;
            m(n + k, n + k - 1) += b22 * a2;
        }
    }
    return m;
}

} // namespace

OperatorMatrix build_operator(const SignalRealization& s, OperatorKind kind, Scheme scheme) {
    if (s.grid.n_points < 4) throw validation_error("build_operator: need n_points >= 4");
    if (static_cast<int>(s.samples.size()) != s.grid.n_points)
        throw validation_error("build_operator: sample count mismatch");
    for (const auto& u : s.samples)
        if (!std::isfinite(u.real()) || !std::isfinite(u.imag()))
            throw validation_error("build_operator: non-finite sample");
    OperatorMatrix op;
    op.kind = kind;
    op.scheme = scheme;
    op.grid = s.grid;
    op.power_d = s.power_d;
    op.source_signal_seed = s.seed;
    op.m = (scheme == Scheme::CentralDifference) ? build_central_difference(s, kind)
                                                 : build_mal(s, kind);
    return op;
}

double hermiticity_residual(const OperatorMatrix& op) {
    return (op.m - op.m.adjoint()).norm() / op.m.norm();
}

double scheme_band_edge(Scheme scheme, const Grid& g) {
    return scheme == Scheme::CentralDifference ? 1.0 / g.step : M_PI / g.step;
}

double mal_xi_halfband(const Grid& g) { return 0.5 * M_PI / g.step; }

namespace {

void sort_spectrum(std::vector<cd>& w, Eigen::MatrixXcd* v) {
    const int m = static_cast<int>(w.size());
    std::vector<int> idx(m);
    std::iota(idx.begin(), idx.end(), 0);
    std::sort(idx.begin(), idx.end(), [&](int a, int b) {
        if (w[a].real() != w[b].real()) return w[a].real() < w[b].real();
        return w[a].imag() < w[b].imag();
    });
    std::vector<cd> ws(m);
    for (int i = 0; i < m; ++i) ws[i] = w[idx[i]];
    w = std::move(ws);
    if (v && v->cols() == m) {
        Eigen::MatrixXcd vs(v->rows(), m);
        for (int i = 0; i < m; ++i) vs.col(i) = v->col(idx[i]);
        *v = std::move(vs);
    }
}

void spot_check_residuals(const Eigen::MatrixXcd& m, const std::vector<cd>& w,
                          const Eigen::MatrixXcd& v) {
    const int cols = static_cast<int>(v.cols());
    const int step = std::max(1, cols / 8);
    for (int j = 0; j < cols; j += step) {
        double r = (m * v.col(j) - w[j] * v.col(j)).norm() / v.col(j).norm();
        if (r > 1e-8 * std::max(1.0, std::abs(w[j])))
            throw numerical_error("eigensolve: residual check failed");
    }
}

} // namespace

ZsSpectrum eigensolve(const OperatorMatrix& op, bool want_vectors) {
    ZsSpectrum sp;
    sp.kind = op.kind;
    sp.scheme = op.scheme;
    sp.grid = op.grid;
    sp.power_d = op.power_d;
    sp.seed = op.source_signal_seed;
    const int n2 = static_cast<int>(op.m.rows());
    const int n = n2 / 2;
    const double dx = op.grid.step;

    if (op.kind == OperatorKind::HermitianDark && op.scheme == Scheme::CentralDifference) {
        Eigen::MatrixXcd a = op.m;
        Eigen::VectorXd w;
        lapack::zheev(a, w, want_vectors);
        sp.eigenvalues.resize(n2);
        for (int i = 0; i < n2; ++i) sp.eigenvalues[i] = cd(w[i], 0.0);
        if (want_vectors) {
            sp.eigenvectors = a / std::sqrt(dx); // L2 normalization
            sp.norms.assign(n2, cd(1.0, 0.0));
        }
        return sp;
    }

    Eigen::MatrixXcd a = op.m;
    Eigen::VectorXcd w;
    Eigen::MatrixXcd vec;
    lapack::zgeev(a, w, want_vectors ? &vec : nullptr);
    std::vector<cd> raw(w.data(), w.data() + n2);
    if (want_vectors) spot_check_residuals(op.m, raw, vec);

    std::vector<cd> zeta(n2);
    if (op.scheme == Scheme::ModifiedAblowitzLadik) {
        const double xi_edge = 0.85 * scheme_band_edge(op.scheme, op.grid);
        for (int i = 0; i < n2; ++i) {
            if (std::abs(raw[i]) < 1e-10) {
                zeta[i] = cd(0.0, kClampedEta);
                ++sp.n_clamped;
                continue;
            }
            double re = -std::arg(raw[i]) / dx;
            double im = std::log(std::abs(raw[i])) / dx;
            zeta[i] = cd(re, im);
            if (op.kind == OperatorKind::HermitianDark && std::abs(re) < xi_edge)
                sp.max_im_residual = std::max(sp.max_im_residual, std::abs(im));
        }
        if (op.kind == OperatorKind::HermitianDark) {
            for (auto& z : zeta)
                if (z.imag() != kClampedEta) z = cd(z.real(), 0.0);
        }
    } else {
        zeta = raw;
    }
    sp.eigenvalues = std::move(zeta);
    if (want_vectors) sp.eigenvectors = vec / std::sqrt(dx);
    sort_spectrum(sp.eigenvalues, want_vectors ? &sp.eigenvectors : nullptr);
    if (want_vectors) {
        sp.norms.resize(n2);
        for (int j = 0; j < n2; ++j) {
            cd nu = 0.0;
            for (int k = 0; k < n; ++k) nu += sp.eigenvectors(k, j) * sp.eigenvectors(n + k, j);
            sp.norms[j] = nu * dx;
        }
    }
    return sp;
}

ZsSpectrum discrete_mode_filter(const ZsSpectrum& s, double eta_min) {
    if (s.kind != OperatorKind::NonHermitianBright)
        throw validation_error("discrete_mode_filter: bright spectra only");
    if (!(eta_min > 0.0)) throw validation_error("discrete_mode_filter: eta_min > 0 required");
    const bool mal = s.scheme == Scheme::ModifiedAblowitzLadik;
    const double fold = mal ? mal_xi_halfband(s.grid) : 0.0;
    std::vector<int> keep;
    for (int i = 0; i < static_cast<int>(s.eigenvalues.size()); ++i) {
        const auto& z = s.eigenvalues[i];
        if (!(z.imag() > eta_min)) continue;
        if (mal && std::abs(z.real()) >= fold) continue;
        keep.push_back(i);
    }
    ZsSpectrum out = s;
    out.eigenvalues.clear();
    out.norms.clear();
    if (s.eigenvectors.cols() > 0) out.eigenvectors.resize(s.eigenvectors.rows(), keep.size());
    int j = 0;
    for (int i : keep) {
        out.eigenvalues.push_back(s.eigenvalues[i]);
        if (!s.norms.empty()) out.norms.push_back(s.norms[i]);
        if (s.eigenvectors.cols() > 0) out.eigenvectors.col(j++) = s.eigenvectors.col(i);
    }
    return out;
}

} // namespace zs
