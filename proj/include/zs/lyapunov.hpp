#pragma once
#include <Eigen/Dense>
#include <complex>
#include <cstdint>
#include <vector>

#include "zs/signal.hpp"

namespace zs {

struct LyapunovEstimate {
    std::complex<double> z;
    double power_d = 0.0;
    double lambda_hat = 0.0;
    double stderr_ = 0.0;
    double x_total = 0.0;
    double renorm_interval = 0.0;
    bool converged = false;
};

// Growth rate of the bright ZS system at spectral parameter z, driven by fresh
// white noise of strength d, integrated with the exact piecewise-constant cell
// propagator. Batch-mean errors; the first batch (alignment transient) is
// dropped from the estimate.
LyapunovEstimate lyapunov_exponent(std::complex<double> z, double d, double x_max, double dx,
                                   std::uint64_t seed,
                                   Polarization pol = Polarization::Unpolarized);

struct LyapunovGrid {
    std::vector<double> xi, eta;
    Eigen::MatrixXd lambda;  // (xi index, eta index)
    Eigen::MatrixXd stderr_;
    double power_d = 0.0;
};

LyapunovGrid fill_lyapunov_grid(const std::vector<double>& xi_axis,
                                const std::vector<double>& eta_axis, double d, double x_max,
                                double dx, std::uint64_t seed, int threads = 0,
                                Polarization pol = Polarization::Unpolarized);

// Default Thouless grid axes per the design decision: 40x40 over
// xi in [-2,2]*max(1,D), eta in +-3D.
std::vector<double> default_axis(double lo, double hi, int n);

struct ThoulessResult {
    std::vector<double> xi, eta; // interior axes
    Eigen::MatrixXd rho;
    int n_clipped = 0;
    double noise_to_curvature = 0.0;
    double power_d = 0.0;
};

// rho = (1/2pi) * discrete Laplacian of lambda; throws numerical_error when the
// batch-mean noise dominates the second differences.
ThoulessResult thouless_dos(const LyapunovGrid& g);

struct EtaProfilePoint {
    double eta, rho, stderr_;
};
std::vector<EtaProfilePoint> thouless_eta_profile(const ThoulessResult& t);

struct PhaseDos {
    std::vector<double> lambda;
    std::vector<double> n_per_length; // integrated DOS N(lambda)
};

// Halperin phase method for the Hermitian problem: integrates
// theta' = -2 lambda + 2 Re(u e^{i theta}) across the realization and counts
// windings; free-case calibration N(lambda) = lambda/pi.
PhaseDos phase_dos_hermitian(const SignalRealization& s, const std::vector<double>& lambdas);

} // namespace zs
