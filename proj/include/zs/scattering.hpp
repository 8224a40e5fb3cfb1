#pragma once
#include <complex>
#include <cstdint>
#include <vector>

#include "zs/signal.hpp"

namespace zs {

struct LnBTrace {
    std::complex<double> z;
    double t_duration = 0.0;
    std::vector<std::complex<double>> lnb_path; // cumulative, one entry per grid cell
    std::complex<double> final_lnb;
    std::uint64_t seed = 0;
    double power_d = 0.0;
    Polarization polarization = Polarization::Unpolarized;
};

// Joint evolution of the Riccati pair f = psi1/psi2 (driven by u, left-to-right)
// and f~ = psi~2/psi~1 (driven by u~(x) = u(-x)), each as a projective
// 2-component pair advanced by the exact cell propagator. Per cell the
// accumulated increment is d ln b = i(u f + u~* f~) dx, evaluated exactly as
// Delta ln V2 - Delta ln W1; the two stationary terms cancel the Lyapunov
// drift, leaving the zero-mean position statistics.
LnBTrace evolve_lnb(const SignalRealization& s, std::complex<double> z);

struct BzStats {
    std::complex<double> z;
    double power_d = 0.0;
    Polarization polarization = Polarization::Unpolarized;
    double tau = 0.0;
    int runs = 0;
    std::vector<double> t_values;
    std::vector<double> var_re;            // variance of Re ln b per T
    std::vector<double> var_re_se;
    std::vector<double> form_constant;     // var / (T ln(T/(2 tau)))
    std::vector<std::vector<double>> re_samples;
    double im_uniform_p = 0.0;             // KS of Im ln b mod 2pi, largest T
    bool variance_flagged = false;         // relative error of a variance > 25%
};

BzStats variance_growth(double d, std::complex<double> z, const std::vector<double>& t_list,
                        int runs, double dx, std::uint64_t seed,
                        Polarization pol = Polarization::Unpolarized, double tau = 0.0);

// gamma = e^{eta/D} / I0(eta/D) * T/tau  (xi = 0 form)
double cauchy_scale_polarized(double eta, double d, double t, double tau);

struct CauchyFit {
    double location = 0.0, scale = 0.0;
};
CauchyFit fit_cauchy(const std::vector<double>& samples); // median / half-IQR

} // namespace zs
