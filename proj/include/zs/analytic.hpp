#pragma once

namespace zs {

// f(x) = (x coth x - 1)/sinh^2 x, the shape function of the exact bright DOS.
// Series branch below |x| = 1e-3, overflow-safe exponential form above.
double dos_shape(double x);

// Exact bright-soliton DOS rho(xi,eta) = (2/(pi D)) f(2 eta/D); xi-independent.
double analytic_dos_bright(double eta, double d);

// Self-consistent-Born band: 1/(2 pi D) for |eta| <= D, else 0.
double analytic_dos_scba(double eta, double d);

// Normalized eta-distribution on eta >= 0: P(eta) = (4/D) f(2 eta/D).
double analytic_p_eta(double eta, double d);

// Adaptive-quadrature checks used as oracles.
double p_eta_normalization(double d);     // int_0^inf P_eta  (= 1)
double p_eta_entropy(double d);           // -int P ln P
double eta_entropy_constant(double d);    // p_eta_entropy - ln(D/4)

} // namespace zs
