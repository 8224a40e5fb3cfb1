#include "zs/analytic.hpp"

#include <cmath>
#include <functional>

#include "zs/errors.hpp"

namespace zs {

double dos_shape(double x) {
    x = std::fabs(x);
    if (x < 1e-3) return 1.0 / 3.0 - (2.0 / 15.0) * x * x;
    if (x > 350.0) return 0.0; // 4(x-1)e^{-2x} underflows
    // sinh^2 x = e^{2x}(1-e^{-2x})^2/4, coth x = (1+e^{-2x})/(1-e^{-2x})
    double e = std::exp(-2.0 * x);
    double om = 1.0 - e;
    double num = x * (1.0 + e) / om - 1.0;
    return 4.0 * num * e / (om * om);
}

double analytic_dos_bright(double eta, double d) {
    if (!(d > 0.0)) throw validation_error("analytic_dos_bright: D > 0 required");
    return (2.0 / (M_PI * d)) * dos_shape(2.0 * eta / d);
}

double analytic_dos_scba(double eta, double d) {
    if (!(d > 0.0)) throw validation_error("analytic_dos_scba: D > 0 required");
    return std::fabs(eta) <= d ? 1.0 / (2.0 * M_PI * d) : 0.0;
}

double analytic_p_eta(double eta, double d) {
    if (!(d > 0.0)) throw validation_error("analytic_p_eta: D > 0 required");
    if (eta < 0.0) throw validation_error("analytic_p_eta: eta >= 0 required");
    return (4.0 / d) * dos_shape(2.0 * eta / d);
}

namespace {

double simpson(const std::function<double(double)>& f, double a, double b, double fa,
               double fm, double fb, double tol, int depth) {
    double m = 0.5 * (a + b);
    double lm = 0.5 * (a + m), rm = 0.5 * (m + b);
    double flm = f(lm), frm = f(rm);
    double whole = (b - a) / 6.0 * (fa + 4.0 * fm + fb);
    double left = (m - a) / 6.0 * (fa + 4.0 * flm + fm);
    double right = (b - m) / 6.0 * (fm + 4.0 * frm + fb);
    if (depth <= 0 || std::fabs(left + right - whole) < 15.0 * tol)
        return left + right + (left + right - whole) / 15.0;
    return simpson(f, a, m, fa, flm, fm, 0.5 * tol, depth - 1) +
           simpson(f, m, b, fm, frm, fb, 0.5 * tol, depth - 1);
}

double integrate(const std::function<double(double)>& f, double a, double b, double tol) {
    double m = 0.5 * (a + b);
    return simpson(f, a, b, f(a), f(m), f(b), tol, 48);
}

} // namespace

double p_eta_normalization(double d) {
    auto f = [d](double e) { return analytic_p_eta(e, d); };
    // tail beyond 40*(D/2) is < 1e-33
    double cut = 20.0 * d;
    return integrate(f, 0.0, 0.5 * cut, 1e-12) + integrate(f, 0.5 * cut, cut, 1e-13);
}

double p_eta_entropy(double d) {
    auto f = [d](double e) {
        double p = analytic_p_eta(e, d);
        return p > 0.0 ? -p * std::log(p) : 0.0;
    };
    double cut = 20.0 * d;
    return integrate(f, 0.0, 0.5 * cut, 1e-12) + integrate(f, 0.5 * cut, cut, 1e-13);
}

double eta_entropy_constant(double d) { return p_eta_entropy(d) - std::log(d / 4.0); }

} // namespace zs
