#include "zs/stats.hpp"

#include <algorithm>
#include <cmath>

#include "zs/analytic.hpp"
#include "zs/errors.hpp"

namespace zs {

namespace {

DosEstimate histogram_density(const std::vector<double>& values, double lo, double hi, int bins,
                              int n_real, double system_length) {
    DosEstimate e;
    e.bin_edges.resize(bins + 1);
    for (int b = 0; b <= bins; ++b) e.bin_edges[b] = lo + (hi - lo) * b / bins;
    std::vector<long> counts(bins, 0);
    for (double v : values) {
        if (v < lo || v >= hi) continue;
        int b = static_cast<int>((v - lo) / (hi - lo) * bins);
        if (b >= 0 && b < bins) ++counts[b];
    }
    e.density.resize(bins);
    e.density_se.resize(bins);
    const double w = (hi - lo) / bins;
    const double norm = 1.0 / (n_real * system_length * w);
    long total = 0;
    for (int b = 0; b < bins; ++b) {
        total += counts[b];
        e.density[b] = counts[b] * norm;
        e.density_se[b] = std::sqrt(static_cast<double>(counts[b])) * norm;
    }
    e.total_count = total;
    e.n_realizations = n_real;
    e.system_length = system_length;
    return e;
}

void require_same_setup(const std::vector<ZsSpectrum>& ens) {
    if (ens.empty()) throw validation_error("empty spectrum ensemble");
    for (const auto& s : ens)
        if (s.scheme != ens.front().scheme || !(s.grid == ens.front().grid))
            throw validation_error("ensemble mixes grids or schemes");
}

} // namespace

DosEstimate dos_1d(const std::vector<ZsSpectrum>& ensemble, int bins, double edge_fraction) {
    require_same_setup(ensemble);
    for (const auto& s : ensemble)
        if (s.kind != OperatorKind::HermitianDark)
            throw validation_error("dos_1d: Hermitian spectra required");
    const auto& g = ensemble.front().grid;
    const double edge = (1.0 - edge_fraction) * scheme_band_edge(ensemble.front().scheme, g);
    std::vector<double> vals;
    for (const auto& s : ensemble)
        for (const auto& z : s.eigenvalues)
            if (z.imag() != kClampedEta && std::fabs(z.real()) < edge) vals.push_back(z.real());
    DosEstimate e = histogram_density(vals, -edge, edge, bins,
                                      static_cast<int>(ensemble.size()), g.length);
    e.axis = DosAxis::Lambda1D;
    e.power_d = ensemble.front().power_d;
    e.dx = g.step;
    e.scheme = ensemble.front().scheme;
    return e;
}

DosEstimate eta_profile(const std::vector<ZsSpectrum>& ensemble, int bins, double eta_min,
                        double eta_max, bool folded) {
    require_same_setup(ensemble);
    for (const auto& s : ensemble)
        if (s.kind != OperatorKind::NonHermitianBright)
            throw validation_error("eta_profile: bright spectra required");
    const auto& g = ensemble.front().grid;
    const double d = ensemble.front().power_d;
    if (eta_min <= 0.0) eta_min = std::sqrt(d / g.length);
    if (eta_max <= 0.0) eta_max = std::max(2.0 * d, eta_min + d);
    std::vector<double> vals;
    for (const auto& s : ensemble)
        for (const auto& z : s.eigenvalues) {
            if (z.imag() == kClampedEta) continue;
            double eta = z.imag();
            if (std::fabs(eta) < eta_min) continue;
            vals.push_back(folded ? std::fabs(eta) : eta);
        }
    if (vals.empty()) throw validation_error("eta_profile: no modes after filtering");
    DosEstimate e = folded ? histogram_density(vals, eta_min, eta_max, bins,
                                               static_cast<int>(ensemble.size()), g.length)
                           : histogram_density(vals, -eta_max, eta_max, bins,
                                               static_cast<int>(ensemble.size()), g.length);
    e.axis = DosAxis::EtaProfile;
    e.folded = folded;
    e.power_d = d;
    e.dx = g.step;
    e.scheme = ensemble.front().scheme;
    // full lattice xi band; the staggered doubling cancels between counts and width
    e.xi_band_width = 2.0 * M_PI / g.step;
    return e;
}

std::vector<ProfilePoint> profile_vs_analytic(const DosEstimate& p) {
    if (p.axis != DosAxis::EtaProfile || p.xi_band_width <= 0.0)
        throw validation_error("profile_vs_analytic: eta profile required");
    const double signfold = p.folded ? 2.0 : 1.0;
    std::vector<ProfilePoint> out;
    for (int b = 0; b < p.bins(); ++b) {
        ProfilePoint pt;
        pt.eta = p.bin_center(b);
        pt.measured = p.density[b] / (p.xi_band_width * signfold);
        pt.stderr_ = p.density_se[b] / (p.xi_band_width * signfold);
        pt.analytic = analytic_dos_bright(pt.eta, p.power_d);
        out.push_back(pt);
    }
    return out;
}

SpacingHistogram spacing_stats(const std::vector<ZsSpectrum>& ensemble, double edge_fraction) {
    require_same_setup(ensemble);
    const auto& g = ensemble.front().grid;
    const auto scheme = ensemble.front().scheme;
    double edge = (1.0 - edge_fraction) * scheme_band_edge(scheme, g);
    // staggered lattice repeats the spectrum with period pi/dx: use the physical half-band
    if (scheme == Scheme::ModifiedAblowitzLadik) edge *= 0.5;
    std::vector<std::vector<double>> levels;
    for (const auto& s : ensemble) {
        if (s.kind != OperatorKind::HermitianDark)
            throw validation_error("spacing_stats: Hermitian spectra required");
        std::vector<double> v;
        for (const auto& z : s.eigenvalues)
            if (z.imag() != kClampedEta && std::fabs(z.real()) < edge) v.push_back(z.real());
        std::sort(v.begin(), v.end());
        levels.push_back(std::move(v));
    }
    return spacing_stats_from_values(levels);
}

SpacingHistogram spacing_stats_from_values(const std::vector<std::vector<double>>& levels) {
    std::vector<double> sp;
    for (const auto& v : levels)
        for (size_t i = 1; i < v.size(); ++i) {
            double s = v[i] - v[i - 1];
            if (s > 0.0) sp.push_back(s);
        }
    if (sp.size() < 100) throw validation_error("spacing_stats: fewer than 100 spacings");
    SpacingHistogram h;
    h.n_spacings = static_cast<long>(sp.size());
    h.p_value = ks_p_exponential(sp, &h.rate);
    {
        std::vector<double> s = sp;
        std::sort(s.begin(), s.end());
        double dmax = 0.0;
        const double n = static_cast<double>(s.size());
        for (size_t i = 0; i < s.size(); ++i) {
            double f = 1.0 - std::exp(-h.rate * s[i]);
            dmax = std::max(dmax, std::max(f - i / n, (i + 1) / n - f));
        }
        h.ks_stat = dmax;
    }
    const int bins = 30;
    const double hi = 6.0 / h.rate;
    h.bin_edges.resize(bins + 1);
    h.counts.assign(bins, 0);
    for (int b = 0; b <= bins; ++b) h.bin_edges[b] = hi * b / bins;
    for (double s : sp) {
        int b = static_cast<int>(s / hi * bins);
        if (b >= 0 && b < bins) ++h.counts[b];
    }
    return h;
}

double log_linearity_r2(const SpacingHistogram& h) {
    std::vector<double> x, y;
    for (size_t b = 0; b < h.counts.size(); ++b)
        if (h.counts[b] > 0) {
            x.push_back(0.5 * (h.bin_edges[b] + h.bin_edges[b + 1]));
            y.push_back(std::log(static_cast<double>(h.counts[b])));
        }
    return linear_fit(x, y).r2;
}

double ipr(const Eigen::VectorXcd& vec, const Grid& g) {
    const int n = g.n_points;
    if (vec.size() != 2 * n) throw validation_error("ipr: vector/grid size mismatch");
    double norm = 0.0, quart = 0.0;
    for (int k = 0; k < n; ++k) {
        double a = std::norm(vec[k]) + std::norm(vec[n + k]);
        norm += a;
        quart += a * a;
    }
    norm *= g.step;
    if (std::fabs(norm - 1.0) > 1e-6)
        throw validation_error("ipr: eigenvector not L2-normalized");
    return quart * g.step;
}

IprCurve ipr_vs_lambda(const std::vector<ZsSpectrum>& ensemble, double window_fraction,
                       double edge_fraction) {
    require_same_setup(ensemble);
    std::vector<std::pair<double, double>> pts; // (lambda, ipr)
    const auto& g = ensemble.front().grid;
    for (const auto& s : ensemble) {
        if (s.kind != OperatorKind::HermitianDark || s.eigenvectors.cols() == 0)
            throw validation_error("ipr_vs_lambda: Hermitian spectra with eigenvectors required");
        for (int j = 0; j < static_cast<int>(s.eigenvalues.size()); ++j)
            pts.emplace_back(s.eigenvalues[j].real(), ipr(s.eigenvectors.col(j), g));
    }
    std::sort(pts.begin(), pts.end());
    const double lo = pts.front().first, hi = pts.back().first;
    const double width = (hi - lo) * window_fraction;
    if (!(width > 0.0) || window_fraction >= 1.0)
        throw validation_error("ipr_vs_lambda: window wider than spectrum");
    IprCurve c;
    c.window_width = width;
    const int centers = 80;
    const double edge = (1.0 - edge_fraction) * scheme_band_edge(ensemble.front().scheme, g);
    size_t a = 0, b = 0;
    for (int i = 0; i < centers; ++i) {
        double lc = lo + (hi - lo) * (i + 0.5) / centers;
        while (a < pts.size() && pts[a].first < lc - 0.5 * width) ++a;
        while (b < pts.size() && pts[b].first <= lc + 0.5 * width) ++b;
        if (b <= a + 1) continue;
        double m = 0.0;
        for (size_t k = a; k < b; ++k) m += pts[k].second;
        m /= (b - a);
        double v = 0.0;
        for (size_t k = a; k < b; ++k) v += (pts[k].second - m) * (pts[k].second - m);
        c.lambda_centers.push_back(lc);
        c.mean.push_back(m);
        c.stderr_.push_back(std::sqrt(v / ((b - a) * std::max<size_t>(b - a - 1, 1))));
        c.edge_flag.push_back(std::fabs(lc) >= edge ? 1 : 0);
    }
    return c;
}

MeanWithError mid_band_ipr(const std::vector<ZsSpectrum>& ensemble, double edge_fraction) {
    require_same_setup(ensemble);
    const auto& g = ensemble.front().grid;
    const double mid = 0.5 * (1.0 - edge_fraction) * scheme_band_edge(ensemble.front().scheme, g);
    double sum = 0.0, sum2 = 0.0;
    long n = 0;
    for (const auto& s : ensemble)
        for (int j = 0; j < static_cast<int>(s.eigenvalues.size()); ++j)
            if (std::fabs(s.eigenvalues[j].real()) < mid) {
                double v = ipr(s.eigenvectors.col(j), g);
                sum += v;
                sum2 += v * v;
                ++n;
            }
    if (n < 2) throw validation_error("mid_band_ipr: too few eigenpairs");
    MeanWithError r;
    r.n = n;
    r.value = sum / n;
    r.stderr_ = std::sqrt((sum2 / n - r.value * r.value) / (n - 1));
    return r;
}

LinFit linear_fit(const std::vector<double>& x, const std::vector<double>& y) {
    if (x.size() != y.size() || x.size() < 3) throw validation_error("linear_fit: bad input");
    const double n = static_cast<double>(x.size());
    double mx = 0, my = 0;
    for (size_t i = 0; i < x.size(); ++i) {
        mx += x[i];
        my += y[i];
    }
    mx /= n;
    my /= n;
    double sxx = 0, sxy = 0, syy = 0;
    for (size_t i = 0; i < x.size(); ++i) {
        sxx += (x[i] - mx) * (x[i] - mx);
        sxy += (x[i] - mx) * (y[i] - my);
        syy += (y[i] - my) * (y[i] - my);
    }
    LinFit f;
    f.slope = sxy / sxx;
    f.intercept = my - f.slope * mx;
    double ssr = 0.0;
    for (size_t i = 0; i < x.size(); ++i) {
        double r = y[i] - (f.intercept + f.slope * x[i]);
        ssr += r * r;
    }
    f.r2 = syy > 0.0 ? 1.0 - ssr / syy : 1.0;
    double s2 = ssr / (n - 2.0);
    f.slope_se = std::sqrt(s2 / sxx);
    f.intercept_se = std::sqrt(s2 * (1.0 / n + mx * mx / sxx));
    return f;
}

double kolmogorov_q(double t) {
    if (t < 0.2) return 1.0;
    double q = 0.0;
    for (int k = 1; k <= 101; ++k) {
        double term = 2.0 * ((k % 2) ? 1.0 : -1.0) * std::exp(-2.0 * k * k * t * t);
        q += term;
        if (std::fabs(term) < 1e-12) break;
    }
    return std::clamp(q, 0.0, 1.0);
}

namespace {
template <class Cdf>
double ks_p(std::vector<double>& s, Cdf cdf) {
    std::sort(s.begin(), s.end());
    const double n = static_cast<double>(s.size());
    double dmax = 0.0;
    for (size_t i = 0; i < s.size(); ++i) {
        double f = cdf(s[i]);
        dmax = std::max(dmax, std::max(f - i / n, (i + 1) / n - f));
    }
    double rn = std::sqrt(n);
    return kolmogorov_q((rn + 0.12 + 0.11 / rn) * dmax);
}
} // namespace

double ks_p_exponential(std::vector<double> samples, double* rate_out) {
    if (samples.size() < 10) throw validation_error("ks_p_exponential: too few samples");
    double m = 0.0;
    for (double v : samples) {
        if (!(v > 0.0)) throw validation_error("ks_p_exponential: nonpositive spacing");
        m += v;
    }
    double rate = samples.size() / m;
    if (rate_out) *rate_out = rate;
    return ks_p(samples, [rate](double v) { return 1.0 - std::exp(-rate * v); });
}

double ks_p_normal(std::vector<double> samples) {
    if (samples.size() < 10) throw validation_error("ks_p_normal: too few samples");
    double m = 0, v = 0;
    for (double s : samples) m += s;
    m /= samples.size();
    for (double s : samples) v += (s - m) * (s - m);
    v /= (samples.size() - 1);
    double sd = std::sqrt(v);
    return ks_p(samples, [m, sd](double x) { return 0.5 * std::erfc(-(x - m) / (sd * M_SQRT2)); });
}

double ks_p_uniform(std::vector<double> samples, double a, double b) {
    return ks_p(samples, [a, b](double x) { return std::clamp((x - a) / (b - a), 0.0, 1.0); });
}

double ks_p_two_sample(std::vector<double> a, std::vector<double> b) {
    std::sort(a.begin(), a.end());
    std::sort(b.begin(), b.end());
    size_t i = 0, j = 0;
    double dmax = 0.0;
    while (i < a.size() && j < b.size()) {
        if (a[i] <= b[j])
            ++i;
        else
            ++j;
        dmax = std::max(dmax, std::fabs(static_cast<double>(i) / a.size() -
                                        static_cast<double>(j) / b.size()));
    }
    double ne = static_cast<double>(a.size()) * b.size() / (a.size() + b.size());
    double rn = std::sqrt(ne);
    return kolmogorov_q((rn + 0.12 + 0.11 / rn) * dmax);
}

double excess_kurtosis(const std::vector<double>& v) {
    double m = 0;
    for (double s : v) m += s;
    m /= v.size();
    double m2 = 0, m4 = 0;
    for (double s : v) {
        double d = s - m;
        m2 += d * d;
        m4 += d * d * d * d;
    }
    m2 /= v.size();
    m4 /= v.size();
    return m4 / (m2 * m2) - 3.0;
}

double quantile(std::vector<double> v, double q) {
    if (v.empty()) throw validation_error("quantile: empty");
    std::sort(v.begin(), v.end());
    double pos = q * (v.size() - 1);
    size_t i = static_cast<size_t>(pos);
    if (i + 1 >= v.size()) return v.back();
    double frac = pos - i;
    return v[i] * (1.0 - frac) + v[i + 1] * frac;
}

double interquartile_range(const std::vector<double>& v) {
    return quantile(v, 0.75) - quantile(v, 0.25);
}

} // namespace zs
