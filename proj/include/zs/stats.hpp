#pragma once
#include <Eigen/Dense>
#include <vector>

#include "zs/grid.hpp"
#include "zs/operators.hpp"

namespace zs {

enum class DosAxis { Lambda1D, EtaProfile, XiEta2D };

// Binned density, normalized per unit axis per unit system length per
// realization, so sum(density * bin_width) * L == mean retained count.
struct DosEstimate {
    DosAxis axis = DosAxis::Lambda1D;
    std::vector<double> bin_edges;
    std::vector<double> density;
    std::vector<double> density_se;
    long total_count = 0;
    int n_realizations = 0;
    double system_length = 0.0;
    double xi_band_width = 0.0; // EtaProfile: xi width pooled over (for per-unit-xi rescale)
    bool folded = true;         // EtaProfile: |eta| pooled over both signs
    double power_d = 0.0;
    double dx = 0.0;
    Scheme scheme = Scheme::CentralDifference;

    double bin_center(int b) const { return 0.5 * (bin_edges[b] + bin_edges[b + 1]); }
    int bins() const { return static_cast<int>(density.size()); }
};

DosEstimate dos_1d(const std::vector<ZsSpectrum>& ensemble, int bins = 60,
                   double edge_fraction = 0.15);

// Marginal density over eta for bright spectra. eta_min <= 0 selects the
// finite-size threshold sqrt(D/L); eta_max <= 0 selects 3 sigma-ish coverage.
// folded=true histograms |eta| (both signs pooled).
DosEstimate eta_profile(const std::vector<ZsSpectrum>& ensemble, int bins = 60,
                        double eta_min = 0.0, double eta_max = 0.0, bool folded = true);

// Per-unit-xi profile values paired with the analytic curve.
struct ProfilePoint {
    double eta, measured, analytic, stderr_;
};
std::vector<ProfilePoint> profile_vs_analytic(const DosEstimate& profile);

struct SpacingHistogram {
    std::vector<double> bin_edges;
    std::vector<long> counts;
    double rate = 0.0;     // max-likelihood exponential rate
    double ks_stat = 0.0;
    double p_value = 0.0;  // KS test against Exp(rate)
    long n_spacings = 0;
};

SpacingHistogram spacing_stats(const std::vector<ZsSpectrum>& ensemble,
                               double edge_fraction = 0.15);
SpacingHistogram spacing_stats_from_values(const std::vector<std::vector<double>>& sorted_levels);

// R^2 of ln(counts) vs spacing over nonempty bins.
double log_linearity_r2(const SpacingHistogram& h);

// sum ||psi_k||^4 dx for an L2-normalized 2n-component eigenvector.
double ipr(const Eigen::VectorXcd& vec, const Grid& g);

struct IprCurve {
    std::vector<double> lambda_centers, mean, stderr_;
    std::vector<char> edge_flag;
    double window_width = 0.0;
};
IprCurve ipr_vs_lambda(const std::vector<ZsSpectrum>& ensemble, double window_fraction = 0.05,
                       double edge_fraction = 0.15);

// Mean IPR over the central half of the retained band (Fig. 4-style average).
struct MeanWithError {
    double value = 0.0, stderr_ = 0.0;
    long n = 0;
};
MeanWithError mid_band_ipr(const std::vector<ZsSpectrum>& ensemble, double edge_fraction = 0.15);

// Small statistics helpers.
struct LinFit {
    double slope = 0.0, intercept = 0.0, r2 = 0.0, slope_se = 0.0, intercept_se = 0.0;
};
LinFit linear_fit(const std::vector<double>& x, const std::vector<double>& y);

double kolmogorov_q(double t);
double ks_p_exponential(std::vector<double> samples, double* rate_out = nullptr);
double ks_p_normal(std::vector<double> samples);
double ks_p_uniform(std::vector<double> samples, double a, double b);
double ks_p_two_sample(std::vector<double> a, std::vector<double> b);
double excess_kurtosis(const std::vector<double>& v);
double quantile(std::vector<double> v, double q);
double interquartile_range(const std::vector<double>& v);

} // namespace zs
