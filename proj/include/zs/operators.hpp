#pragma once
#include <Eigen/Dense>
#include <complex>
#include <cstdint>
#include <vector>

#include "zs/grid.hpp"
#include "zs/signal.hpp"

namespace zs {

enum class OperatorKind { HermitianDark, NonHermitianBright };
enum class Scheme { CentralDifference, ModifiedAblowitzLadik };

// Dense 2n x 2n matrix in block layout [psi1; psi2], zero boundary conditions
// by truncation. For ModifiedAblowitzLadik the matrix is B^{-1}A of the
// symmetrized Ablowitz-Ladik pencil (see operators.cpp); its eigenvalues z map
// to spectral parameters zeta = i ln(z)/dx.
struct OperatorMatrix {
    OperatorKind kind = OperatorKind::HermitianDark;
    Scheme scheme = Scheme::CentralDifference;
    Eigen::MatrixXcd m;
    Grid grid;
    double power_d = 0.0;
    std::uint64_t source_signal_seed = 0;
};

OperatorMatrix build_operator(const SignalRealization& s, OperatorKind kind, Scheme scheme);

// ||M - M^dagger||_F / ||M||_F
double hermiticity_residual(const OperatorMatrix& op);

struct ZsSpectrum {
    std::vector<std::complex<double>> eigenvalues; // sorted by real part
    Eigen::MatrixXcd eigenvectors;                 // 2n x 2n columns, empty unless requested
    std::vector<std::complex<double>> norms;       // sum psi1 psi2 dx per column (bright); 1 for dark
    OperatorKind kind = OperatorKind::HermitianDark;
    Scheme scheme = Scheme::CentralDifference;
    Grid grid;
    double power_d = 0.0;
    std::uint64_t seed = 0;
    int n_clamped = 0;            // MAL |z|->0 states, stored with eta = kClampedEta
    double max_im_residual = 0.0; // dark MAL: max |Im zeta| in-band before projection
};

inline constexpr double kClampedEta = -1e9;

// All 2n eigenpairs; eigenvectors L2-normalized (sum ||psi_k||^2 dx = 1) when
// requested. Throws numerical_error if the solver fails or residuals are bad.
ZsSpectrum eigensolve(const OperatorMatrix& op, bool want_vectors = false);

// Soliton-mode selection for bright spectra: Im z > eta_min, one representative
// per conjugate pair, and for ModifiedAblowitzLadik folded to the physical
// half-band |Re z| < pi/(2 dx) (the staggered lattice repeats every mode at
// Re z + pi/dx with an identical (-1)^k-dressed eigenvector).
ZsSpectrum discrete_mode_filter(const ZsSpectrum& s, double eta_min);

// Half-width of the lambda band supported by a scheme (for edge exclusion).
double scheme_band_edge(Scheme scheme, const Grid& g);
double mal_xi_halfband(const Grid& g);

} // namespace zs
