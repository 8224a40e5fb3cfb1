#pragma once
#include <complex>
#include <cstdint>
#include <iosfwd>
#include <vector>

#include "zs/grid.hpp"

namespace zs {

enum class Polarization { Unpolarized, Polarized };

// White-noise discretization: delta-correlated noise of strength D is realized
// as i.i.d. cell values with <|u_k|^2> = D/dx (per real component D/dx for the
// polarized case), so dx * mean|u_k|^2 estimates D independent of the grid.
struct SignalRealization {
    Grid grid;
    std::vector<std::complex<double>> samples;
    double power_d = 0.0;
    Polarization polarization = Polarization::Unpolarized;
    std::uint64_t seed = 0;
};

SignalRealization sample_signal(const Grid& grid, double d, Polarization pol, std::uint64_t seed);

// Single localized pulse u(x) = 2 i eta sech(2 eta x) e^{2 i xi x}; carries a
// bright bound state at z = xi + i eta. power_d is set to the pulse energy
// (1/2) int |u|^2 dx = 2 eta.
SignalRealization optimal_potential(double xi, double eta, const Grid& grid);

// dx * mean |u_k|^2 — converges to D for sampled signals.
double estimate_noise_strength(const SignalRealization& s);

void write_signal(std::ostream& os, const SignalRealization& s);
SignalRealization read_signal(std::istream& is);

const char* to_string(Polarization p);
Polarization polarization_from_string(const std::string& s);

} // namespace zs
