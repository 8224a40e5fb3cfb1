#include "zs/signal.hpp"

#include <cmath>
#include <cstdio>
#include <istream>
#include <ostream>
#include <sstream>
#include <string>

#include "zs/errors.hpp"
#include "zs/rng.hpp"

namespace zs {

SignalRealization sample_signal(const Grid& grid, double d, Polarization pol, std::uint64_t seed) {
    if (grid.n_points < 2) throw validation_error("sample_signal: invalid grid");
    if (!std::isfinite(d) || d < 0.0) throw validation_error("sample_signal: D must be >= 0");
    SignalRealization s;
    s.grid = grid;
    s.power_d = d;
    s.polarization = pol;
    s.seed = seed;
    s.samples.resize(grid.n_points);
    Rng rng(seed);
    const double amp = std::sqrt(d / grid.step);
    if (pol == Polarization::Unpolarized) {
        for (auto& u : s.samples) {
            double g1 = rng.gaussian();
            double g2 = rng.gaussian();
            u = std::complex<double>(g1, g2) * (amp * M_SQRT1_2);
        }
    } else {
        for (auto& u : s.samples) u = amp * rng.gaussian();
    }
    return s;
}

SignalRealization optimal_potential(double xi, double eta, const Grid& grid) {
    if (!(eta > 0.0) || !std::isfinite(eta) || !std::isfinite(xi))
        throw validation_error("optimal_potential: need eta > 0");
    if (std::exp(-eta * grid.length) >= 1e-6)
        throw validation_error("optimal_potential: grid too short for eta (tail not resolved)");
    SignalRealization s;
    s.grid = grid;
    s.power_d = 2.0 * eta; // pulse energy (1/2) int |u|^2
    s.polarization = Polarization::Unpolarized;
    s.seed = 0;
    s.samples.resize(grid.n_points);
    for (int k = 0; k < grid.n_points; ++k) {
        double x = grid.x(k);
        double env = 2.0 * eta / std::cosh(2.0 * eta * x);
        s.samples[k] = std::complex<double>(0.0, env) * std::polar(1.0, 2.0 * xi * x);
    }
    return s;
}

double estimate_noise_strength(const SignalRealization& s) {
    double acc = 0.0;
    for (const auto& u : s.samples) acc += std::norm(u);
    return s.grid.step * acc / static_cast<double>(s.samples.size());
}

const char* to_string(Polarization p) {
    return p == Polarization::Unpolarized ? "unpolarized" : "polarized";
}

Polarization polarization_from_string(const std::string& s) {
    if (s == "unpolarized") return Polarization::Unpolarized;
    if (s == "polarized") return Polarization::Polarized;
    throw validation_error("unknown polarization: " + s);
}

void write_signal(std::ostream& os, const SignalRealization& s) {
    char buf[128];
    std::snprintf(buf, sizeof buf, "# L=%.17g dx=%.17g D=%.17g pol=%s seed=%llu\n",
                  s.grid.length, s.grid.step, s.power_d, to_string(s.polarization),
                  static_cast<unsigned long long>(s.seed));
    os << buf;
    for (int k = 0; k < s.grid.n_points; ++k) {
        std::snprintf(buf, sizeof buf, "%.17g %.17g %.17g\n", s.grid.x(k),
                      s.samples[k].real(), s.samples[k].imag());
        os << buf;
    }
}

SignalRealization read_signal(std::istream& is) {
    std::string header;
    if (!std::getline(is, header) || header.rfind("# L=", 0) != 0)
        throw io_error("read_signal: bad header");
    SignalRealization s;
    double L = 0, dx = 0;
    unsigned long long seed = 0;
    char pol[32] = {0};
    if (std::sscanf(header.c_str(), "# L=%lg dx=%lg D=%lg pol=%31s seed=%llu", &L, &dx,
                    &s.power_d, pol, &seed) != 5)
        throw io_error("read_signal: unparseable header");
    s.seed = seed;
    s.polarization = polarization_from_string(pol);
    s.grid = make_grid(L, dx);
    s.samples.reserve(s.grid.n_points);
    std::string line;
    while (std::getline(is, line)) {
        if (line.empty()) continue;
        std::istringstream ls(line);
        double x, re, im;
        if (!(ls >> x >> re >> im)) throw io_error("read_signal: bad row");
        s.samples.emplace_back(re, im);
    }
    if (static_cast<int>(s.samples.size()) != s.grid.n_points)
        throw io_error("read_signal: sample count mismatch");
    return s;
}

} // namespace zs
