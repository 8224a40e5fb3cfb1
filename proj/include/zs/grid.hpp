#pragma once

namespace zs {

// Uniform grid centered at x = 0: x_k = -L/2 + k*dx, k = 0..n-1.
// Each sample u_k is the constant value of the signal on cell [x_k, x_k + dx).
struct Grid {
    double length = 0.0;
    double step = 0.0;
    int n_points = 0;

    double x(int k) const { return -0.5 * length + step * k; }
    bool operator==(const Grid&) const = default;
};

Grid make_grid(double length, double step);

} // namespace zs
