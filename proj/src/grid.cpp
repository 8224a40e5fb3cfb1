#include "zs/grid.hpp"

#include <cmath>

#include "zs/errors.hpp"

namespace zs {

Grid make_grid(double length, double step) {
    if (!std::isfinite(length) || !std::isfinite(step) || length <= 0.0 || step <= 0.0)
        throw validation_error("make_grid: length and step must be positive finite");
    if (length < 2.0 * step)
        throw validation_error("make_grid: need length >= 2*step");
    int n = static_cast<int>(std::llround(length / step));
    if (n < 2) throw validation_error("make_grid: fewer than 2 points");
    Grid g;
    g.length = length;
    g.n_points = n;
    g.step = length / n; // exact n*dx == L
    return g;
}

} // namespace zs
