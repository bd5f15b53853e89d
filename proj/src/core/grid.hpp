#pragma once

#include <cstddef>
#include <stdexcept>

namespace fqnm {

enum class Boundary {
    Periodic,
    FixedExtrapolation,  // ghost cells copy the boundary cell
};

struct Grid1D {
    std::size_t n_cells;
    double x_min;
    double length;

    Grid1D(std::size_t n, double x_min_, double length_)
        : n_cells(n), x_min(x_min_), length(length_) {
        if (n < 2) throw std::invalid_argument("Grid1D requires at least 2 cells");
        if (!(length_ > 0.0)) throw std::invalid_argument("Grid1D length must be positive");
    }

    double dx() const { return length / static_cast<double>(n_cells); }
    // Cell centers.
    double x(std::size_t i) const {
        return x_min + (static_cast<double>(i) + 0.5) * dx();
    }
};

}  // namespace fqnm
