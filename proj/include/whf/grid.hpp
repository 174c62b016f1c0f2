#pragma once

#include "whf/polynomial.hpp"

#include <cstddef>
#include <functional>
#include <string>
#include <string_view>
#include <vector>

namespace whf {

// uniform_fullline: x_j = -L + 2 L j / N, j = 0..N-1
// cayley_fullline:  x_j = -s cot(theta_j / 2), theta_j = 2 pi (j + 1/2) / N
// graded_halfline:  t_j = T (j / M)^gamma, j = 1..M
enum class GridKind { uniform_fullline, cayley_fullline, graded_halfline };

std::string_view to_string(GridKind kind);
GridKind parse_grid_kind(std::string_view s);

struct Grid {
    GridKind kind = GridKind::uniform_fullline;
    double extent = 1.0;    // L, s or T
    std::size_t points = 0; // power of two
    double gamma = 1.0;

    static Grid uniform(double L, std::size_t N);
    static Grid cayley(std::size_t N, double scale = 1.0);
    static Grid graded(double T, std::size_t M, double gamma);

    void validate() const;
    double node(std::size_t j) const;
    std::vector<double> nodes() const;
    /// Quadrature weights for integrals over the line (half-line).
    std::vector<double> weights() const;
    double spacing() const;  // uniform grids only

    bool operator==(const Grid&) const = default;
};

struct GridFunction {
    Grid grid;
    std::vector<cplx> values;

    static GridFunction zeros(const Grid& g);
    static GridFunction sample(const Grid& g, const std::function<cplx(double)>& f);

    double norm() const;  // weighted L2
};

cplx inner(const GridFunction& a, const GridFunction& b);  // sum w conj(a) b
double max_abs_diff(const GridFunction& a, const GridFunction& b);

// Header lines (kind, extent, points, gamma), then "node,re,im" rows.
std::string serialize_grid_function(const GridFunction& f);
GridFunction parse_grid_function(std::string_view text);

} // namespace whf
