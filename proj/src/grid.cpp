#include "whf/grid.hpp"

#include "whf/error.hpp"
#include "whf/io.hpp"

#include <cmath>
#include <numbers>
#include <sstream>

namespace whf {

std::string_view to_string(GridKind kind)
{
    switch (kind) {
    case GridKind::uniform_fullline: return "uniform-fullline";
    case GridKind::cayley_fullline: return "cayley-fullline";
    case GridKind::graded_halfline: return "graded-halfline";
    }
    return "unknown";
}

GridKind parse_grid_kind(std::string_view s)
{
    s = trim(s);
    if (s == "uniform-fullline")
        return GridKind::uniform_fullline;
    if (s == "cayley-fullline")
        return GridKind::cayley_fullline;
    if (s == "graded-halfline")
        return GridKind::graded_halfline;
    fail(ErrorCode::ParseError, "unknown grid kind '" + std::string(s) + "'");
}

Grid Grid::uniform(double L, std::size_t N)
{
    Grid g{GridKind::uniform_fullline, L, N, 1.0};
    g.validate();
    return g;
}

Grid Grid::cayley(std::size_t N, double scale)
{
    Grid g{GridKind::cayley_fullline, scale, N, 1.0};
    g.validate();
    return g;
}

Grid Grid::graded(double T, std::size_t M, double gamma)
{
    Grid g{GridKind::graded_halfline, T, M, gamma};
    g.validate();
    return g;
}

void Grid::validate() const
{
    if (points < 4 || (points & (points - 1)) != 0)
        fail(ErrorCode::InvalidArgument, "grid size must be a power of two >= 4");
    if (!(extent > 0.0) || !std::isfinite(extent))
        fail(ErrorCode::InvalidArgument, "grid extent must be positive and finite");
    if (kind == GridKind::graded_halfline && !(gamma >= 1.0))
        fail(ErrorCode::InvalidArgument, "grading exponent must be >= 1");
}

double Grid::node(std::size_t j) const
{
    switch (kind) {
    case GridKind::uniform_fullline:
        return -extent + 2.0 * extent * static_cast<double>(j) / static_cast<double>(points);
    case GridKind::cayley_fullline: {
        double theta = 2.0 * std::numbers::pi * (static_cast<double>(j) + 0.5) / static_cast<double>(points);
        return -extent / std::tan(theta / 2.0);
    }
    case GridKind::graded_halfline:
        return extent * std::pow(static_cast<double>(j + 1) / static_cast<double>(points), gamma);
    }
    return 0.0;
}

std::vector<double> Grid::nodes() const
{
    std::vector<double> x(points);
    for (std::size_t j = 0; j < points; ++j)
        x[j] = node(j);
    return x;
}

double Grid::spacing() const
{
    if (kind != GridKind::uniform_fullline)
        fail(ErrorCode::WrongGridKind, "spacing is defined for uniform grids only");
    return 2.0 * extent / static_cast<double>(points);
}

std::vector<double> Grid::weights() const
{
    std::vector<double> w(points);
    switch (kind) {
    case GridKind::uniform_fullline:
        std::fill(w.begin(), w.end(), spacing());
        break;
    case GridKind::cayley_fullline:
        // dx = (x^2 + s^2) / (2 s) dtheta
        for (std::size_t j = 0; j < points; ++j) {
            double x = node(j);
            w[j] = std::numbers::pi / (static_cast<double>(points) * extent) * (x * x + extent * extent);
        }
        break;
    case GridKind::graded_halfline: {
        // trapezoid including the implicit node t = 0
        auto t = nodes();
        for (std::size_t j = 0; j < points; ++j) {
            double lo = j == 0 ? 0.0 : t[j - 1];
            double hi = j + 1 < points ? t[j + 1] : t[j];
            w[j] = 0.5 * (hi - lo);
        }
        break;
    }
    }
    return w;
}

GridFunction GridFunction::zeros(const Grid& g)
{
    g.validate();
    return {g, std::vector<cplx>(g.points)};
}

GridFunction GridFunction::sample(const Grid& g, const std::function<cplx(double)>& f)
{
    GridFunction out = zeros(g);
    for (std::size_t j = 0; j < g.points; ++j)
        out.values[j] = f(g.node(j));
    return out;
}

double GridFunction::norm() const
{
    return std::sqrt(std::real(inner(*this, *this)));
}

cplx inner(const GridFunction& a, const GridFunction& b)
{
    if (!(a.grid == b.grid))
        fail(ErrorCode::WrongGridKind, "inner product of functions on different grids");
    auto w = a.grid.weights();
    cplx s{};
    for (std::size_t j = 0; j < w.size(); ++j)
        s += w[j] * std::conj(a.values[j]) * b.values[j];
    return s;
}

double max_abs_diff(const GridFunction& a, const GridFunction& b)
{
    double m = 0.0;
    for (std::size_t j = 0; j < a.values.size(); ++j)
        m = std::max(m, std::abs(a.values[j] - b.values[j]));
    return m;
}

std::string serialize_grid_function(const GridFunction& f)
{
    std::ostringstream out;
    out << "kind," << to_string(f.grid.kind) << '\n';
    out << "extent," << format_double(f.grid.extent) << '\n';
    out << "points," << f.grid.points << '\n';
    out << "gamma," << format_double(f.grid.gamma) << '\n';
    out << "node,re,im\n";
    for (std::size_t j = 0; j < f.grid.points; ++j)
        out << format_double(f.grid.node(j)) << ',' << format_double(f.values[j].real()) << ','
            << format_double(f.values[j].imag()) << '\n';
    return out.str();
}

GridFunction parse_grid_function(std::string_view text)
{
    auto lines = split(text, '\n');
    while (!lines.empty() && trim(lines.back()).empty())
        lines.pop_back();
    if (lines.size() < 5)
        fail(ErrorCode::ParseError, "grid function file is truncated");

    auto header = [&](std::size_t k, std::string_view key) {
        auto parts = split(trim(lines[k]), ',');
        if (parts.size() != 2 || trim(parts[0]) != key)
            fail(ErrorCode::ParseError, "expected header '" + std::string(key) + ",<value>'");
        return trim(parts[1]);
    };
    Grid g;
    g.kind = parse_grid_kind(header(0, "kind"));
    g.extent = parse_double(header(1, "extent"));
    double n = parse_double(header(2, "points"));
    g.points = static_cast<std::size_t>(n);
    g.gamma = parse_double(header(3, "gamma"));
    if (static_cast<double>(g.points) != n)
        fail(ErrorCode::ParseError, "points must be an integer");
    try {
        g.validate();
    } catch (const Error& e) {
        fail(ErrorCode::ParseError, e.what());
    }
    if (trim(lines[4]) != "node,re,im")
        fail(ErrorCode::ParseError, "expected column header 'node,re,im'");
    if (lines.size() != 5 + g.points)
        fail(ErrorCode::ParseError, "row count does not match the grid size");

    GridFunction f = GridFunction::zeros(g);
    for (std::size_t j = 0; j < g.points; ++j) {
        auto cols = split(trim(lines[5 + j]), ',');
        if (cols.size() != 3)
            fail(ErrorCode::ParseError, "row " + std::to_string(j) + " needs three columns");
        double x = parse_double(cols[0]);
        double expect = g.node(j);
        if (std::abs(x - expect) > 1e-12 * std::max(1.0, std::abs(expect)))
            fail(ErrorCode::ParseError, "node column does not match the grid header at row " + std::to_string(j));
        f.values[j] = {parse_double(cols[1]), parse_double(cols[2])};
    }
    return f;
}

} // namespace whf
