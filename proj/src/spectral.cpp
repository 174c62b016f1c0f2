#include "whf/spectral.hpp"

#include "whf/error.hpp"
#include "whf/fft.hpp"

#include <cmath>
#include <numbers>

namespace whf {

namespace {

void require_fullline(const Grid& g)
{
    if (g.kind == GridKind::graded_halfline)
        fail(ErrorCode::WrongGridKind, "operation needs a full-line grid");
}

void require_uniform(const Grid& g)
{
    if (g.kind != GridKind::uniform_fullline)
        fail(ErrorCode::WrongGridKind, "operation needs a uniform full-line grid");
}

bool uses_shift(const Grid& g, const SpectralOptions& opts)
{
    return g.kind == GridKind::uniform_fullline && opts.zero_mode == ZeroModePolicy::shifted;
}

cplx shift_phase(std::size_t j, std::size_t n)
{
    double a = -std::numbers::pi * static_cast<double>(j) / static_cast<double>(n);
    return {std::cos(a), std::sin(a)};
}

// S on the lattice: i * sum_n f_n (1 - cos(pi (m - n))) / (pi (m - n)),
// evaluated as a linear convolution through a 2N-point FFT.
std::vector<cplx> lattice_hilbert(const std::vector<cplx>& f)
{
    const std::size_t n = f.size(), m = 2 * n;
    std::vector<cplx> ker(m), a(m);
    for (std::size_t d = 1; d < n; d += 2) {
        double k = 2.0 / (std::numbers::pi * static_cast<double>(d));
        ker[d] = k;
        ker[m - d] = -k;
    }
    std::copy(f.begin(), f.end(), a.begin());
    fft_inplace(ker, -1);
    fft_inplace(a, -1);
    for (std::size_t k = 0; k < m; ++k)
        a[k] *= ker[k];
    fft_inplace(a, +1);
    std::vector<cplx> out(n);
    for (std::size_t j = 0; j < n; ++j)
        out[j] = I * a[j] / static_cast<double>(m);
    return out;
}

std::vector<cplx> apply_multiplier(const GridFunction& f, const SpectralOptions& opts,
                                   const std::vector<double>& multiplier)
{
    std::vector<cplx> c = spectral_coefficients(f, opts);
    for (std::size_t k = 0; k < c.size(); ++k)
        c[k] *= multiplier[k];
    return from_spectral_coefficients(f.grid, std::move(c), opts).values;
}

SpectralOptions periodic_of(const SpectralOptions& opts)
{
    SpectralOptions p = opts;
    p.realization = Realization::periodic;
    return p;
}

} // namespace

SpectralMask spectral_mask(const Grid& grid, const SpectralOptions& opts)
{
    require_fullline(grid);
    const std::size_t n = grid.points;
    SpectralMask m;
    m.kind = grid.kind;
    m.half_shift = grid.kind == GridKind::cayley_fullline || opts.zero_mode == ZeroModePolicy::shifted;
    m.plus_weight.assign(n, 0.0);
    if (m.half_shift || grid.kind == GridKind::cayley_fullline) {
        for (std::size_t k = 0; k < n / 2; ++k)
            m.plus_weight[k] = 1.0;
        return m;
    }
    for (std::size_t k = 1; k < n / 2; ++k)
        m.plus_weight[k] = 1.0;
    double edge = opts.zero_mode == ZeroModePolicy::half ? 0.5 : opts.zero_mode == ZeroModePolicy::plus ? 1.0 : 0.0;
    m.plus_weight[0] = edge;
    m.plus_weight[n / 2] = edge;
    return m;
}

std::vector<cplx> spectral_coefficients(const GridFunction& f, const SpectralOptions& opts)
{
    const Grid& g = f.grid;
    require_fullline(g);
    const std::size_t n = g.points;
    std::vector<cplx> c = f.values;
    if (g.kind == GridKind::cayley_fullline) {
        for (std::size_t j = 0; j < n; ++j)
            c[j] *= cplx{g.node(j), g.extent};
    } else if (uses_shift(g, opts)) {
        for (std::size_t j = 0; j < n; ++j)
            c[j] *= shift_phase(j, n);
    }
    fft_inplace(c, -1);
    for (cplx& v : c)
        v /= static_cast<double>(n);
    return c;
}

GridFunction from_spectral_coefficients(const Grid& grid, std::vector<cplx> c, const SpectralOptions& opts)
{
    require_fullline(grid);
    const std::size_t n = grid.points;
    if (c.size() != n)
        fail(ErrorCode::InvalidArgument, "coefficient count does not match the grid");
    fft_inplace(c, +1);
    if (grid.kind == GridKind::cayley_fullline) {
        for (std::size_t j = 0; j < n; ++j)
            c[j] /= cplx{grid.node(j), grid.extent};
    } else if (uses_shift(grid, opts)) {
        for (std::size_t j = 0; j < n; ++j)
            c[j] *= std::conj(shift_phase(j, n));
    }
    return {grid, std::move(c)};
}

GridFunction fourier(const GridFunction& f)
{
    require_uniform(f.grid);
    const std::size_t n = f.grid.points;
    const double h = f.grid.spacing();
    std::vector<cplx> a = f.values;
    for (std::size_t j = 1; j < n; j += 2)
        a[j] = -a[j];
    fft_inplace(a, +1);
    const double s = h / std::sqrt(2.0 * std::numbers::pi);
    for (std::size_t k = 0; k < n; ++k)
        a[k] *= (k % 2 ? -s : s);
    Grid w = Grid::uniform(static_cast<double>(n) * std::numbers::pi / (2.0 * f.grid.extent), n);
    return {w, std::move(a)};
}

GridFunction inverse_fourier(const GridFunction& F)
{
    require_uniform(F.grid);
    const std::size_t n = F.grid.points;
    const double dw = F.grid.spacing();
    std::vector<cplx> a = F.values;
    for (std::size_t k = 1; k < n; k += 2)
        a[k] = -a[k];
    fft_inplace(a, -1);
    const double s = dw / std::sqrt(2.0 * std::numbers::pi);
    for (std::size_t j = 0; j < n; ++j)
        a[j] *= (j % 2 ? -s : s);
    Grid x = Grid::uniform(static_cast<double>(n) * std::numbers::pi / (2.0 * F.grid.extent), n);
    return {x, std::move(a)};
}

GridFunction fourier_pv(const GridFunction& f, cplx residue)
{
    require_uniform(f.grid);
    const std::size_t n = f.grid.points, mid = n / 2;
    GridFunction reg = f;
    for (std::size_t j = 0; j < n; ++j) {
        if (j == mid)
            continue;
        double x = f.grid.node(j);
        reg.values[j] -= residue * std::exp(-x * x) / x;
    }
    reg.values[mid] = 0.5 * (reg.values[mid - 1] + reg.values[mid + 1]);
    GridFunction F = fourier(reg);
    const double c = std::sqrt(std::numbers::pi / 2.0);
    for (std::size_t k = 0; k < n; ++k)
        F.values[k] += residue * I * c * std::erf(F.grid.node(k) / 2.0);
    return F;
}

GridFunction riesz_project(const GridFunction& f, HalfPlane half, const SpectralOptions& opts)
{
    require_fullline(f.grid);
    if (opts.realization == Realization::line && f.grid.kind == GridKind::uniform_fullline) {
        std::vector<cplx> s = lattice_hilbert(f.values);
        GridFunction out = f;
        double sg = half == HalfPlane::upper ? 1.0 : -1.0;
        for (std::size_t j = 0; j < s.size(); ++j)
            out.values[j] = 0.5 * (f.values[j] + sg * s[j]);
        return out;
    }
    SpectralMask m = spectral_mask(f.grid, opts);
    if (half == HalfPlane::lower)
        for (double& w : m.plus_weight)
            w = 1.0 - w;
    return {f.grid, apply_multiplier(f, opts, m.plus_weight)};
}

GridFunction hilbert_S(const GridFunction& f, const SpectralOptions& opts)
{
    require_fullline(f.grid);
    if (opts.realization == Realization::line && f.grid.kind == GridKind::uniform_fullline)
        return {f.grid, lattice_hilbert(f.values)};
    SpectralMask m = spectral_mask(f.grid, opts);
    for (double& w : m.plus_weight)
        w = 2.0 * w - 1.0;
    return {f.grid, apply_multiplier(f, opts, m.plus_weight)};
}

double analyticity_score(const GridFunction& f, HalfPlane half, const SpectralOptions& opts)
{
    SpectralOptions p = periodic_of(opts);
    std::vector<cplx> c = spectral_coefficients(f, p);
    SpectralMask m = spectral_mask(f.grid, p);
    double on = 0.0, total = 0.0;
    for (std::size_t k = 0; k < c.size(); ++k) {
        double e = std::norm(c[k]);
        double w = half == HalfPlane::upper ? m.plus_weight[k] : 1.0 - m.plus_weight[k];
        on += w * e;
        total += e;
    }
    return total > 0.0 ? on / total : 1.0;
}

} // namespace whf
