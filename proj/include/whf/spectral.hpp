#pragma once

#include "whf/grid.hpp"

#include <vector>

namespace whf {

enum class HalfPlane { upper, lower };

// How the bins of a uniform periodic grid are split between P+ and P-.
// `shifted` uses half-bin frequencies (k + 1/2) so no bin sits at 0 or at
// the Nyquist frequency; the others keep integer bins and send the two
// ambiguous bins half/half, to P+, or to P-.
enum class ZeroModePolicy { shifted, half, plus, minus };

// periodic: FFT multiplier on the periodised grid (exact identities).
// line: aperiodic lattice Hilbert kernel, better for slowly decaying data.
enum class Realization { periodic, line };

struct SpectralOptions {
    Realization realization = Realization::periodic;
    ZeroModePolicy zero_mode = ZeroModePolicy::shifted;
};

struct SpectralMask {
    GridKind kind = GridKind::uniform_fullline;
    bool half_shift = true;
    std::vector<double> plus_weight;  // per FFT bin, in [0, 1]
};

SpectralMask spectral_mask(const Grid& grid, const SpectralOptions& opts = {});

// Unitary transform, (F f)(w) = (2 pi)^{-1/2} int f(x) e^{i x w} dx, on a
// uniform grid. The result lives on the frequency grid w_k = (k - N/2) pi / L.
GridFunction fourier(const GridFunction& f);
GridFunction inverse_fourier(const GridFunction& F);

/// Transform of f where f(x) ~ residue / x at the node x = 0 (principal value).
GridFunction fourier_pv(const GridFunction& f, cplx residue);

GridFunction riesz_project(const GridFunction& f, HalfPlane half, const SpectralOptions& opts = {});
GridFunction hilbert_S(const GridFunction& f, const SpectralOptions& opts = {});

/// Fraction of spectral energy on the requested side (periodic model).
double analyticity_score(const GridFunction& f, HalfPlane half, const SpectralOptions& opts = {});

// Coefficients in the discrete Fourier system underlying P+/P- on the grid.
// For a Cayley grid these are the coefficients of (x + i s) f in powers of r.
std::vector<cplx> spectral_coefficients(const GridFunction& f, const SpectralOptions& opts = {});
GridFunction from_spectral_coefficients(const Grid& grid, std::vector<cplx> c, const SpectralOptions& opts = {});

} // namespace whf
