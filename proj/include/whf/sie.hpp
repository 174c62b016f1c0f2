#pragma once

#include "whf/fredholm.hpp"
#include "whf/spectral.hpp"

#include <array>
#include <optional>
#include <string>
#include <vector>

namespace whf {

/// (1 / 2 pi i) log((lambda - 1)/(lambda + 1)), principal branch.
cplx alpha_of_lambda(cplx lambda);

/// (S - lambda) f = h on the line: f = (S h + lambda h) / (1 - lambda^2).
GridFunction resolve_fullline(cplx lambda, const GridFunction& h, const SpectralOptions& opts = {});
/// || (S - lambda) f - h || / || h || in the discrete model.
double fullline_residual(cplx lambda, const GridFunction& f, const GridFunction& h, const SpectralOptions& opts = {});

// Candidate forms of the half-line resolvent
//   f = (lambda h - J) / (lambda^2 - 1),  J(t) = t^a/(i pi) PV int h(s) / ((t - s) s^a) ds
enum class FormulaVariant { as_stated, negated, integral_flipped };
std::string_view to_string(FormulaVariant v);

struct HalfLineOptions {
    double residual_tolerance = 5e-2;   // ResidualTooLarge above this
    double anomaly_ratio = 10.0;        // SignAnomaly when another variant wins by this factor
    double decay_tolerance = 1e-10;     // |h(T)| <= tol * max |h|
};

struct HalfLineSolution {
    GridFunction f;
    cplx alpha;
    FormulaVariant variant = FormulaVariant::as_stated;
    double residual = 0.0;
    std::array<double, 3> variant_residuals{};   // indexed by FormulaVariant
    bool sign_anomaly = false;
    bool adjoint_path = false;
};

/// Re alpha(lambda) < 0.
HalfLineSolution resolve_halfline(cplx lambda, const GridFunction& h, const HalfLineOptions& opts = {});
/// Re alpha(lambda) > 0, through the adjoint of the discrete kernel built for conj(lambda).
HalfLineSolution resolve_halfline_adjoint(cplx lambda, const GridFunction& h, const HalfLineOptions& opts = {});
/// Dispatches on the sign of Re alpha(lambda).
HalfLineSolution resolve_halfline_any(cplx lambda, const GridFunction& h, const HalfLineOptions& opts = {});

/// Independent residual || S_{R+} f - lambda f - h || / || h || on cell midpoints:
/// f piecewise linear, Cauchy integrals in closed form per cell, power-law tail
/// f(T) (s/T)^(alpha - 1) beyond the grid.
double halfline_residual(cplx lambda, const GridFunction& f, const GridFunction& h);

/// PV int_0^T f(s) / ((t - s) s^a) ds on a graded half-line grid.
cplx pv_integral(const GridFunction& f, double t, cplx a);

enum class Domain { full_line, half_line, unit_interval };
std::string_view to_string(Domain d);
Domain parse_domain(std::string_view s);

struct ScanEntry {
    cplx lambda;
    bool regular = false;
    std::optional<int> index;
    Invertibility invertibility = Invertibility::not_fredholm;
};

struct SpectrumScanResult {
    Domain domain = Domain::full_line;
    std::vector<ScanEntry> entries;
    std::vector<FredholmReport> reports;   // one per entry (half line / interval)
};

SpectrumScanResult spectrum_scan(Domain domain, const std::vector<cplx>& lambdas);
std::string scan_csv(const SpectrumScanResult& r);

/// E(x) = exp(-x/2) / (1 - exp(-x)) = 1 / (2 sinh(x/2)).
double e_kernel(double x);

/// sqrt(2 pi)/(pi i) * F[E] (principal value at 0): the symbol of (1/(pi i)) E*,
/// which should equal tanh(pi w).
GridFunction e_convolution_symbol(const Grid& grid);

struct IntervalReductionReport {
    double symbol_max_error = 0.0;        // vs tanh(pi w) on |w| <= window
    double reduction_max_deviation = 0.0; // F M F^-1 f+ vs T_tanh f+, relative
    double isometry_ratio = 0.0;          // ||Y phi|| / ||phi||
};

IntervalReductionReport interval_reduction_check(const Grid& grid, double window = 3.0);

} // namespace whf
