#include "whf/sie.hpp"

#include "whf/error.hpp"
#include "whf/io.hpp"

#include <boost/math/quadrature/gauss.hpp>

#include <algorithm>
#include <array>

#include <cmath>
#include <numbers>
#include <sstream>

namespace whf {

namespace {

constexpr double kPi = std::numbers::pi;

struct GaussRule {
    std::vector<double> x, w;   // on [0, 1]
};

const GaussRule& gauss01()
{
    static const GaussRule rule = [] {
        using G = boost::math::quadrature::gauss<double, 30>;
        GaussRule r;
        const auto& a = G::abscissa();
        const auto& w = G::weights();
        for (std::size_t k = 0; k < a.size(); ++k) {
            if (a[k] == 0.0) {
                r.x.push_back(0.5);
                r.w.push_back(0.5 * w[k]);
                continue;
            }
            r.x.push_back(0.5 * (1.0 - a[k]));
            r.w.push_back(0.5 * w[k]);
            r.x.push_back(0.5 * (1.0 + a[k]));
            r.w.push_back(0.5 * w[k]);
        }
        return r;
    }();
    return rule;
}

void require_graded(const Grid& g)
{
    if (g.kind != GridKind::graded_halfline)
        fail(ErrorCode::WrongGridKind, "half-line operations need a graded half-line grid");
}

// Derivative at x[c] of the quadratic through (x[a], x[b], x[c]) in Lagrange form,
// weights for the values at a, b, c.
std::array<double, 3> lagrange_derivative(double xa, double xb, double xc, double at)
{
    return {((at - xb) + (at - xc)) / ((xa - xb) * (xa - xc)),
            ((at - xa) + (at - xc)) / ((xb - xa) * (xb - xc)),
            ((at - xa) + (at - xb)) / ((xc - xa) * (xc - xb))};
}

// Linear functionals approximating PV int_0^T h(s) / ((t - s) s^a) ds.
// Subtraction of the singular value, trapezoid over the nodes, graded
// Gauss-Legendre on the first cell [0, t_1] with h linearly extrapolated.
class PvQuadrature {
public:
    PvQuadrature(const Grid& grid, cplx a)
        : s_(grid.nodes()), a_(a)
    {
        require_graded(grid);
        if (!(a.real() < 1.0))
            fail(ErrorCode::InvalidArgument, "weight exponent must have Re a < 1");
        const std::size_t m = s_.size();
        T_ = s_.back();
        w_.resize(m);
        for (std::size_t j = 0; j < m; ++j) {
            double lo = j == 0 ? s_[0] : s_[j - 1];
            double hi = j + 1 < m ? s_[j + 1] : s_[j];
            w_[j] = 0.5 * (hi - lo);
        }
        phi_.resize(m);
        for (std::size_t j = 0; j < m; ++j)
            phi_[j] = std::pow(s_[j], -a);

        const double power = std::max(2.0, std::ceil(3.0 / (1.0 - a.real())));
        const GaussRule& g = gauss01();
        const double s0 = s_[0], s1 = s_[1];
        for (std::size_t q = 0; q < g.x.size(); ++q) {
            double v = g.x[q];
            double s = s0 * std::pow(v, power);
            double jac = g.w[q] * power * s0 * std::pow(v, power - 1.0);
            double l2 = (s - s0) / (s1 - s0);
            gs_.push_back(s);
            gjac_.push_back(jac * std::pow(s, -a));
            gl1_.push_back(1.0 - l2);
            gl2_.push_back(l2);
            gplain_.push_back(jac);
        }
    }

    std::size_t size() const { return s_.size(); }
    const std::vector<double>& nodes() const { return s_; }

    void node_row(std::size_t i, std::vector<cplx>& row) const
    {
        const std::size_t m = s_.size();
        std::fill(row.begin(), row.end(), cplx{});
        const double t = s_[i];
        const bool subtract = i + 1 < m;
        cplx ft{};   // coefficient of F(t) = t^-a h(t)
        first_cell(t, row, ft);
        for (std::size_t j = 0; j < m; ++j) {
            if (j == i)
                continue;
            double d = 1.0 / (t - s_[j]);
            row[j] += w_[j] * phi_[j] * d;
            ft -= w_[j] * d;
        }
        if (!subtract)
            return;   // t = T: h(T) ~ 0, so the singular term is dropped
        // at s = t the subtracted integrand tends to -F'(t)
        std::size_t a = i == 0 ? 0 : i - 1;
        if (a + 2 >= m)
            a = m - 3;
        auto d = lagrange_derivative(s_[a], s_[a + 1], s_[a + 2], t);
        for (int k = 0; k < 3; ++k)
            row[a + k] -= w_[i] * d[k] * phi_[a + k];
        ft += std::log(t / (T_ - t));
        row[i] += ft * phi_[i];
    }

    void point_row(double t, std::vector<cplx>& row) const
    {
        const std::size_t m = s_.size();
        if (!(t > 0.0) || !(t < T_))
            fail(ErrorCode::SingularAtBoundary, "singular point must lie strictly inside (0, T)");
        if (t < s_[0])
            fail(ErrorCode::SingularAtBoundary, "singular point lies in the first grid cell");
        auto it = std::lower_bound(s_.begin(), s_.end(), t);
        std::size_t k = static_cast<std::size_t>(it - s_.begin());
        if (k < m && std::abs(s_[k] - t) <= 1e-14 * t)
            return node_row(k, row);
        std::fill(row.begin(), row.end(), cplx{});
        cplx ft{};
        first_cell(t, row, ft);
        for (std::size_t j = 0; j < m; ++j) {
            double d = 1.0 / (t - s_[j]);
            row[j] += w_[j] * phi_[j] * d;
            ft -= w_[j] * d;
        }
        ft += std::log(t / (T_ - t));
        // h(t) by linear interpolation between s_[k-1] and s_[k]
        double th = (t - s_[k - 1]) / (s_[k] - s_[k - 1]);
        cplx pt = std::pow(t, -a_);
        row[k - 1] += ft * pt * (1.0 - th);
        row[k] += ft * pt * th;
    }

private:
    void first_cell(double t, std::vector<cplx>& row, cplx& ft) const
    {
        for (std::size_t q = 0; q < gs_.size(); ++q) {
            double d = 1.0 / (t - gs_[q]);
            row[0] += gjac_[q] * gl1_[q] * d;
            row[1] += gjac_[q] * gl2_[q] * d;
            ft -= gplain_[q] * d;
        }
    }

    std::vector<double> s_, w_;
    std::vector<cplx> phi_;
    cplx a_;
    double T_ = 0.0;
    std::vector<double> gs_, gl1_, gl2_, gplain_;
    std::vector<cplx> gjac_;
};

// Midpoint values of S_{R+} f - lambda f for several f at once.
std::vector<std::vector<cplx>> residual_operator(cplx lambda, cplx alpha, const Grid& grid,
                                                 const std::vector<const std::vector<cplx>*>& fs)
{
    const std::vector<double> t = grid.nodes();
    const std::size_t m = t.size();
    const double T = t.back();
    const GaussRule& g = gauss01();

    std::vector<std::vector<cplx>> out(fs.size(), std::vector<cplx>(m - 1));
    // int_a^b f/(s - x) ds for linear f is f_a (L - G) + f_b G with
    // r = (b - a)/(a - x), L = log|1 + r|, G = (r - L)/r; log1p keeps far cells accurate.
    std::vector<double> wa(m - 1), wb(m - 1);
    for (std::size_t c = 0; c + 1 < m; ++c) {
        const double x = 0.5 * (t[c] + t[c + 1]);
        for (std::size_t k = 0; k + 1 < m; ++k) {
            const double r = (t[k + 1] - t[k]) / (t[k] - x);
            double L, G;
            if (k == c) {
                L = 0.0;
                G = 1.0;
            } else if (std::abs(r) < 1e-3) {
                L = std::log1p(r);
                G = r * (0.5 - r * (1.0 / 3.0 - r * (0.25 - r * 0.2)));
            } else {
                L = r > -1.0 ? std::log1p(r) : std::log(std::abs(1.0 + r));
                G = (r - L) / r;
            }
            wa[k] = L - G;
            wb[k] = G;
        }
        const double first = std::log1p(-t[0] / x);

        // int_T^inf (s/T)^(alpha-1) / (s - x) ds = int_0^1 u^-alpha / (1 - rho u) du
        const double rho = x / T;
        cplx tail = -std::log1p(-rho) / rho;
        for (std::size_t q = 0; q < g.x.size(); ++q) {
            double v = g.x[q], u = v * v * v * v;
            tail += g.w[q] * 4.0 * v * v * v * (std::pow(u, -alpha) - 1.0) / (1.0 - rho * u);
        }

        for (std::size_t n = 0; n < fs.size(); ++n) {
            const std::vector<cplx>& f = *fs[n];
            cplx acc = f[0] * first;
            for (std::size_t k = 0; k + 1 < m; ++k)
                acc += f[k] * wa[k] + f[k + 1] * wb[k];
            acc += f[m - 1] * tail;
            out[n][c] = acc / (kPi * I) - lambda * 0.5 * (f[c] + f[c + 1]);
        }
    }
    return out;
}

double relative_midpoint_norm(const Grid& grid, const std::vector<cplx>& r, const std::vector<cplx>& h)
{
    const std::vector<double> t = grid.nodes();
    double num = 0.0, den = 0.0;
    for (std::size_t c = 0; c + 1 < t.size(); ++c) {
        double w = t[c + 1] - t[c];
        num += w * std::norm(r[c]);
        den += w * std::norm(0.5 * (h[c] + h[c + 1]));
    }
    return den > 0.0 ? std::sqrt(num / den) : std::sqrt(num);
}

void check_decay(const GridFunction& h, const HalfLineOptions& opts)
{
    double mx = 0.0;
    for (cplx v : h.values)
        mx = std::max(mx, std::abs(v));
    if (std::abs(h.values.back()) > opts.decay_tolerance * mx)
        fail(ErrorCode::TruncationViolated, "h does not decay at the grid cutoff");
}

// Picks the formula variant certified by the residual oracle.
HalfLineSolution certify(cplx lambda, cplx alpha, const GridFunction& h, const std::vector<cplx>& u,
                         const std::vector<cplx>& v, const HalfLineOptions& opts)
{
    const std::vector<std::vector<cplx>> L = residual_operator(lambda, alpha, h.grid, {&u, &v});
    const std::vector<cplx> hm = [&] {
        std::vector<cplx> r(h.values.size() - 1);
        for (std::size_t c = 0; c < r.size(); ++c)
            r[c] = 0.5 * (h.values[c] + h.values[c + 1]);
        return r;
    }();
    const std::array<std::pair<double, double>, 3> sign{{{1.0, -1.0}, {-1.0, 1.0}, {1.0, 1.0}}};

    HalfLineSolution sol;
    sol.alpha = alpha;
    for (int k = 0; k < 3; ++k) {
        std::vector<cplx> r(hm.size());
        for (std::size_t c = 0; c < r.size(); ++c)
            r[c] = sign[k].first * L[0][c] + sign[k].second * L[1][c] - hm[c];
        sol.variant_residuals[k] = relative_midpoint_norm(h.grid, r, h.values);
    }
    int best = 0;
    for (int k = 1; k < 3; ++k)
        if (sol.variant_residuals[k] < sol.variant_residuals[best])
            best = k;
    if (best != 0 && !(sol.variant_residuals[0] > opts.anomaly_ratio * sol.variant_residuals[best]))
        best = 0;
    sol.variant = static_cast<FormulaVariant>(best);
    sol.sign_anomaly = best != 0;
    sol.residual = sol.variant_residuals[best];
    sol.f = GridFunction::zeros(h.grid);
    for (std::size_t j = 0; j < u.size(); ++j)
        sol.f.values[j] = sign[best].first * u[j] + sign[best].second * v[j];
    if (!(sol.residual <= opts.residual_tolerance))
        fail(ErrorCode::ResidualTooLarge, "half-line residual " + format_double(sol.residual) + " exceeds tolerance");
    return sol;
}

bool is_zero_function(const GridFunction& h)
{
    for (cplx v : h.values)
        if (v != cplx{})
            return false;
    return true;
}

HalfLineSolution zero_solution(const GridFunction& h, cplx alpha, bool adjoint)
{
    HalfLineSolution s;
    s.f = GridFunction::zeros(h.grid);
    s.alpha = alpha;
    s.adjoint_path = adjoint;
    return s;
}

} // namespace

cplx alpha_of_lambda(cplx lambda)
{
    if (lambda.imag() == 0.0 && std::abs(lambda.real()) <= 1.0)
        fail(ErrorCode::LambdaOnSpectrum, "lambda lies in [-1, 1]");
    return std::log((lambda - 1.0) / (lambda + 1.0)) / (2.0 * kPi * I);
}

GridFunction resolve_fullline(cplx lambda, const GridFunction& h, const SpectralOptions& opts)
{
    if (std::abs(lambda - 1.0) < 1e-14 || std::abs(lambda + 1.0) < 1e-14)
        fail(ErrorCode::LambdaIsPlusMinusOne, "S - lambda is not invertible for lambda = +-1");
    GridFunction f = hilbert_S(h, opts);
    const cplx c = 1.0 / (1.0 - lambda * lambda);
    for (std::size_t j = 0; j < f.values.size(); ++j)
        f.values[j] = (f.values[j] + lambda * h.values[j]) * c;
    return f;
}

double fullline_residual(cplx lambda, const GridFunction& f, const GridFunction& h, const SpectralOptions& opts)
{
    GridFunction r = hilbert_S(f, opts);
    for (std::size_t j = 0; j < r.values.size(); ++j)
        r.values[j] -= lambda * f.values[j] + h.values[j];
    double hn = h.norm();
    return hn > 0.0 ? r.norm() / hn : r.norm();
}

std::string_view to_string(FormulaVariant v)
{
    switch (v) {
    case FormulaVariant::as_stated: return "as-stated";
    case FormulaVariant::negated: return "negated";
    case FormulaVariant::integral_flipped: return "integral-flipped";
    }
    return "unknown";
}

HalfLineSolution resolve_halfline(cplx lambda, const GridFunction& h, const HalfLineOptions& opts)
{
    const cplx alpha = alpha_of_lambda(lambda);
    if (!(alpha.real() < -1e-12))
        fail(ErrorCode::WrongAlphaRegime, "resolve_halfline needs Re alpha < 0 (use the adjoint path, or perturb real lambda)");
    require_graded(h.grid);
    if (is_zero_function(h))
        return zero_solution(h, alpha, false);
    check_decay(h, opts);

    const PvQuadrature quad(h.grid, alpha);
    const std::size_t m = quad.size();
    const cplx denom = lambda * lambda - 1.0;
    std::vector<cplx> u(m), v(m), row(m);
    for (std::size_t i = 0; i < m; ++i) {
        quad.node_row(i, row);
        cplx integral{};
        for (std::size_t j = 0; j < m; ++j)
            integral += row[j] * h.values[j];
        const double t = quad.nodes()[i];
        u[i] = lambda * h.values[i] / denom;
        v[i] = std::pow(t, alpha) / (I * kPi) * integral / denom;
    }
    return certify(lambda, alpha, h, u, v, opts);
}

HalfLineSolution resolve_halfline_adjoint(cplx lambda, const GridFunction& h, const HalfLineOptions& opts)
{
    const cplx alpha = alpha_of_lambda(lambda);
    if (!(alpha.real() > 1e-12))
        fail(ErrorCode::WrongAlphaRegime, "resolve_halfline_adjoint needs Re alpha > 0 (perturb real lambda)");
    require_graded(h.grid);
    if (is_zero_function(h))
        return zero_solution(h, alpha, true);
    check_decay(h, opts);

    // kernel for mu = conj(lambda): K = mu/(mu^2-1) I - diag(t^beta/(i pi (mu^2-1))) B
    const cplx mu = std::conj(lambda);
    const cplx beta = alpha_of_lambda(mu);
    const PvQuadrature quad(h.grid, beta);
    const std::size_t m = quad.size();
    const std::vector<double> w = h.grid.weights();
    const cplx denom = mu * mu - 1.0;

    // u = conj(mu/(mu^2-1)) h; v = W^-1 (D B)^H W h / conj(mu^2 - 1) with D = t^beta/(i pi)
    std::vector<cplx> u(m), v(m), row(m);
    for (std::size_t j = 0; j < m; ++j) {
        quad.node_row(j, row);
        const double t = quad.nodes()[j];
        const cplx dj = std::pow(t, beta) / (I * kPi) / denom;
        const cplx wh = w[j] * h.values[j];
        for (std::size_t i = 0; i < m; ++i)
            v[i] += std::conj(dj * row[i]) * wh;
    }
    for (std::size_t i = 0; i < m; ++i) {
        v[i] /= w[i];
        u[i] = std::conj(mu / denom) * h.values[i];
    }
    HalfLineSolution s = certify(lambda, alpha, h, u, v, opts);
    s.adjoint_path = true;
    return s;
}

HalfLineSolution resolve_halfline_any(cplx lambda, const GridFunction& h, const HalfLineOptions& opts)
{
    const cplx alpha = alpha_of_lambda(lambda);
    return alpha.real() > 0 ? resolve_halfline_adjoint(lambda, h, opts) : resolve_halfline(lambda, h, opts);
}

double halfline_residual(cplx lambda, const GridFunction& f, const GridFunction& h)
{
    require_graded(f.grid);
    if (!(f.grid == h.grid))
        fail(ErrorCode::WrongGridKind, "f and h must share the grid");
    const cplx alpha = alpha_of_lambda(lambda);
    auto L = residual_operator(lambda, alpha, f.grid, {&f.values});
    for (std::size_t c = 0; c < L[0].size(); ++c)
        L[0][c] -= 0.5 * (h.values[c] + h.values[c + 1]);
    return relative_midpoint_norm(f.grid, L[0], h.values);
}

cplx pv_integral(const GridFunction& f, double t, cplx a)
{
    require_graded(f.grid);
    const PvQuadrature quad(f.grid, a);
    std::vector<cplx> row(quad.size());
    quad.point_row(t, row);
    cplx s{};
    for (std::size_t j = 0; j < row.size(); ++j)
        s += row[j] * f.values[j];
    return s;
}

std::string_view to_string(Domain d)
{
    switch (d) {
    case Domain::full_line: return "full-line";
    case Domain::half_line: return "half-line";
    case Domain::unit_interval: return "unit-interval";
    }
    return "unknown";
}

Domain parse_domain(std::string_view s)
{
    s = trim(s);
    if (s == "full-line" || s == "fullline" || s == "R")
        return Domain::full_line;
    if (s == "half-line" || s == "halfline" || s == "R+")
        return Domain::half_line;
    if (s == "unit-interval" || s == "interval" || s == "[0,1]")
        return Domain::unit_interval;
    fail(ErrorCode::ParseError, "unknown domain '" + std::string(s) + "'");
}

SpectrumScanResult spectrum_scan(Domain domain, const std::vector<cplx>& lambdas)
{
    SpectrumScanResult out;
    out.domain = domain;
    for (cplx l : lambdas) {
        ScanEntry e;
        e.lambda = l;
        if (domain == Domain::full_line) {
            // (1 - lambda) P+ - (1 + lambda) P-
            e.regular = !(std::abs(l - 1.0) < 1e-14 || std::abs(l + 1.0) < 1e-14);
            FredholmReport r;
            r.is_closed_range = r.is_fredholm = e.regular;
            if (e.regular) {
                e.index = 0;
                e.invertibility = Invertibility::two_sided;
                r.winding = r.index = r.dim_ker = r.dim_coker = 0;
                r.invertibility = Invertibility::two_sided;
                r.min_curve_modulus = std::min(std::abs(1.0 - l), std::abs(1.0 + l));
            }
            out.reports.push_back(r);
        } else {
            const PCSymbol g = domain == Domain::half_line ? PCSymbol::sign_symbol(l) : PCSymbol::tanh_symbol(l);
            FredholmReport r = fredholm_report(g, 2.0);
            e.regular = r.invertibility == Invertibility::two_sided;
            e.index = r.index;
            e.invertibility = r.invertibility;
            out.reports.push_back(r);
        }
        out.entries.push_back(e);
    }
    return out;
}

std::string scan_csv(const SpectrumScanResult& r)
{
    std::ostringstream out;
    out << "re,im,classification,index\n";
    for (const ScanEntry& e : r.entries) {
        out << format_double(e.lambda.real()) << ',' << format_double(e.lambda.imag()) << ','
            << (e.regular ? "regular" : "singular") << ',';
        if (e.index)
            out << *e.index;
        out << '\n';
    }
    return out.str();
}

} // namespace whf
