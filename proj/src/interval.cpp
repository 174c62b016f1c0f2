#include "whf/error.hpp"
#include "whf/sie.hpp"

#include <cmath>
#include <functional>
#include <numbers>

namespace whf {

namespace {

constexpr double kPi = std::numbers::pi;

// E(y) - 1/y, with a series near 0 where the difference cancels.
double e_remainder(double y)
{
    if (std::abs(y) < 1e-3) {
        double y2 = y * y;
        return y * (-1.0 / 24.0 + y2 * 7.0 / 5760.0);
    }
    return e_kernel(y) - 1.0 / y;
}

constexpr int kPoleTerms = 100000;

// Plus-function test cases f+(w) = 1/(w + i)^n, n = 1, 2, with
// phi = F^-1 f+ supported on t > 0 and the reference P+[tanh(pi w) f+(w)].
struct PlusCase {
    int n;
    cplx phi(double t) const
    {
        if (t < 0.0)
            return 0.0;
        const double c = std::sqrt(2.0 * kPi);
        return n == 1 ? -I * c * std::exp(-t) : -c * t * std::exp(-t);
    }
    cplx dphi(double t) const
    {
        const double c = std::sqrt(2.0 * kPi);
        return n == 1 ? I * c * std::exp(-t) : -c * (1.0 - t) * std::exp(-t);
    }
    // poles of tanh at i(k + 1/2), residue 1/pi; those below the axis survive P+
    cplx reference(double w) const
    {
        cplx s = n == 2 ? kPi / (w + I) : cplx{};
        for (int k = kPoleTerms; k >= 1; --k) {
            cplx p = I * (0.5 - k);
            cplx q = n == 1 ? p + I : (p + I) * (p + I);
            s += (1.0 / kPi) / (q * (w - p));
        }
        return s;
    }
};

double reduction_deviation(const Grid& grid, const PlusCase& pc, double window)
{
    const std::size_t n = grid.points, mid = n / 2;
    const double h = grid.spacing(), L = grid.extent;

    std::vector<double> tn, tw;
    std::vector<cplx> pv;
    for (std::size_t j = mid; j < n; ++j) {
        double t = grid.node(j);
        cplx v = t == 0.0 ? pc.phi(1e-300) : pc.phi(t);
        if (j > mid + 2 && std::abs(v) < 1e-18)
            break;
        tn.push_back(t);
        pv.push_back(v);
        tw.push_back(j == mid ? 0.5 * h : h);
    }
    std::vector<double> rem(n);
    for (std::size_t d = 1; d < n; ++d)
        rem[d] = e_remainder(d * h);
    const double tcut = tn.back() + 0.5 * h;

    // M phi(x) = (1/(pi i)) [int R(x-t) phi + int (phi(t) - phi(x))/(x - t) + phi(x) log(x/(L-x))]
    // At x = 0 the log is replaced by its mean over the first half cell, and
    // the node carries half of the jump.
    GridFunction Mphi = GridFunction::zeros(grid);
    for (std::size_t j = mid; j < n; ++j) {
        const double x = grid.node(j);
        const cplx px = j == mid ? pv[0] : pc.phi(x);
        cplx acc{};
        for (std::size_t q = 0; q < tn.size(); ++q) {
            const std::size_t jt = mid + q;
            if (jt == j) {
                acc -= tw[q] * pc.dphi(x);
                continue;
            }
            double r = jt < j ? rem[j - jt] : -rem[jt - j];
            acc += tw[q] * (r * pv[q] + (pv[q] - px) / (x - tn[q]));
        }
        if (x < tcut)
            acc += px * std::log((L - x) / (tcut - x));
        if (j == mid)
            acc += px * (std::log(0.5 * h) - 1.0 - std::log(L));
        else
            acc += px * std::log(x / (L - x));
        cplx v = acc / (kPi * I);
        Mphi.values[j] = j == mid ? 0.5 * v : v;
    }

    const GridFunction FM = fourier(Mphi);
    double dev = 0.0, ref_max = 0.0;
    for (std::size_t k = 0; k < FM.values.size(); ++k) {
        double w = FM.grid.node(k);
        if (std::abs(w) > window)
            continue;
        cplx ref = pc.reference(w);
        dev = std::max(dev, std::abs(FM.values[k] - ref));
        ref_max = std::max(ref_max, std::abs(ref));
    }
    return ref_max > 0.0 ? dev / ref_max : dev;
}

// ||Y phi|| / ||phi|| with Y phi(t) = e^{-t/2} phi(e^{-t}), phi on [0, 1].
double isometry_ratio(const Grid& grid, const std::function<double(double)>& phi)
{
    const std::size_t n = grid.points, mid = n / 2;
    const double h = grid.spacing();
    double y2 = 0.0;
    for (std::size_t j = mid; j < n; ++j) {
        double t = grid.node(j);
        double v = std::exp(-0.5 * t) * phi(std::exp(-t));
        y2 += (j == mid ? 0.5 * h : h) * v * v;
    }
    double p2 = 0.0;
    const int m = 2000;
    for (int j = 0; j <= m; ++j) {
        double x = double(j) / m;
        double wq = (j == 0 || j == m) ? 1.0 : (j % 2 ? 4.0 : 2.0);
        p2 += wq * phi(x) * phi(x) / (3.0 * m);
    }
    return std::sqrt(y2 / p2);
}

} // namespace

double e_kernel(double x)
{
    return 0.5 / std::sinh(0.5 * x);
}

GridFunction e_convolution_symbol(const Grid& grid)
{
    if (grid.kind != GridKind::uniform_fullline)
        fail(ErrorCode::WrongGridKind, "E symbol needs a uniform full-line grid");
    GridFunction E = GridFunction::sample(grid, [](double x) -> cplx { return x == 0.0 ? 0.0 : e_kernel(x); });
    GridFunction F = fourier_pv(E, 1.0);
    const cplx c = std::sqrt(2.0 * kPi) / (kPi * I);
    for (cplx& v : F.values)
        v *= c;
    return F;
}

IntervalReductionReport interval_reduction_check(const Grid& grid, double window)
{
    if (grid.kind != GridKind::uniform_fullline)
        fail(ErrorCode::WrongGridKind, "interval reduction check needs a uniform full-line grid");
    IntervalReductionReport rep;

    const GridFunction sym = e_convolution_symbol(grid);
    for (std::size_t k = 0; k < sym.values.size(); ++k) {
        double w = sym.grid.node(k);
        if (std::abs(w) <= window)
            rep.symbol_max_error = std::max(rep.symbol_max_error, std::abs(sym.values[k] - std::tanh(kPi * w)));
    }

    for (int n : {1, 2})
        rep.reduction_max_deviation = std::max(rep.reduction_max_deviation, reduction_deviation(grid, PlusCase{n}, window));

    rep.isometry_ratio = 1.0;
    for (auto phi : {std::function<double(double)>([](double) { return 1.0; }),
                     std::function<double(double)>([](double x) { return x; })}) {
        double r = isometry_ratio(grid, phi);
        if (std::abs(r - 1.0) > std::abs(rep.isometry_ratio - 1.0))
            rep.isometry_ratio = r;
    }
    return rep;
}

} // namespace whf
