#pragma once

// Independent reference computations used by the unit tests. Nothing here
// calls into the library's own algorithms.

#include "whf/polynomial.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <numbers>
#include <random>
#include <vector>

namespace oracle {

using whf::cplx;

/// Winding number of x -> f(x) over the extended line by accumulated
/// argument increments, x = tan(theta), theta in (-pi/2, pi/2).
inline int argument_variation(const std::function<cplx(double)>& f, int samples = 200000)
{
    const double pi = std::numbers::pi;
    double total = 0.0;
    cplx prev = f(std::tan(-pi / 2 + pi / (2.0 * samples)));
    for (int j = 1; j <= samples; ++j) {
        double th = -pi / 2 + pi * (j + 0.5) / (samples + 1.0);
        cplx cur = f(std::tan(th));
        total += std::arg(cur / prev);
        prev = cur;
    }
    return static_cast<int>(std::lround(total / (2 * pi)));
}

inline std::pair<cplx, cplx> quadratic_roots(cplx a, cplx b, cplx c)
{
    cplx d = std::sqrt(b * b - 4.0 * a * c);
    return {(-b + d) / (2.0 * a), (-b - d) / (2.0 * a)};
}

/// Random point kept at least `gap` away from the real axis.
inline cplx off_axis(std::mt19937_64& rng, bool upper, double gap = 0.2)
{
    std::uniform_real_distribution<double> re(-3.0, 3.0), im(gap, 3.0);
    return {re(rng), upper ? im(rng) : -im(rng)};
}

/// Trapezoid rule on [a, b] with n cells.
inline double trapezoid(const std::function<double(double)>& f, double a, double b, int n)
{
    double h = (b - a) / n, s = 0.5 * (f(a) + f(b));
    for (int j = 1; j < n; ++j)
        s += f(a + j * h);
    return s * h;
}

/// Sorting key for multiset comparison of roots.
inline bool root_less(cplx a, cplx b)
{
    if (std::abs(a.real() - b.real()) > 1e-9)
        return a.real() < b.real();
    return a.imag() < b.imag();
}

inline bool same_multiset(std::vector<cplx> a, std::vector<cplx> b, double tol)
{
    if (a.size() != b.size())
        return false;
    std::sort(a.begin(), a.end(), root_less);
    std::sort(b.begin(), b.end(), root_less);
    for (std::size_t j = 0; j < a.size(); ++j)
        if (std::abs(a[j] - b[j]) > tol)
            return false;
    return true;
}

} // namespace oracle
