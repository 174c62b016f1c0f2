#include "whf/selftest.hpp"

#include "whf/error.hpp"
#include "whf/fredholm.hpp"
#include "whf/io.hpp"
#include "whf/sie.hpp"
#include "whf/spectral.hpp"
#include "whf/toeplitz.hpp"

#include <cmath>
#include <functional>

namespace whf {

namespace {

SelfTestCheck check(std::string name, const std::function<std::pair<bool, std::string>()>& body)
{
    SelfTestCheck c{std::move(name), false, {}};
    try {
        auto [ok, detail] = body();
        c.passed = ok;
        c.detail = std::move(detail);
    } catch (const std::exception& e) {
        c.detail = std::string("exception: ") + e.what();
    }
    return c;
}

GridFunction sum(GridFunction a, const GridFunction& b)
{
    for (std::size_t j = 0; j < a.values.size(); ++j)
        a.values[j] += b.values[j];
    return a;
}

} // namespace

std::vector<SelfTestCheck> run_selftest()
{
    std::vector<SelfTestCheck> out;

    out.push_back(check("factorise (x+2i)^2/(x^2+1)", [] {
        RationalSymbol g({-2.0 * I, -2.0 * I}, {I, -I}, 1.0);
        WHFactorisation f = wh_factor_rational(g);
        std::vector<double> xs{-3.0, -0.5, 0.0, 1.0, 7.0};
        VerificationReport v = verify_factorisation(f, g, xs);
        return std::pair{f.index_k == -1 && v.max_relative_deviation < 1e-12,
                         "k=" + std::to_string(f.index_k) + " dev=" + format_double(v.max_relative_deviation)};
    }));

    out.push_back(check("index of r^k", [] {
        bool ok = true;
        for (int k = -3; k <= 3; ++k) {
            FredholmReport r = fredholm_report(RationalSymbol::r_power(k), 2.0);
            ok = ok && r.index == -k && r.dim_ker == std::max(0, -k) && r.dim_coker == std::max(0, k);
        }
        return std::pair{ok, std::string()};
    }));

    out.push_back(check("S^2 = I on a uniform grid", [] {
        Grid g = Grid::uniform(20.0, 256);
        GridFunction f = GridFunction::sample(g, [](double x) { return std::exp(-x * x) * cplx(1.0, x); });
        GridFunction s2 = hilbert_S(hilbert_S(f));
        double d = max_abs_diff(s2, f);
        return std::pair{d < 1e-12, "max dev " + format_double(d)};
    }));

    out.push_back(check("P+ and P- are complementary projections", [] {
        Grid g = Grid::uniform(20.0, 256);
        GridFunction f = GridFunction::sample(g, [](double x) { return std::exp(-x * x) * cplx(1.0, x); });
        GridFunction pp = riesz_project(f, HalfPlane::upper), pm = riesz_project(f, HalfPlane::lower);
        double d = std::max(max_abs_diff(riesz_project(pp, HalfPlane::upper), pp),
                            max_abs_diff(sum(pp, pm), f));
        return std::pair{d < 1e-12, "max dev " + format_double(d)};
    }));

    out.push_back(check("Coburn and duality on sign and power symbols", [] {
        bool ok = true;
        int n = 0;
        for (double p : {1.5, 2.0, 3.0}) {
            for (double a : {-0.6, -0.3, 0.1, 0.4, 0.7}) {
                for (const Symbol& g : {Symbol(PCSymbol::power_at_infinity(a)), Symbol(PCSymbol::sign_symbol(cplx(a, 0.3)))}) {
                    FredholmReport r = fredholm_report(g, p);
                    if (r.dim_ker && r.dim_coker)
                        ok = ok && (*r.dim_ker == 0 || *r.dim_coker == 0);
                    ok = ok && duality_check(g, p).agree;
                    ++n;
                }
            }
        }
        return std::pair{ok, std::to_string(n) + " symbols"};
    }));

    out.push_back(check("window test agrees with the curve at infinity", [] {
        bool ok = true;
        for (double p : {1.5, 2.0, 4.0})
            for (double a : {-0.8, -0.4, 0.3, 0.6, 0.9})
                ok = ok && window_test(PCSymbol::power_at_infinity(a), p) == fredholm_report(PCSymbol::power_at_infinity(a), p).is_fredholm;
        return std::pair{ok, std::string()};
    }));

    out.push_back(check("alpha(conj lambda) = -conj(alpha(lambda))", [] {
        double d = 0.0;
        for (cplx l : {cplx(0.3, -2.0), cplx(-1.5, 0.7), cplx(4.0, -0.1)})
            d = std::max(d, std::abs(alpha_of_lambda(std::conj(l)) + std::conj(alpha_of_lambda(l))));
        return std::pair{d < 1e-13, "max dev " + format_double(d)};
    }));

    out.push_back(check("full-line resolvent", [] {
        Grid g = Grid::uniform(20.0, 256);
        GridFunction h = GridFunction::sample(g, [](double x) { return std::exp(-x * x); });
        GridFunction f = resolve_fullline(2.0 * I, h);
        double r = fullline_residual(2.0 * I, f, h);
        return std::pair{r < 1e-10, "residual " + format_double(r)};
    }));

    out.push_back(check("canonical numeric factorisation", [] {
        RationalSymbol g({2.0 * I, -2.0 * I}, {I, -I}, 1.0);
        Grid grid = Grid::cayley(128);
        WHFactorisation f = numeric_canonical_factorise(g, grid);
        WHFactorisation e = wh_factor_rational(g);
        auto a = f.g_plus.sample(grid);
        auto b = e.g_plus.sample(grid);
        double dev = 0.0;
        for (std::size_t j = 0; j < a.size(); ++j)
            dev = std::max(dev, std::abs(a[j] / b[j] - 1.0));
        return std::pair{dev < 1e-6, "rel dev " + format_double(dev)};
    }));

    out.push_back(check("half-line spectrum at lambda = 0.5", [] {
        SpectrumScanResult s = spectrum_scan(Domain::half_line, {0.5, 2.0});
        return std::pair{!s.entries[0].regular && s.entries[1].regular, std::string()};
    }));

    out.push_back(check("half-line resolvent, small grid", [] {
        Grid g = Grid::graded(40.0, 512, 6.0);
        GridFunction h = GridFunction::sample(g, [](double t) { return std::exp(-t); });
        HalfLineOptions o;
        o.decay_tolerance = 1e-8;
        HalfLineSolution s = resolve_halfline(-2.0 * I, h, o);
        return std::pair{s.residual < 5e-2, "residual " + format_double(s.residual) + " variant " +
                                                std::string(to_string(s.variant))};
    }));

    return out;
}

} // namespace whf
