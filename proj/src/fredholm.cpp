#include "whf/fredholm.hpp"

#include "whf/error.hpp"
#include "whf/io.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>

namespace whf {

namespace {

constexpr double kPi = std::numbers::pi;

void check_p(double p)
{
    if (!(p > 1.0) || !std::isfinite(p))
        fail(ErrorCode::InvalidArgument, "p must lie in (1, inf)");
}

double wrap_angle(double a)
{
    a = std::remainder(a, 2.0 * kPi);
    return a;
}

cplx coth_shifted(double p, double w)
{
    // coth(pi (w + i/p)) without overflow
    const cplx z{kPi * w, kPi / p};
    if (w >= 0) {
        cplx e = std::exp(-2.0 * z);
        return (1.0 + e) / (1.0 - e);
    }
    cplx e = std::exp(2.0 * z);
    return -(1.0 + e) / (1.0 - e);
}

void append_arc(std::vector<CurveSample>& out, double x, cplx left, cplx right, double p, std::size_t n)
{
    out.push_back({x, kInfinity, true, left});
    for (std::size_t k = 0; k < n; ++k) {
        double theta = kPi / 2.0 - kPi * (static_cast<double>(k) + 0.5) / static_cast<double>(n);
        double w = std::tan(theta);
        out.push_back({x, w, true, arc_point(left, right, p, w)});
    }
    out.push_back({x, -kInfinity, true, right});
}

} // namespace

cplx arc_point(cplx left, cplx right, double p, double w)
{
    if (std::isinf(w))
        return w > 0 ? left : right;
    return 0.5 * (left + right) + 0.5 * (left - right) * coth_shifted(p, w);
}

bool arc_through_origin(cplx left, cplx right, double p)
{
    if (left == cplx{} || right == cplx{})
        return true;
    // g_p = 0  <=>  exp(2 pi (w + i/p)) = right/left for some real w
    return std::abs(wrap_angle(std::arg(right / left) - 2.0 * kPi / p)) <= 1e-9;
}

std::vector<CurveSample> gp_curve(const PCSymbol& g, double p, const CurveOptions& opts)
{
    check_p(p);
    if (opts.x_samples < 2 || opts.w_samples < 1)
        fail(ErrorCode::InvalidArgument, "curve sampling counts too small");
    std::vector<const JumpPoint*> finite;
    for (const JumpPoint& j : g.jumps())
        if (!std::isinf(j.location))
            finite.push_back(&j);

    std::vector<CurveSample> out;
    out.reserve(opts.x_samples + (finite.size() + 1) * (opts.w_samples + 2) + 2);
    out.push_back({-kInfinity, 0.0, false, g.limit_minus_infinity()});
    std::size_t next = 0;
    for (std::size_t k = 0; k < opts.x_samples; ++k) {
        double phi = -kPi / 2.0 + kPi * (static_cast<double>(k) + 0.5) / static_cast<double>(opts.x_samples);
        double x = std::tan(phi);
        while (next < finite.size() && finite[next]->location <= x) {
            append_arc(out, finite[next]->location, finite[next]->left, finite[next]->right, p, opts.w_samples);
            ++next;
        }
        if (g.jump_at(x))
            continue;
        out.push_back({x, 0.0, false, eval_base(g.base(), x)});
    }
    for (; next < finite.size(); ++next)
        append_arc(out, finite[next]->location, finite[next]->left, finite[next]->right, p, opts.w_samples);
    out.push_back({kInfinity, 0.0, false, g.limit_plus_infinity()});
    if (const JumpPoint* j = g.jump_at(kInfinity))
        append_arc(out, kInfinity, j->left, j->right, p, opts.w_samples);
    return out;
}

PRegularity p_regular(const PCSymbol& g, double p, const CurveOptions& opts)
{
    check_p(p);
    PRegularity r;
    r.exact_regular = true;
    if (g.closure_vanishes()) {
        r.exact_regular = false;
        r.reason = "symbol or a one-sided limit vanishes";
    }
    for (const JumpPoint& j : g.jumps()) {
        if (r.exact_regular && arc_through_origin(j.left, j.right, p)) {
            r.exact_regular = false;
            r.reason = "arc through the origin at x = " + format_double(j.location);
        }
    }
    auto curve = gp_curve(g, p, opts);
    r.min_modulus = kInfinity;
    for (const CurveSample& s : curve) {
        double m = std::abs(s.value);
        r.min_modulus = std::min(r.min_modulus, m);
        r.max_modulus = std::max(r.max_modulus, m);
    }
    const bool sampled_ok = r.min_modulus > 1e-8 * r.max_modulus;
    if (r.exact_regular && !sampled_ok)
        r.reason = "sampled curve modulus below 1e-8 of its maximum";
    r.regular = r.exact_regular && sampled_ok;
    return r;
}

int curve_winding(const std::vector<CurveSample>& curve, double threshold)
{
    if (curve.size() < 2)
        fail(ErrorCode::InvalidArgument, "curve needs at least two samples");
    for (const CurveSample& s : curve)
        if (!(std::abs(s.value) > threshold))
            fail(ErrorCode::CurveThroughOrigin, "curve passes through (or too close to) the origin");
    double total = 0.0;
    for (std::size_t k = 0; k < curve.size(); ++k) {
        const cplx a = curve[k].value;
        const cplx b = curve[(k + 1) % curve.size()].value;
        total += std::arg(b / a);
    }
    return static_cast<int>(std::lround(total / (2.0 * kPi)));
}

JumpExponents jump_exponents(const PCSymbol& g, double centre)
{
    auto exponent = [&](cplx left, cplx right) {
        if (left == cplx{} || right == cplx{})
            fail(ErrorCode::ZeroLimit, "a one-sided limit vanishes");
        cplx a = std::log(left / right) / (2.0 * kPi * I);
        // principal log gives Re a in (-1/2, 1/2]; move into (centre - 1/2, centre + 1/2]
        double shift = std::ceil(centre - 0.5 - a.real());
        if (a.real() + shift <= centre - 0.5)
            shift += 1.0;
        return a + shift;
    };
    JumpExponents out;
    out.alpha_infinity = 0.0;
    for (const JumpPoint& j : g.jumps()) {
        if (std::isinf(j.location))
            out.alpha_infinity = exponent(j.left, j.right);
        else
            out.finite.push_back({j.location, exponent(j.left, j.right)});
    }
    std::ostringstream bc;
    bc << "Re alpha in (" << format_double(centre - 0.5) << ", " << format_double(centre + 0.5) << "]";
    out.branch_choice = centre == 0.0 ? "principal: " + bc.str() : "override: " + bc.str();
    return out;
}

bool window_test(const PCSymbol& g, double p)
{
    check_p(p);
    if (g.closure_vanishes())
        return false;
    const JumpExponents e = jump_exponents(g);
    auto hits = [](double re, double boundary) {
        return std::abs(std::remainder(re - boundary, 1.0)) <= 1e-9;
    };
    if (hits(e.alpha_infinity.real(), -1.0 / p))
        return false;
    for (const JumpExponent& j : e.finite)
        if (hits(j.alpha.real(), 1.0 / p))
            return false;
    return true;
}

std::string_view to_string(Invertibility v)
{
    switch (v) {
    case Invertibility::two_sided: return "two-sided";
    case Invertibility::left_only: return "left-only";
    case Invertibility::right_only: return "right-only";
    case Invertibility::not_invertible: return "not-invertible";
    case Invertibility::not_fredholm: return "not-fredholm";
    }
    return "unknown";
}

FredholmReport fredholm_report(const Symbol& g, double p, const CurveOptions& opts)
{
    check_p(p);
    FredholmReport rep;
    rep.p = p;
    bool regular = false;
    int k = 0;
    if (auto r = std::get_if<RationalSymbol>(&g)) {
        if (!classify_roots(*r).real_poles.empty() || r->degree_balance() > 0)
            fail(ErrorCode::InvalidArgument, "rational symbol is not bounded on the line");
        EllipticityReport e = is_elliptic(*r, opts.x_samples);
        rep.min_curve_modulus = e.min_modulus;
        regular = e.elliptic;
        if (regular)
            k = winding_index(*r);
    } else {
        const PCSymbol& pc = std::get<PCSymbol>(g);
        PRegularity pr = p_regular(pc, p, opts);
        rep.min_curve_modulus = pr.min_modulus;
        regular = pr.regular;
        if (regular)
            k = curve_winding(gp_curve(pc, p, opts), 1e-8 * pr.max_modulus);
    }
    rep.is_closed_range = regular;
    rep.is_fredholm = regular;
    if (!regular)
        return rep;
    rep.winding = k;
    rep.index = -k;
    rep.dim_ker = k < 0 ? -k : 0;
    rep.dim_coker = k > 0 ? k : 0;
    rep.invertibility = k == 0 ? Invertibility::two_sided : k > 0 ? Invertibility::left_only : Invertibility::right_only;
    return rep;
}

DualityResult duality_check(const Symbol& g, double p, const CurveOptions& opts)
{
    check_p(p);
    Symbol inv;
    if (auto r = std::get_if<RationalSymbol>(&g)) {
        RootClassification c = classify_roots(*r);
        if (r->scale() == cplx{} || !c.real_zeros.empty() || !c.real_poles.empty() || r->degree_balance() != 0)
            fail(ErrorCode::NotInvertibleSymbol, "symbol is not invertible in L_inf");
        inv = r->reciprocal();
    } else {
        inv = std::get<PCSymbol>(g).reciprocal();
    }
    DualityResult d;
    d.p_prime = p / (p - 1.0);
    d.at_p = fredholm_report(g, p, opts).invertibility;
    d.reciprocal_at_p_prime = fredholm_report(inv, d.p_prime, opts).invertibility;
    d.agree = (d.at_p == Invertibility::two_sided) == (d.reciprocal_at_p_prime == Invertibility::two_sided);
    return d;
}

std::string curve_csv(const std::vector<CurveSample>& curve)
{
    std::ostringstream out;
    out << "re,im\n";
    for (const CurveSample& s : curve)
        out << format_double(s.value.real()) << ',' << format_double(s.value.imag()) << '\n';
    return out.str();
}

} // namespace whf
