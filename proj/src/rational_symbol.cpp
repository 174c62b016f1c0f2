#include "whf/rational_symbol.hpp"

#include "whf/error.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

namespace whf {

namespace {

bool same_root(cplx a, cplx b)
{
    return std::abs(a - b) <= 1e-12 * std::max(1.0, std::abs(a));
}

bool on_axis(cplx z, double tau)
{
    return std::abs(z.imag()) <= tau * std::max(1.0, std::abs(z));
}

} // namespace

RationalSymbol::RationalSymbol(std::vector<cplx> zeros, std::vector<cplx> poles, cplx scale)
    : zeros_(std::move(zeros)), poles_(std::move(poles)), scale_(scale)
{
    for (cplx z : zeros_)
        if (!std::isfinite(z.real()) || !std::isfinite(z.imag()))
            fail(ErrorCode::InvalidArgument, "non-finite zero");
    for (cplx p : poles_)
        if (!std::isfinite(p.real()) || !std::isfinite(p.imag()))
            fail(ErrorCode::InvalidArgument, "non-finite pole");
    if (!std::isfinite(scale_.real()) || !std::isfinite(scale_.imag()))
        fail(ErrorCode::InvalidArgument, "non-finite scale");
    cancel();
}

void RationalSymbol::cancel()
{
    if (scale_ == cplx{}) {
        zeros_.clear();
        poles_.clear();
        return;
    }
    std::vector<cplx> kept_zeros;
    for (cplx z : zeros_) {
        auto it = std::find_if(poles_.begin(), poles_.end(), [&](cplx p) { return same_root(z, p); });
        if (it != poles_.end())
            poles_.erase(it);
        else
            kept_zeros.push_back(z);
    }
    zeros_ = std::move(kept_zeros);
}

RationalSymbol RationalSymbol::constant(cplx c)
{
    return RationalSymbol({}, {}, c);
}

RationalSymbol RationalSymbol::from_polynomials(const ComplexPolynomial& num, const ComplexPolynomial& den)
{
    if (den.is_zero())
        fail(ErrorCode::InvalidArgument, "zero denominator");
    if (num.is_zero())
        return constant(0.0);
    return RationalSymbol(num.roots(), den.roots(), num.leading() / den.leading());
}

RationalSymbol RationalSymbol::r_power(int k)
{
    std::vector<cplx> z(std::abs(k), k > 0 ? I : -I);
    std::vector<cplx> p(std::abs(k), k > 0 ? -I : I);
    return RationalSymbol(std::move(z), std::move(p), 1.0);
}

RationalSymbol RationalSymbol::lambda_plus(int k)
{
    std::vector<cplx> r(std::abs(k), -I);
    return k >= 0 ? RationalSymbol(std::move(r), {}, 1.0) : RationalSymbol({}, std::move(r), 1.0);
}

RationalSymbol RationalSymbol::lambda_minus(int k)
{
    std::vector<cplx> r(std::abs(k), I);
    return k >= 0 ? RationalSymbol(std::move(r), {}, 1.0) : RationalSymbol({}, std::move(r), 1.0);
}

ComplexPolynomial RationalSymbol::numerator() const
{
    return ComplexPolynomial::from_roots(zeros_, scale_);
}

ComplexPolynomial RationalSymbol::denominator() const
{
    return ComplexPolynomial::from_roots(poles_, 1.0);
}

cplx RationalSymbol::eval(cplx z) const
{
    cplx v = scale_;
    for (cplx p : poles_) {
        if (z == p || same_root(z, p))
            fail(ErrorCode::PoleAtPoint, "evaluation at a pole");
        v /= (z - p);
    }
    for (cplx r : zeros_)
        v *= (z - r);
    return v;
}

cplx RationalSymbol::eval_at_infinity() const
{
    const int bal = degree_balance();
    if (bal > 0)
        fail(ErrorCode::UnboundedAtInfinity, "numerator degree exceeds denominator degree");
    return bal == 0 ? scale_ : cplx{};
}

cplx RationalSymbol::eval_real(double x) const
{
    if (std::isinf(x))
        return eval_at_infinity();
    return eval(cplx{x, 0.0});
}

RationalSymbol RationalSymbol::reciprocal() const
{
    if (scale_ == cplx{})
        fail(ErrorCode::NotInvertibleSymbol, "reciprocal of the zero symbol");
    return RationalSymbol(poles_, zeros_, 1.0 / scale_);
}

RationalSymbol RationalSymbol::pow(int k) const
{
    RationalSymbol base = k >= 0 ? *this : reciprocal();
    RationalSymbol out = constant(1.0);
    for (int j = 0; j < std::abs(k); ++j)
        out = out * base;
    return out;
}

RationalSymbol operator*(const RationalSymbol& a, const RationalSymbol& b)
{
    std::vector<cplx> z = a.zeros_;
    z.insert(z.end(), b.zeros_.begin(), b.zeros_.end());
    std::vector<cplx> p = a.poles_;
    p.insert(p.end(), b.poles_.begin(), b.poles_.end());
    return RationalSymbol(std::move(z), std::move(p), a.scale_ * b.scale_);
}

RationalSymbol operator/(const RationalSymbol& a, const RationalSymbol& b)
{
    return a * b.reciprocal();
}

RootClassification classify_roots(const RationalSymbol& g, double tau_axis)
{
    RootClassification c;
    for (cplx z : g.zeros()) {
        if (on_axis(z, tau_axis))
            c.real_zeros.push_back(z);
        else
            (z.imag() > 0 ? c.upper_zeros : c.lower_zeros).push_back(z);
    }
    for (cplx p : g.poles()) {
        if (on_axis(p, tau_axis))
            c.real_poles.push_back(p);
        else
            (p.imag() > 0 ? c.upper_poles : c.lower_poles).push_back(p);
    }
    return c;
}

EllipticityReport is_elliptic(const RationalSymbol& g, std::size_t samples, double tau_axis)
{
    EllipticityReport rep;
    const RootClassification c = classify_roots(g, tau_axis);

    if (g.scale() == cplx{})
        rep.reason = "zero symbol";
    else if (!c.real_zeros.empty())
        rep.reason = "zero on the real axis";
    else if (!c.real_poles.empty())
        rep.reason = "pole on the real axis";
    else if (g.degree_balance() > 0)
        rep.reason = "unbounded at infinity";
    else if (g.degree_balance() < 0)
        rep.reason = "vanishes at infinity";
    else
        rep.elliptic = true;

    double m = std::numeric_limits<double>::infinity();
    if (c.real_poles.empty() && g.degree_balance() <= 0) {
        for (std::size_t k = 0; k < samples; ++k) {
            double phi = std::numbers::pi * ((k + 0.5) / samples - 0.5);
            m = std::min(m, std::abs(g.eval_real(std::tan(phi))));
        }
        m = std::min(m, std::abs(g.eval_at_infinity()));
    }
    if (!c.real_zeros.empty() || g.scale() == cplx{})
        m = 0.0;
    rep.min_modulus = m;
    return rep;
}

int winding_index(const RationalSymbol& g, double tau_axis)
{
    const EllipticityReport rep = is_elliptic(g, 16, tau_axis);
    if (!rep.elliptic)
        fail(ErrorCode::NotElliptic, "symbol is not elliptic: " + rep.reason);
    const RootClassification c = classify_roots(g, tau_axis);
    return static_cast<int>(c.upper_zeros.size()) - static_cast<int>(c.upper_poles.size());
}

} // namespace whf
