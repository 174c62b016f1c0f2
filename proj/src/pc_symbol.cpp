#include "whf/pc_symbol.hpp"

#include "whf/error.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

namespace whf {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

bool nearly_equal(cplx a, cplx b, double rel)
{
    return std::abs(a - b) <= rel * std::max({std::abs(a), std::abs(b), 1e-300});
}

bool nearly_zero(cplx v, double scale)
{
    return std::abs(v) <= 1e-14 * std::max(scale, 1e-300);
}

double cut_angle(double cut)
{
    if (std::isinf(cut))
        return 0.0;
    double a = std::atan2(-2.0 * cut, cut * cut - 1.0);
    return a < 0.0 ? a + kTwoPi : a;
}

cplx power_value(const PowerForm& f, double theta)
{
    return f.scale * std::exp(I * f.alpha * theta);
}

cplx tanh_value(const TanhForm& f, cplx inner)
{
    if (f.power == 1)
        return inner;
    if (inner == cplx{})
        fail(ErrorCode::PoleAtPoint, "reciprocal tanh form vanishes");
    return 1.0 / inner;
}

struct BaseEval {
    double x;

    cplx operator()(const RationalSymbol& g) const { return g.eval_real(x); }

    cplx operator()(const SignForm& f) const
    {
        if (x > 0)
            return f.a + f.b;
        if (x < 0)
            return -f.a + f.b;
        if (f.a != cplx{})
            fail(ErrorCode::JumpWithoutSide, "sign form evaluated at 0");
        return f.b;
    }

    cplx operator()(const TanhForm& f) const
    {
        double t = std::isinf(x) ? (x > 0 ? 1.0 : -1.0) : std::tanh(std::numbers::pi * x);
        return tanh_value(f, f.a * t + f.b);
    }

    cplx operator()(const PowerForm& f) const
    {
        const double phi0 = cut_angle(f.cut);
        if (std::isinf(x)) {
            // r -> 1 with arg -> 0+ as x -> -inf and arg -> 0- as x -> +inf
            if (std::isinf(f.cut))
                return power_value(f, x < 0 ? 0.0 : kTwoPi);
            return power_value(f, kTwoPi);
        }
        if (!std::isinf(f.cut) && x == f.cut && f.alpha != cplx{})
            fail(ErrorCode::JumpWithoutSide, "power form evaluated at its cut");
        double a = std::atan2(-2.0 * x, x * x - 1.0);
        while (a < phi0)
            a += kTwoPi;
        while (a >= phi0 + kTwoPi)
            a -= kTwoPi;
        return power_value(f, a);
    }

    cplx operator()(const SampledTable& t) const
    {
        if (x <= t.x.front())
            return t.values.front();
        if (x >= t.x.back())
            return t.values.back();
        auto it = std::upper_bound(t.x.begin(), t.x.end(), x);
        std::size_t k = static_cast<std::size_t>(it - t.x.begin());
        double w = (x - t.x[k - 1]) / (t.x[k] - t.x[k - 1]);
        return (1.0 - w) * t.values[k - 1] + w * t.values[k];
    }
};

void push_if_jump(std::vector<JumpPoint>& out, double loc, cplx left, cplx right)
{
    if (!nearly_equal(left, right, 1e-14))
        out.push_back({loc, left, right});
}

bool tanh_inner_vanishes(const TanhForm& f)
{
    if (f.a == cplx{})
        return f.b == cplx{};
    cplx t = -f.b / f.a;
    return std::abs(t.imag()) <= 1e-14 * std::max(1.0, std::abs(t)) && std::abs(t.real()) <= 1.0 + 1e-14;
}

} // namespace

cplx eval_base(const PCBase& base, double x)
{
    return std::visit(BaseEval{x}, base);
}

std::vector<JumpPoint> intrinsic_jumps(const PCBase& base)
{
    std::vector<JumpPoint> out;
    if (auto g = std::get_if<RationalSymbol>(&base)) {
        RootClassification c = classify_roots(*g);
        if (!c.real_poles.empty())
            fail(ErrorCode::InvalidArgument, "rational base has a real pole");
        if (g->degree_balance() > 0)
            fail(ErrorCode::UnboundedAtInfinity, "rational base is unbounded at infinity");
    } else if (auto f = std::get_if<SignForm>(&base)) {
        push_if_jump(out, 0.0, -f->a + f->b, f->a + f->b);
        push_if_jump(out, kInfinity, f->a + f->b, -f->a + f->b);
    } else if (auto f = std::get_if<TanhForm>(&base)) {
        if (f->power != 1 && f->power != -1)
            fail(ErrorCode::InvalidArgument, "tanh form power must be +-1");
        if (f->power == -1 && tanh_inner_vanishes(*f))
            fail(ErrorCode::InvalidArgument, "reciprocal tanh form is unbounded");
        push_if_jump(out, kInfinity, tanh_value(*f, f->a + f->b), tanh_value(*f, -f->a + f->b));
    } else if (auto f = std::get_if<PowerForm>(&base)) {
        if (std::isinf(f->cut)) {
            push_if_jump(out, kInfinity, power_value(*f, kTwoPi), power_value(*f, 0.0));
        } else {
            double phi0 = cut_angle(f->cut);
            push_if_jump(out, f->cut, power_value(*f, phi0 + kTwoPi), power_value(*f, phi0));
        }
    } else if (auto t = std::get_if<SampledTable>(&base)) {
        if (t->x.empty() || t->x.size() != t->values.size())
            fail(ErrorCode::InvalidArgument, "sample table needs matching non-empty columns");
        for (std::size_t k = 1; k < t->x.size(); ++k)
            if (!(t->x[k] > t->x[k - 1]))
                fail(ErrorCode::InvalidArgument, "sample table nodes must increase strictly");
        push_if_jump(out, kInfinity, t->values.back(), t->values.front());
    }
    return out;
}

PCSymbol::PCSymbol(PCBase base, std::vector<JumpPoint> jumps)
    : base_(std::move(base)), jumps_(std::move(jumps))
{
    const std::vector<JumpPoint> expected = intrinsic_jumps(base_);
    for (std::size_t k = 1; k < jumps_.size(); ++k)
        if (!(jumps_[k].location > jumps_[k - 1].location))
            fail(ErrorCode::InvalidArgument, "jump locations must be sorted and distinct");
    if (expected.size() != jumps_.size())
        fail(ErrorCode::InvalidArgument, "jump list does not match the discontinuities of the base");
    for (std::size_t k = 0; k < jumps_.size(); ++k) {
        const JumpPoint& a = jumps_[k];
        const JumpPoint& b = expected[k];
        if (a.location != b.location || !nearly_equal(a.left, b.left, 1e-9) || !nearly_equal(a.right, b.right, 1e-9))
            fail(ErrorCode::InvalidArgument, "jump list does not match the discontinuities of the base");
    }
}

PCSymbol PCSymbol::from_base(PCBase base)
{
    std::vector<JumpPoint> j = intrinsic_jumps(base);
    return PCSymbol(std::move(base), std::move(j));
}

PCSymbol PCSymbol::sign_symbol(cplx lambda)
{
    return from_base(SignForm{-1.0, -lambda});
}

PCSymbol PCSymbol::tanh_symbol(cplx lambda)
{
    return from_base(TanhForm{1.0, -lambda, 1});
}

PCSymbol PCSymbol::power_at_infinity(cplx alpha)
{
    return from_base(PowerForm{1.0, alpha, kInfinity});
}

const JumpPoint* PCSymbol::jump_at(double location) const
{
    for (const JumpPoint& j : jumps_)
        if (j.location == location || (std::isinf(location) && std::isinf(j.location)))
            return &j;
    return nullptr;
}

cplx PCSymbol::eval(double x) const
{
    if (std::isinf(x))
        return x > 0 ? limit_plus_infinity() : limit_minus_infinity();
    if (jump_at(x))
        fail(ErrorCode::JumpWithoutSide, "evaluation at a jump point needs a side");
    return eval_base(base_, x);
}

cplx PCSymbol::eval(double x, Side side) const
{
    if (const JumpPoint* j = jump_at(x))
        return side == Side::left ? j->left : j->right;
    if (std::isinf(x))
        return side == Side::left ? limit_plus_infinity() : limit_minus_infinity();
    return eval_base(base_, x);
}

cplx PCSymbol::limit_plus_infinity() const
{
    if (const JumpPoint* j = jump_at(kInfinity))
        return j->left;
    return eval_base(base_, kInfinity);
}

cplx PCSymbol::limit_minus_infinity() const
{
    if (const JumpPoint* j = jump_at(kInfinity))
        return j->right;
    return eval_base(base_, -kInfinity);
}

bool PCSymbol::closure_vanishes() const
{
    for (const JumpPoint& j : jumps_)
        if (j.left == cplx{} || j.right == cplx{})
            return true;
    if (auto g = std::get_if<RationalSymbol>(&base_)) {
        return g->scale() == cplx{} || !classify_roots(*g).real_zeros.empty() || g->degree_balance() < 0;
    } else if (auto f = std::get_if<SignForm>(&base_)) {
        double s = std::abs(f->a) + std::abs(f->b);
        return nearly_zero(f->a + f->b, s) || nearly_zero(-f->a + f->b, s);
    } else if (auto f = std::get_if<TanhForm>(&base_)) {
        return f->power == 1 && tanh_inner_vanishes(*f);
    } else if (auto f = std::get_if<PowerForm>(&base_)) {
        return f->scale == cplx{};
    } else if (auto t = std::get_if<SampledTable>(&base_)) {
        for (std::size_t k = 0; k < t->values.size(); ++k) {
            cplx v = t->values[k];
            if (v == cplx{})
                return true;
            if (k + 1 < t->values.size()) {
                cplx w = t->values[k + 1];
                cplx c = std::conj(v) * w;
                if (std::abs(c.imag()) <= 1e-14 * std::abs(v) * std::abs(w) && c.real() < 0)
                    return true;
            }
        }
    }
    return false;
}

PCSymbol PCSymbol::reciprocal() const
{
    if (closure_vanishes())
        fail(ErrorCode::NotInvertibleSymbol, "symbol vanishes on the extended line");
    if (auto g = std::get_if<RationalSymbol>(&base_))
        return from_base(g->reciprocal());
    if (auto f = std::get_if<SignForm>(&base_)) {
        cplx vp = 1.0 / (f->a + f->b), vm = 1.0 / (-f->a + f->b);
        return from_base(SignForm{(vp - vm) / 2.0, (vp + vm) / 2.0});
    }
    if (auto f = std::get_if<TanhForm>(&base_))
        return from_base(TanhForm{f->a, f->b, -f->power});
    if (auto f = std::get_if<PowerForm>(&base_))
        return from_base(PowerForm{1.0 / f->scale, -f->alpha, f->cut});
    const auto& t = std::get<SampledTable>(base_);
    SampledTable r{t.x, {}};
    for (cplx v : t.values)
        r.values.push_back(1.0 / v);
    return from_base(std::move(r));
}

std::pair<cplx, cplx> one_sided_limits(const PCSymbol& g, double c)
{
    if (std::isinf(c))
        return {g.limit_plus_infinity(), g.limit_minus_infinity()};
    return {g.eval(c, Side::left), g.eval(c, Side::right)};
}

} // namespace whf
