#include "whf/factorisation.hpp"

#include "whf/error.hpp"

#include <cmath>
#include <numbers>
#include <sstream>

namespace whf {

std::string_view to_string(Provenance p)
{
    switch (p) {
    case Provenance::exact_rational: return "exact-rational";
    case Provenance::jump_power: return "jump-power";
    case Provenance::numeric_grid: return "numeric-grid";
    }
    return "unknown";
}

std::string_view to_string(RecipeSide s)
{
    switch (s) {
    case RecipeSide::two_sided: return "two-sided";
    case RecipeSide::left: return "left";
    case RecipeSide::right: return "right";
    }
    return "unknown";
}

cplx eval_branch(const BranchPower& b, cplx z)
{
    const cplx w = z - b.centre;
    if (w == cplx{}) {
        if (b.exponent == cplx{})
            return 1.0;
        if (b.exponent.real() > 0)
            return 0.0;
        fail(ErrorCode::PoleAtPoint, "branch power evaluated at its branch point");
    }
    constexpr double two_pi = 2.0 * std::numbers::pi;
    double a = std::arg(w);
    while (a <= b.arg_floor)
        a += two_pi;
    while (a > b.arg_floor + two_pi)
        a -= two_pi;
    return std::exp(b.exponent * cplx{std::log(std::abs(w)), a});
}

Factor Factor::reciprocal() const
{
    Factor out = *this;
    if (auto g = std::get_if<RationalSymbol>(&body)) {
        out.body = g->reciprocal();
    } else if (auto b = std::get_if<BranchPower>(&body)) {
        BranchPower r = *b;
        r.exponent = -r.exponent;
        out.body = r;
    } else {
        auto& gf = std::get<GridFunction>(out.body);
        for (cplx& v : gf.values) {
            if (v == cplx{})
                fail(ErrorCode::NotInvertibleSymbol, "grid factor vanishes at a node");
            v = 1.0 / v;
        }
    }
    return out;
}

bool Factor::is_identity() const
{
    if (auto g = std::get_if<RationalSymbol>(&body))
        return g->is_identity();
    if (auto b = std::get_if<BranchPower>(&body))
        return b->exponent == cplx{};
    return false;
}

std::vector<cplx> Factor::sample(std::span<const double> x) const
{
    std::vector<cplx> out(x.size());
    if (auto g = std::get_if<RationalSymbol>(&body)) {
        for (std::size_t j = 0; j < x.size(); ++j)
            out[j] = g->eval_real(x[j]);
    } else if (auto b = std::get_if<BranchPower>(&body)) {
        for (std::size_t j = 0; j < x.size(); ++j) {
            if (std::isinf(x[j]))
                fail(ErrorCode::UnboundedAtInfinity, "branch power factor has no value at infinity");
            out[j] = eval_branch(*b, {x[j], 0.0});
        }
    } else {
        const auto& gf = std::get<GridFunction>(body);
        if (x.size() != gf.grid.points)
            fail(ErrorCode::InvalidArgument, "grid factor sampled off its own nodes");
        for (std::size_t j = 0; j < x.size(); ++j) {
            if (x[j] != gf.grid.node(j))
                fail(ErrorCode::InvalidArgument, "grid factor sampled off its own nodes");
            out[j] = gf.values[j];
        }
    }
    return out;
}

std::vector<cplx> Factor::sample(const Grid& grid) const
{
    if (auto gf = std::get_if<GridFunction>(&body)) {
        if (!(gf->grid == grid))
            fail(ErrorCode::WrongGridKind, "grid factor lives on a different grid");
        return gf->values;
    }
    auto x = grid.nodes();
    return sample(x);
}

WHFactorisation wh_factor_rational(const RationalSymbol& g)
{
    const int k = winding_index(g);
    const RootClassification c = classify_roots(g);
    const int a = static_cast<int>(c.upper_zeros.size());
    const int b = static_cast<int>(c.upper_poles.size());

    std::vector<cplx> mz = c.upper_zeros, mp = c.upper_poles;
    for (int j = 0; j < b - a; ++j)
        mz.push_back(I);
    for (int j = 0; j < a - b; ++j)
        mp.push_back(I);

    std::vector<cplx> pz = c.lower_zeros, pp = c.lower_poles;
    for (int j = 0; j < k; ++j)
        pz.push_back(-I);
    for (int j = 0; j < -k; ++j)
        pp.push_back(-I);

    WHFactorisation f;
    f.g_minus = Factor{RationalSymbol(std::move(mz), std::move(mp), 1.0), HalfPlane::lower};
    f.g_plus = Factor{RationalSymbol(std::move(pz), std::move(pp), g.scale()), HalfPlane::upper};
    f.index_k = k;
    f.provenance = Provenance::exact_rational;
    f.normalization = {"g_minus(inf)=1", g.scale()};
    return f;
}

WHFactorisation factor_jump_symbol(cplx alpha, double p)
{
    if (p != 2.0)
        fail(ErrorCode::UnsupportedP, "explicit jump factorisation is implemented for p = 2 only");
    if (!(std::abs(alpha.real()) < 0.5))
        fail(ErrorCode::RegularityViolated, "|Re alpha| must be < 1/2 for p = 2");

    WHFactorisation f;
    f.index_k = 0;
    if (alpha == cplx{}) {
        f.g_minus = Factor{RationalSymbol::constant(1.0), HalfPlane::lower};
        f.g_plus = Factor{RationalSymbol::constant(1.0), HalfPlane::upper};
        f.provenance = Provenance::exact_rational;
        f.normalization = {"g_minus(inf)=1", 1.0};
        return f;
    }
    const double pi = std::numbers::pi;
    f.g_minus = Factor{BranchPower{I, alpha, pi / 2.0}, HalfPlane::lower};
    f.g_plus = Factor{BranchPower{-I, -alpha, -pi / 2.0}, HalfPlane::upper};
    f.provenance = Provenance::jump_power;
    f.normalization = {"none (factors unbounded at infinity)", 1.0};
    return f;
}

namespace {

std::pair<bool, std::string> check_half_plane(const Factor& fac, const char* name)
{
    const bool want_upper_roots = fac.analytic_in == HalfPlane::lower;
    std::ostringstream d;
    if (auto g = std::get_if<RationalSymbol>(&fac.body)) {
        const double tau = 1e-9;
        int bad = 0, total = 0;
        auto check = [&](cplx z) {
            ++total;
            double lim = tau * std::max(1.0, std::abs(z));
            bool ok = want_upper_roots ? z.imag() >= -lim : z.imag() <= lim;
            bad += ok ? 0 : 1;
        };
        for (cplx z : g->zeros())
            check(z);
        for (cplx z : g->poles())
            check(z);
        d << name << ": " << total - bad << "/" << total << " roots in the closed "
          << (want_upper_roots ? "upper" : "lower") << " half-plane";
        return {bad == 0, d.str()};
    }
    if (auto b = std::get_if<BranchPower>(&fac.body)) {
        bool centre_ok = want_upper_roots ? b->centre.imag() >= 0 : b->centre.imag() <= 0;
        double s = std::sin(b->arg_floor);
        bool cut_ok = want_upper_roots ? s > 0 : s < 0;
        d << name << ": branch point " << (centre_ok ? "and cut in the" : "NOT in the") << " "
          << (want_upper_roots ? "upper" : "lower") << " half-plane" << (cut_ok ? "" : ", cut crosses the line");
        return {centre_ok && cut_ok, d.str()};
    }
    const auto& gf = std::get<GridFunction>(fac.body);
    // g_+/(x+i) must lie in H2+, g_-/(x-i) in H2-
    HalfPlane side = fac.analytic_in;
    GridFunction m = gf;
    for (std::size_t j = 0; j < m.values.size(); ++j)
        m.values[j] /= cplx{gf.grid.node(j), side == HalfPlane::upper ? 1.0 : -1.0};
    double score = analyticity_score(m, side);
    d << name << ": analyticity score " << score;
    return {score >= 0.999, d.str()};
}

} // namespace

VerificationReport verify_factorisation(const WHFactorisation& f, const Symbol& g, std::span<const double> points)
{
    VerificationReport rep;
    std::vector<cplx> gm = f.g_minus.sample(points);
    std::vector<cplx> gp = f.g_plus.sample(points);
    const RationalSymbol rk = RationalSymbol::r_power(f.index_k);
    for (std::size_t j = 0; j < points.size(); ++j) {
        cplx target = eval_symbol(g, points[j]);
        cplx prod = gm[j] * rk.eval_real(points[j]) * gp[j];
        double dev = std::abs(prod - target) / std::max(std::abs(target), 1e-300);
        rep.max_relative_deviation = std::max(rep.max_relative_deviation, dev);
    }
    std::tie(rep.minus_ok, rep.minus_detail) = check_half_plane(f.g_minus, "g_minus");
    std::tie(rep.plus_ok, rep.plus_detail) = check_half_plane(f.g_plus, "g_plus");
    return rep;
}

InverseRecipe inverse_recipe(const WHFactorisation& f)
{
    InverseRecipe r;
    const int k = f.index_k;
    r.side = k == 0 ? RecipeSide::two_sided : k > 0 ? RecipeSide::left : RecipeSide::right;
    if (k < 0)
        r.actions.push_back(ToeplitzRPowerAction{-k});
    if (!f.g_minus.is_identity()) {
        r.actions.push_back(MultiplyAction{f.g_minus.reciprocal(), "g_minus^-1"});
        r.actions.push_back(ProjectPlusAction{});
    }
    if (!f.g_plus.is_identity())
        r.actions.push_back(MultiplyAction{f.g_plus.reciprocal(), "g_plus^-1"});
    if (k > 0)
        r.actions.push_back(ToeplitzRPowerAction{-k});
    return r;
}

std::string InverseRecipe::describe() const
{
    std::ostringstream out;
    out << to_string(side) << ":";
    if (actions.empty())
        out << " identity";
    for (std::size_t j = 0; j < actions.size(); ++j) {
        out << (j ? " -> " : " ");
        if (auto m = std::get_if<MultiplyAction>(&actions[j]))
            out << "mult(" << m->label << ")";
        else if (std::holds_alternative<ProjectPlusAction>(actions[j]))
            out << "P+";
        else
            out << "T_{r^" << std::get<ToeplitzRPowerAction>(actions[j]).m << "}";
    }
    return out.str();
}

} // namespace whf
