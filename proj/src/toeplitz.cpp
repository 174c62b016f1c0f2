#include "whf/toeplitz.hpp"

#include "whf/error.hpp"
#include "whf/fft.hpp"
#include "whf/fredholm.hpp"

#include <cmath>
#include <numbers>

namespace whf {

std::vector<cplx> sample_symbol(const Symbol& g, const Grid& grid)
{
    std::vector<cplx> out(grid.points);
    for (std::size_t j = 0; j < grid.points; ++j) {
        double x = grid.node(j);
        if (auto r = std::get_if<RationalSymbol>(&g)) {
            out[j] = r->eval_real(x);
        } else {
            const PCSymbol& pc = std::get<PCSymbol>(g);
            if (pc.jump_at(x))
                out[j] = 0.5 * (pc.eval(x, Side::left) + pc.eval(x, Side::right));
            else
                out[j] = eval_base(pc.base(), x);
        }
    }
    return out;
}

ToeplitzResult toeplitz_apply(std::span<const cplx> g, const GridFunction& f, const ToeplitzOptions& opts)
{
    if (g.size() != f.values.size())
        fail(ErrorCode::InvalidArgument, "symbol samples do not match the grid");
    ToeplitzResult res;
    res.input_plus_score = analyticity_score(f, HalfPlane::upper, opts.spectral);
    if (res.input_plus_score < opts.plus_threshold) {
        if (opts.strict)
            fail(ErrorCode::NotPlusFunction, "input is not in the discrete H+ subspace");
        res.not_plus_warning = true;
    }
    GridFunction prod = f;
    for (std::size_t j = 0; j < g.size(); ++j)
        prod.values[j] *= g[j];
    res.value = riesz_project(prod, HalfPlane::upper, opts.spectral);
    return res;
}

ToeplitzResult toeplitz_apply(const Symbol& g, const GridFunction& f, const ToeplitzOptions& opts)
{
    auto s = sample_symbol(g, f.grid);
    return toeplitz_apply(s, f, opts);
}

Eigen::MatrixXcd toeplitz_matrix(std::span<const cplx> g, const Grid& grid, const SpectralOptions& opts)
{
    const bool ok = grid.kind == GridKind::cayley_fullline ||
                    (grid.kind == GridKind::uniform_fullline && opts.realization == Realization::periodic &&
                     opts.zero_mode == ZeroModePolicy::shifted);
    if (!ok)
        fail(ErrorCode::WrongGridKind, "Toeplitz matrix needs a Cayley grid or the shifted periodic model");
    const std::size_t n = grid.points, h = n / 2;
    if (g.size() != n)
        fail(ErrorCode::InvalidArgument, "symbol samples do not match the grid");
    std::vector<cplx> G(g.begin(), g.end());
    fft_inplace(G, -1);
    Eigen::MatrixXcd T(h, h);
    for (std::size_t m = 0; m < h; ++m)
        for (std::size_t k = 0; k < h; ++k)
            T(m, k) = G[(m + n - k) % n] / static_cast<double>(n);
    return T;
}

PairedIdentityReport paired_identity_check(const Eigen::MatrixXcd& A, const Eigen::MatrixXcd& P)
{
    if (A.rows() != A.cols() || P.rows() != P.cols() || A.rows() != P.rows())
        fail(ErrorCode::InvalidArgument, "A and P must be square of equal size");
    const double pn = P.norm();
    if ((P * P - P).norm() > 1e-12 * std::max(1.0, pn))
        fail(ErrorCode::NotIdempotent, "P is not idempotent");
    using M = Eigen::MatrixXcd;
    const M Id = M::Identity(A.rows(), A.cols());
    const M Q = Id - P;
    const M PAP_Q = P * A * P + Q;
    const M QAP = Q * A * P;
    const M PAQ = P * A * Q;

    PairedIdentityReport r;
    r.ap_q = (A * P + Q - PAP_Q * (Id + QAP)).norm();
    r.pa_q = (P * A + Q - (Id + PAQ) * PAP_Q).norm();
    r.inverse_qap = ((Id + QAP) * (Id - QAP) - Id).norm();
    r.inverse_paq = ((Id + PAQ) * (Id - PAQ) - Id).norm();
    r.max_deviation = std::max({r.ap_q, r.pa_q, r.inverse_qap, r.inverse_paq});
    return r;
}

cplx cayley_value_at_infinity(const GridFunction& f)
{
    if (f.grid.kind != GridKind::cayley_fullline)
        fail(ErrorCode::WrongGridKind, "value at infinity needs a Cayley grid");
    const std::size_t n = f.grid.points;
    std::vector<cplx> c = f.values;
    fft_inplace(c, -1);
    // f(theta = 0) from coefficients of exp(i k theta_j), theta_j = 2 pi (j + 1/2) / N
    cplx s{};
    for (std::size_t k = 0; k < n; ++k) {
        double kk = k < n / 2 ? static_cast<double>(k) : static_cast<double>(k) - static_cast<double>(n);
        double a = std::numbers::pi * kk / static_cast<double>(n);
        // the Nyquist bin is split evenly between k = -N/2 and k = N/2
        s += k == n / 2 ? c[k] * std::cos(a) : c[k] * std::polar(1.0, -a);
    }
    return s / static_cast<double>(n);
}

namespace {

Eigen::VectorXcd plus_part(const std::vector<cplx>& c)
{
    Eigen::VectorXcd v(c.size() / 2);
    for (std::size_t k = 0; k < c.size() / 2; ++k)
        v[k] = c[k];
    return v;
}

GridFunction from_plus(const Grid& grid, const Eigen::VectorXcd& v)
{
    std::vector<cplx> c(grid.points);
    for (Eigen::Index k = 0; k < v.size(); ++k)
        c[k] = v[k];
    return from_spectral_coefficients(grid, std::move(c));
}

double multiplier_score(const GridFunction& f, HalfPlane side)
{
    GridFunction m = f;
    for (std::size_t j = 0; j < m.values.size(); ++j)
        m.values[j] /= cplx{f.grid.node(j), side == HalfPlane::upper ? 1.0 : -1.0};
    return analyticity_score(m, side);
}

cplx symbol_at_plus_infinity(const Symbol& g)
{
    if (auto r = std::get_if<RationalSymbol>(&g))
        return r->eval_at_infinity();
    return std::get<PCSymbol>(g).limit_plus_infinity();
}

} // namespace

WHFactorisation numeric_canonical_factorise(const Symbol& g, const Grid& grid, const NumericFactorOptions& opts)
{
    if (grid.kind != GridKind::cayley_fullline)
        fail(ErrorCode::WrongGridKind, "numeric factorisation needs a Cayley grid");
    grid.validate();
    const FredholmReport rep = fredholm_report(g, 2.0);
    if (rep.invertibility != Invertibility::two_sided)
        fail(ErrorCode::NotCanonical, "T_g is not invertible in H2+ (index k != 0 or not Fredholm)");

    const std::vector<cplx> gs = sample_symbol(g, grid);
    std::vector<cplx> gi(gs.size());
    for (std::size_t j = 0; j < gs.size(); ++j)
        gi[j] = 1.0 / gs[j];

    GridFunction rhs_f = GridFunction::sample(grid, [](double x) { return 1.0 / cplx{x, 1.0}; });
    const Eigen::VectorXcd b = plus_part(spectral_coefficients(rhs_f));

    const Eigen::MatrixXcd T = toeplitz_matrix(gs, grid);
    const Eigen::MatrixXcd Ti = toeplitz_matrix(gi, grid);
    Eigen::PartialPivLU<Eigen::MatrixXcd> lu(T), lui(Ti);
    const Eigen::VectorXcd u = lu.solve(b);
    const Eigen::VectorXcd v = lui.solve(b);
    const double res = std::max((T * u - b).norm(), (Ti * v - b).norm()) / b.norm();
    if (!(res <= opts.solve_tolerance) || !u.allFinite() || !v.allFinite())
        fail(ErrorCode::IllConditioned, "Toeplitz solve residual " + std::to_string(res));

    const GridFunction uf = from_plus(grid, u), vf = from_plus(grid, v);
    GridFunction gp{grid, std::vector<cplx>(grid.points)};
    GridFunction gp_inv = gp, gm = gp;
    NumericDiagnostics diag;
    diag.solve_residual = res;
    for (std::size_t j = 0; j < grid.points; ++j) {
        cplx lam{grid.node(j), 1.0};
        gp.values[j] = lam * vf.values[j];
        gp_inv.values[j] = lam * uf.values[j];
        diag.identity_residual = std::max(diag.identity_residual, std::abs(gp.values[j] * gp_inv.values[j] - 1.0));
    }

    const cplx c = symbol_at_plus_infinity(g) / cayley_value_at_infinity(gp);
    for (std::size_t j = 0; j < grid.points; ++j) {
        gp.values[j] *= c;
        gm.values[j] = gs[j] / gp.values[j];
    }
    GridFunction gm_inv = gm;
    for (cplx& x : gm_inv.values)
        x = 1.0 / x;
    GridFunction gp_inv_n = gp;
    for (cplx& x : gp_inv_n.values)
        x = 1.0 / x;
    diag.score_plus = multiplier_score(gp, HalfPlane::upper);
    diag.score_plus_inv = multiplier_score(gp_inv_n, HalfPlane::upper);
    diag.score_minus = multiplier_score(gm, HalfPlane::lower);
    diag.score_minus_inv = multiplier_score(gm_inv, HalfPlane::lower);

    WHFactorisation f;
    f.g_minus = Factor{std::move(gm), HalfPlane::lower};
    f.g_plus = Factor{std::move(gp), HalfPlane::upper};
    f.index_k = 0;
    f.provenance = Provenance::numeric_grid;
    f.normalization = {"g_minus(inf)=1", c};
    f.numeric = diag;
    return f;
}

GridFunction execute_recipe(const InverseRecipe& recipe, const GridFunction& f, const SpectralOptions& opts)
{
    GridFunction v = f;
    for (const RecipeAction& a : recipe.actions) {
        if (auto m = std::get_if<MultiplyAction>(&a)) {
            auto s = m->factor.sample(v.grid);
            for (std::size_t j = 0; j < s.size(); ++j)
                v.values[j] *= s[j];
        } else if (std::holds_alternative<ProjectPlusAction>(a)) {
            v = riesz_project(v, HalfPlane::upper, opts);
        } else {
            const RationalSymbol rm = RationalSymbol::r_power(std::get<ToeplitzRPowerAction>(a).m);
            for (std::size_t j = 0; j < v.values.size(); ++j)
                v.values[j] *= rm.eval_real(v.grid.node(j));
            v = riesz_project(v, HalfPlane::upper, opts);
        }
    }
    return v;
}

} // namespace whf
