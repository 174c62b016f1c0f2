#include "whf/reports.hpp"

#include "whf/io.hpp"

namespace whf {

namespace {

Json opt(const std::optional<int>& v)
{
    return v ? Json(*v) : Json(nullptr);
}

Json number(double v)
{
    // JSON has no infinities; keep them readable as strings
    if (!std::isfinite(v))
        return format_double(v);
    return v;
}

Json roots(const std::vector<cplx>& r)
{
    Json a = Json::array();
    for (cplx z : r)
        a.push_back(to_json(z));
    return a;
}

} // namespace

Json to_json(cplx z)
{
    return Json::array({number(z.real()), number(z.imag())});
}

Json to_json(const FredholmReport& r)
{
    Json j;
    j["p"] = number(r.p);
    j["is_closed_range"] = r.is_closed_range;
    j["is_fredholm"] = r.is_fredholm;
    j["winding"] = opt(r.winding);
    j["index"] = opt(r.index);
    j["dim_ker"] = opt(r.dim_ker);
    j["dim_coker"] = opt(r.dim_coker);
    j["invertibility"] = std::string(to_string(r.invertibility));
    j["min_curve_modulus"] = number(r.min_curve_modulus);
    return j;
}

Json to_json(const Factor& f)
{
    Json j;
    j["analytic_in"] = f.analytic_in == HalfPlane::upper ? "upper" : "lower";
    if (const auto* r = std::get_if<RationalSymbol>(&f.body)) {
        j["form"] = "rational";
        j["scale"] = to_json(r->scale());
        j["zeros"] = roots(r->zeros());
        j["poles"] = roots(r->poles());
    } else if (const auto* b = std::get_if<BranchPower>(&f.body)) {
        j["form"] = "branch-power";
        j["centre"] = to_json(b->centre);
        j["exponent"] = to_json(b->exponent);
        j["arg_floor"] = number(b->arg_floor);
    } else {
        const auto& g = std::get<GridFunction>(f.body);
        j["form"] = "grid";
        j["grid"] = std::string(to_string(g.grid.kind));
        j["points"] = g.grid.points;
    }
    return j;
}

Json to_json(const WHFactorisation& f)
{
    Json j;
    j["provenance"] = std::string(to_string(f.provenance));
    j["index_k"] = f.index_k;
    j["g_minus"] = to_json(f.g_minus);
    j["g_plus"] = to_json(f.g_plus);
    j["normalization"] = {{"rule", f.normalization.rule}, {"constant", to_json(f.normalization.constant)}};
    if (f.numeric) {
        const NumericDiagnostics& d = *f.numeric;
        j["numeric"] = {{"identity_residual", d.identity_residual},
                        {"solve_residual", d.solve_residual},
                        {"score_plus", d.score_plus},
                        {"score_plus_inv", d.score_plus_inv},
                        {"score_minus", d.score_minus},
                        {"score_minus_inv", d.score_minus_inv}};
    }
    return j;
}

Json to_json(const VerificationReport& v)
{
    return {{"max_relative_deviation", number(v.max_relative_deviation)},
            {"minus_ok", v.minus_ok},
            {"plus_ok", v.plus_ok},
            {"minus_detail", v.minus_detail},
            {"plus_detail", v.plus_detail}};
}

Json to_json(const InverseRecipe& r)
{
    return {{"side", std::string(to_string(r.side))}, {"actions", r.describe()}};
}

Json to_json(const JumpExponents& e)
{
    Json fin = Json::array();
    for (const JumpExponent& j : e.finite)
        fin.push_back({{"location", number(j.location)}, {"alpha", to_json(j.alpha)}});
    return {{"alpha_infinity", to_json(e.alpha_infinity)}, {"finite", fin}, {"branch_choice", e.branch_choice}};
}

Json to_json(const HalfLineSolution& s)
{
    Json res;
    for (int k = 0; k < 3; ++k)
        res[std::string(to_string(static_cast<FormulaVariant>(k)))] = number(s.variant_residuals[k]);
    return {{"alpha", to_json(s.alpha)},
            {"variant", std::string(to_string(s.variant))},
            {"residual", number(s.residual)},
            {"variant_residuals", res},
            {"sign_anomaly", s.sign_anomaly},
            {"adjoint_path", s.adjoint_path}};
}

Json to_json(const IntervalReductionReport& r)
{
    return {{"symbol_max_error", number(r.symbol_max_error)},
            {"reduction_max_deviation", number(r.reduction_max_deviation)},
            {"isometry_ratio", number(r.isometry_ratio)}};
}

std::string dump(const Json& j)
{
    return j.dump(2) + "\n";
}

} // namespace whf
