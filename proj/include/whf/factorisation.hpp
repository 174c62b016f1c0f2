#pragma once

#include "whf/grid.hpp"
#include "whf/spectral.hpp"
#include "whf/symbol_io.hpp"

#include <optional>
#include <span>
#include <string>
#include <variant>
#include <vector>

namespace whf {

enum class Provenance { exact_rational, jump_power, numeric_grid };
std::string_view to_string(Provenance p);

// (z - centre)^exponent with arg(z - centre) taken in (arg_floor, arg_floor + 2 pi].
struct BranchPower {
    cplx centre;
    cplx exponent;
    double arg_floor = 0.0;
};

cplx eval_branch(const BranchPower& b, cplx z);

using FactorBody = std::variant<RationalSymbol, BranchPower, GridFunction>;

struct Factor {
    FactorBody body;
    HalfPlane analytic_in = HalfPlane::upper;  // g_- is analytic in the lower half-plane

    Factor reciprocal() const;
    bool is_identity() const;
    /// Values at the given real points. Grid factors accept only their own nodes.
    std::vector<cplx> sample(std::span<const double> x) const;
    std::vector<cplx> sample(const Grid& grid) const;
};

struct Normalization {
    std::string rule;
    cplx constant{1.0};
};

struct NumericDiagnostics {
    double identity_residual = 0.0;   // max |(lambda_+ u_+)(lambda_+ v_+) - 1|
    double solve_residual = 0.0;
    double score_plus = 0.0, score_plus_inv = 0.0;
    double score_minus = 0.0, score_minus_inv = 0.0;
};

// g = g_minus * r^index_k * g_plus
struct WHFactorisation {
    Factor g_minus;
    int index_k = 0;
    Factor g_plus;
    Provenance provenance = Provenance::exact_rational;
    Normalization normalization;
    std::optional<NumericDiagnostics> numeric;
};

WHFactorisation wh_factor_rational(const RationalSymbol& g);

/// Canonical factorisation of exp(alpha log r(x)) in L_p.
WHFactorisation factor_jump_symbol(cplx alpha, double p);

struct VerificationReport {
    double max_relative_deviation = 0.0;
    bool minus_ok = false;
    bool plus_ok = false;
    std::string minus_detail;
    std::string plus_detail;
};

VerificationReport verify_factorisation(const WHFactorisation& f, const Symbol& g, std::span<const double> points);

enum class RecipeSide { two_sided, left, right };
std::string_view to_string(RecipeSide s);

struct MultiplyAction {
    Factor factor;   // multiply by factor (already inverted where needed)
    std::string label;
};
struct ProjectPlusAction {};
struct ToeplitzRPowerAction {
    int m = 0;       // apply T_{r^m}
};

using RecipeAction = std::variant<MultiplyAction, ProjectPlusAction, ToeplitzRPowerAction>;

// Actions are listed in application order: actions.front() acts first.
struct InverseRecipe {
    RecipeSide side = RecipeSide::two_sided;
    std::vector<RecipeAction> actions;

    std::string describe() const;
};

InverseRecipe inverse_recipe(const WHFactorisation& f);

} // namespace whf
