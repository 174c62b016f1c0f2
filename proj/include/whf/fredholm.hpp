#pragma once

#include "whf/symbol_io.hpp"

#include <optional>
#include <string>
#include <vector>

namespace whf {

struct CurveOptions {
    std::size_t x_samples = 4096;
    std::size_t w_samples = 512;   // per arc, w = tan(theta)
};

struct CurveSample {
    double x = 0.0;      // location on the extended line (+inf for the arc at infinity)
    double w = 0.0;      // arc parameter, 0 off arcs
    bool on_arc = false;
    cplx value;
};

/// Point of the arc joining left = g(x-) to right = g(x+), w in [-inf, +inf].
/// w = +inf gives `left`, w = -inf gives `right`.
cplx arc_point(cplx left, cplx right, double p, double w);

/// Closed curve traced by g_p: the line from -inf to +inf with arcs inserted
/// at each jump, closed by the arc at infinity.
std::vector<CurveSample> gp_curve(const PCSymbol& g, double p, const CurveOptions& opts = {});

struct PRegularity {
    bool regular = false;
    bool exact_regular = false;    // closed-form arc / zero test
    double min_modulus = 0.0;      // over the sampled curve
    double max_modulus = 0.0;
    std::string reason;
};

/// True iff the arc joining left and right passes through the origin.
bool arc_through_origin(cplx left, cplx right, double p);

PRegularity p_regular(const PCSymbol& g, double p, const CurveOptions& opts = {});

/// Winding number of a sampled closed curve. Throws CurveThroughOrigin when
/// some sample falls below threshold.
int curve_winding(const std::vector<CurveSample>& curve, double threshold);

struct JumpExponent {
    double location = 0.0;
    cplx alpha;
};

struct JumpExponents {
    cplx alpha_infinity;                 // 0 when g is continuous at infinity
    std::vector<JumpExponent> finite;
    std::string branch_choice;
};

/// alpha_j = log(g(c-)/g(c+)) / (2 pi i), alpha_0 = log(g(+inf)/g(-inf)) / (2 pi i),
/// real parts in (centre - 1/2, centre + 1/2].
JumpExponents jump_exponents(const PCSymbol& g, double centre = 0.0);

/// Fredholm test through the exponent windows -1/p < Re a_0 < 1 - 1/p and
/// 1/p - 1 < Re a_j < 1/p (with g_0 invertible).
bool window_test(const PCSymbol& g, double p);

enum class Invertibility { two_sided, left_only, right_only, not_invertible, not_fredholm };
std::string_view to_string(Invertibility v);

struct FredholmReport {
    double p = 2.0;
    bool is_closed_range = false;
    bool is_fredholm = false;
    std::optional<int> winding;        // k = ind g_p
    std::optional<int> index;          // -k
    std::optional<int> dim_ker;
    std::optional<int> dim_coker;
    Invertibility invertibility = Invertibility::not_fredholm;
    double min_curve_modulus = 0.0;
};

FredholmReport fredholm_report(const Symbol& g, double p, const CurveOptions& opts = {});

struct DualityResult {
    bool agree = false;
    double p_prime = 2.0;
    Invertibility at_p = Invertibility::not_fredholm;
    Invertibility reciprocal_at_p_prime = Invertibility::not_fredholm;
};

/// T_g invertible in H_p+ iff T_{1/g} invertible in H_{p'}+.
DualityResult duality_check(const Symbol& g, double p, const CurveOptions& opts = {});

std::string curve_csv(const std::vector<CurveSample>& curve);

} // namespace whf
