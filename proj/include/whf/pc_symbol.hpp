#pragma once

#include "whf/rational_symbol.hpp"

#include <limits>
#include <optional>
#include <utility>
#include <variant>
#include <vector>

namespace whf {

inline constexpr double kInfinity = std::numeric_limits<double>::infinity();

// A jump at a finite point c stores g(c-) and g(c+). A jump at infinity
// (location = +inf) stores left = g(+inf), right = g(-inf).
struct JumpPoint {
    double location = 0.0;
    cplx left;
    cplx right;
};

enum class Side { left, right };

struct SignForm {      // a * sign(x) + b
    cplx a;
    cplx b;
};

struct TanhForm {      // (a * tanh(pi x) + b)^power, power = +-1
    cplx a;
    cplx b;
    int power = 1;
};

struct PowerForm {     // scale * r(x)^alpha, arg r in [arg r(cut), arg r(cut) + 2 pi)
    cplx scale{1.0};
    cplx alpha;
    double cut = kInfinity;
};

struct SampledTable {  // linear interpolation, constant beyond the end nodes
    std::vector<double> x;
    std::vector<cplx> values;
};

using PCBase = std::variant<RationalSymbol, SignForm, TanhForm, PowerForm, SampledTable>;

class PCSymbol {
public:
    /// Validates that `jumps` lists exactly the discontinuities of `base`.
    PCSymbol(PCBase base, std::vector<JumpPoint> jumps);

    static PCSymbol from_base(PCBase base);
    static PCSymbol sign_symbol(cplx lambda);      // -(sign x + lambda)
    static PCSymbol tanh_symbol(cplx lambda);      // tanh(pi x) - lambda
    static PCSymbol power_at_infinity(cplx alpha); // exp(alpha log r(x)), arg in [0, 2 pi)

    const PCBase& base() const { return base_; }
    const std::vector<JumpPoint>& jumps() const { return jumps_; }
    const JumpPoint* jump_at(double location) const;

    cplx eval(double x) const;
    cplx eval(double x, Side side) const;
    cplx limit_plus_infinity() const;
    cplx limit_minus_infinity() const;

    PCSymbol reciprocal() const;

    /// True if g or one of its one-sided limits vanishes somewhere on the
    /// extended line (decided in closed form for every base kind).
    bool closure_vanishes() const;

private:
    PCBase base_;
    std::vector<JumpPoint> jumps_;
};

/// Left/right limits. At +-inf returns (g(+inf), g(-inf)).
std::pair<cplx, cplx> one_sided_limits(const PCSymbol& g, double c);

/// Value of the base away from its discontinuities.
cplx eval_base(const PCBase& base, double x);
std::vector<JumpPoint> intrinsic_jumps(const PCBase& base);

} // namespace whf
