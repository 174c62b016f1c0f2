#include "oracles.hpp"

#include "whf/error.hpp"
#include "whf/fredholm.hpp"

#include <doctest.h>

using namespace whf;

namespace {

void check_report_invariants(const FredholmReport& r)
{
    if (r.is_fredholm) {
        REQUIRE(r.index.has_value());
        REQUIRE(r.dim_ker.has_value());
        REQUIRE(r.dim_coker.has_value());
        CHECK(*r.index == *r.dim_ker - *r.dim_coker);
        CHECK(std::min(*r.dim_ker, *r.dim_coker) == 0);
        Invertibility expect = *r.index == 0 ? Invertibility::two_sided
                               : *r.index < 0 ? Invertibility::left_only
                                              : Invertibility::right_only;
        CHECK(r.invertibility == expect);
    } else {
        CHECK(r.invertibility == Invertibility::not_fredholm);
    }
}

double winding_of_curve(const std::vector<CurveSample>& c)
{
    double total = 0.0;
    for (std::size_t j = 1; j < c.size(); ++j)
        total += std::arg(c[j].value / c[j - 1].value);
    total += std::arg(c.front().value / c.back().value);
    return total / (2 * std::numbers::pi);
}

} // namespace

TEST_SUITE("fredholm") {

TEST_CASE("continuous symbols trace g itself")
{
    RationalSymbol r3 = RationalSymbol::r_power(3);
    auto curve = gp_curve(PCSymbol::from_base(r3), 2.0);
    for (const CurveSample& s : curve)
        if (!s.on_arc && std::isfinite(s.x))
            CHECK(std::abs(s.value - r3.eval_real(s.x)) < 1e-12);
    CHECK(curve_winding(curve, 1e-8) == 3);
    CHECK(std::lround(winding_of_curve(curve)) == 3);
}

TEST_CASE("sign symbol arcs are segments at p = 2")
{
    auto curve = gp_curve(PCSymbol::sign_symbol(2.0), 2.0);
    int on_arc = 0;
    for (const CurveSample& s : curve) {
        if (!s.on_arc)
            continue;
        ++on_arc;
        CHECK(std::abs(s.value.imag()) < 1e-12);
        CHECK(s.value.real() <= -1.0 + 1e-12);
        CHECK(s.value.real() >= -3.0 - 1e-12);
    }
    CHECK(on_arc > 0);
    CHECK(curve_winding(curve, 1e-8) == 0);
}

TEST_CASE("arc endpoints and midpoint")
{
    cplx l{1.0, 2.0}, r{-0.5, 0.3};
    for (double p : {4.0 / 3.0, 2.0, 4.0}) {
        CHECK(std::abs(arc_point(l, r, p, kInfinity) - l) < 1e-12);
        CHECK(std::abs(arc_point(l, r, p, -kInfinity) - r) < 1e-12);
        CHECK(std::abs(arc_point(l, r, p, 40.0) - l) < 1e-12);
    }
    CHECK(std::abs(arc_point(l, r, 2.0, 0.0) - 0.5 * (l + r)) < 1e-12);
    // at p = 2, coth(pi (i/2 + w)) = tanh(pi w): (l + r)/2 + (l - r)/2 tanh(pi w)
    for (double w : {-1.0, -0.2, 0.3, 2.0})
        CHECK(std::abs(arc_point(l, r, 2.0, w) - (0.5 * (l + r) + 0.5 * (l - r) * std::tanh(std::numbers::pi * w))) < 1e-12);
}

TEST_CASE("p-regularity examples")
{
    CHECK(p_regular(PCSymbol::power_at_infinity(0.25), 2.0).regular);
    CHECK_FALSE(p_regular(PCSymbol::power_at_infinity(0.5), 2.0).regular);
    CHECK_FALSE(p_regular(PCSymbol::sign_symbol(0.5), 2.0).regular);
    CHECK(p_regular(PCSymbol::sign_symbol(2.0), 2.0).regular);
}

TEST_CASE("winding of a curve through the origin throws")
{
    std::vector<CurveSample> curve{{0.0, 0.0, false, 1.0}, {0.0, 0.0, true, 0.0}, {0.0, 0.0, false, -1.0}};
    try {
        curve_winding(curve, 1e-8);
        FAIL("expected CurveThroughOrigin");
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::CurveThroughOrigin);
    }
}

TEST_CASE("jump exponents")
{
    // g(-inf) = 1, g(+inf) = e^{i pi/2}: exp(2 pi i alpha_0) = g(+inf)/g(-inf)
    JumpExponents e = jump_exponents(PCSymbol::power_at_infinity(0.25));
    CHECK(std::abs(e.alpha_infinity - cplx{0.25}) < 1e-12);
    CHECK(e.finite.empty());
    auto g = PCSymbol::power_at_infinity(0.25);
    CHECK(std::abs(std::exp(2.0 * std::numbers::pi * I * e.alpha_infinity) -
                   g.limit_plus_infinity() / g.limit_minus_infinity()) < 1e-12);

    JumpExponents c = jump_exponents(PCSymbol::from_base(RationalSymbol::r_power(1)));
    CHECK(c.alpha_infinity == cplx{});
    CHECK(c.finite.empty());

    JumpExponents s = jump_exponents(PCSymbol::from_base(SignForm{1.0, 0.0}));
    REQUIRE(s.finite.size() == 1);
    CHECK(std::abs(s.finite[0].alpha - cplx{0.5}) < 1e-12);

    CHECK_THROWS_AS(jump_exponents(PCSymbol::from_base(SignForm{1.0, 1.0})), Error);
}

TEST_CASE("report examples")
{
    FredholmReport r2 = fredholm_report(RationalSymbol::r_power(2), 2.0);
    CHECK(r2.is_fredholm);
    CHECK(r2.index == -2);
    CHECK(r2.dim_ker == 0);
    CHECK(r2.dim_coker == 2);
    CHECK(r2.invertibility == Invertibility::left_only);

    FredholmReport s = fredholm_report(PCSymbol::sign_symbol(2.0), 2.0);
    CHECK(s.is_fredholm);
    CHECK(s.index == 0);
    CHECK(s.invertibility == Invertibility::two_sided);

    FredholmReport h = fredholm_report(PCSymbol::power_at_infinity(0.5), 2.0);
    CHECK_FALSE(h.is_fredholm);
    CHECK_FALSE(h.is_closed_range);
    CHECK(h.invertibility == Invertibility::not_fredholm);
}

TEST_CASE("duality examples")
{
    CHECK(duality_check(RationalSymbol({2.0 * I, -2.0 * I}, {I, -I}, 1.0), 2.0).agree);
    DualityResult r = duality_check(RationalSymbol::r_power(1), 2.0);
    CHECK(r.agree);
    CHECK(r.at_p != Invertibility::two_sided);
    CHECK(duality_check(PCSymbol::sign_symbol(2.0), 2.0).agree);
    CHECK(duality_check(PCSymbol::sign_symbol(2.0), 4.0).p_prime == doctest::Approx(4.0 / 3.0));
}

TEST_CASE("property: report invariants and p-independence for continuous symbols")
{
    std::mt19937_64 rng(3);
    std::uniform_int_distribution<int> coin(0, 1);
    for (int trial = 0; trial < 20; ++trial) {
        std::vector<cplx> z, p;
        for (int j = 0; j < 1 + trial % 4; ++j) {
            z.push_back(oracle::off_axis(rng, coin(rng)));
            p.push_back(oracle::off_axis(rng, coin(rng)));
        }
        RationalSymbol R(z, p, 1.0);
        Symbol asPc = PCSymbol::from_base(R);
        FredholmReport ref = fredholm_report(R, 2.0);
        check_report_invariants(ref);
        for (double pp : {4.0 / 3.0, 2.0, 4.0}) {
            FredholmReport a = fredholm_report(R, pp), b = fredholm_report(asPc, pp);
            CHECK(a.index == ref.index);
            CHECK(b.index == ref.index);
            CHECK(b.invertibility == ref.invertibility);
        }
        CHECK(ref.winding == oracle::argument_variation([&](double x) { return R.eval_real(x); }));
    }
}

TEST_CASE("property: window test agrees with the curve")
{
    for (double a : {0.0, 0.1, -0.1, 0.25, -0.25, 0.49, -0.49, 0.5, -0.5}) {
        PCSymbol g = PCSymbol::power_at_infinity(a);
        for (double p : {4.0 / 3.0, 2.0, 4.0}) {
            FredholmReport r = fredholm_report(g, p);
            check_report_invariants(r);
            CHECK_MESSAGE(window_test(g, p) == r.is_fredholm, "alpha=" << a << " p=" << p);
        }
    }
}

TEST_CASE("curve CSV")
{
    auto curve = gp_curve(PCSymbol::sign_symbol(2.0), 2.0, CurveOptions{16, 8});
    std::string csv = curve_csv(curve);
    CHECK(csv.rfind("re,im\n", 0) == 0);
    CHECK(std::count(csv.begin(), csv.end(), '\n') == static_cast<long>(curve.size() + 1));
}

}
