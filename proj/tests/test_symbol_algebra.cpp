#include "oracles.hpp"

#include "whf/error.hpp"
#include "whf/symbol_io.hpp"

#include <doctest.h>

#include <algorithm>

using namespace whf;

TEST_SUITE("symbol_algebra") {

TEST_CASE("polynomial normalisation and degree")
{
    ComplexPolynomial p({1.0, 2.0, 0.0, 0.0});
    CHECK(p.degree() == 1);
    CHECK(ComplexPolynomial({0.0, 0.0}).is_zero());
    CHECK(ComplexPolynomial({0.0}).degree() == -1);
}

TEST_CASE("quadratic roots agree with the quadratic formula")
{
    std::mt19937_64 rng(7);
    std::normal_distribution<double> n(0.0, 1.0);
    for (int trial = 0; trial < 50; ++trial) {
        cplx a{n(rng), n(rng)}, b{n(rng), n(rng)}, c{n(rng), n(rng)};
        auto [r1, r2] = oracle::quadratic_roots(a, b, c);
        auto roots = ComplexPolynomial({c, b, a}).roots();
        CHECK(oracle::same_multiset(roots, {r1, r2}, 1e-10));
    }
}

TEST_CASE("from_roots then roots recovers a multiset")
{
    std::vector<cplx> r{{1.0, 2.0}, {1.0, 2.0}, {-0.5, -1.0}, {3.0, 0.25}};
    auto p = ComplexPolynomial::from_roots(r, cplx{2.0, 1.0});
    CHECK(p.leading() == cplx{2.0, 1.0});
    CHECK(oracle::same_multiset(p.roots(), r, 1e-6));
}

TEST_CASE("evaluation examples")
{
    CHECK(std::abs(RationalSymbol::r_power(1).eval_real(0.0) - cplx{-1.0}) < 1e-15);
    RationalSymbol g({-2.0 * I, -2.0 * I}, {I, -I}, 1.0);
    CHECK(std::abs(g.eval_at_infinity() - cplx{1.0}) < 1e-15);
    CHECK(std::abs(g.eval_real(kInfinity) - cplx{1.0}) < 1e-15);
    CHECK(std::abs(eval_symbol(PCSymbol::sign_symbol(2.0), 3.0) - cplx{-3.0}) < 1e-15);
}

TEST_CASE("evaluation errors")
{
    RationalSymbol g({}, {0.0}, 1.0);
    CHECK_THROWS_AS(g.eval(0.0), Error);
    RationalSymbol h({0.0, 1.0}, {I}, 1.0);
    CHECK_THROWS_AS(h.eval_at_infinity(), Error);
    try {
        PCSymbol::sign_symbol(2.0).eval(0.0);
        FAIL("expected JumpWithoutSide");
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::JumpWithoutSide);
    }
}

TEST_CASE("common factors cancel on construction")
{
    RationalSymbol g({I, 2.0}, {I, -I}, 1.0);
    CHECK(g.zeros().size() == 1);
    CHECK(g.poles().size() == 1);
}

TEST_CASE("classify_roots examples")
{
    auto c = classify_roots(RationalSymbol({-2.0 * I, -2.0 * I}, {I, -I}, 1.0));
    CHECK(c.lower_zeros.size() == 2);
    CHECK(c.upper_zeros.empty());
    CHECK(c.upper_poles.size() == 1);
    CHECK(c.lower_poles.size() == 1);

    auto r = classify_roots(RationalSymbol::r_power(1));
    CHECK(r.upper_zeros.size() == 1);
    CHECK(r.lower_poles.size() == 1);

    auto q = classify_roots(RationalSymbol({2.0 * I, -2.0 * I}, {I, -I}, 1.0));
    CHECK(q.upper_zeros.size() == 1);
    CHECK(q.lower_zeros.size() == 1);
    CHECK(q.real_zeros.empty());
}

TEST_CASE("winding index examples")
{
    CHECK(winding_index(RationalSymbol({-2.0 * I, -2.0 * I}, {I, -I}, 1.0)) == -1);
    CHECK(winding_index(RationalSymbol::r_power(1)) == 1);
    CHECK(winding_index(RationalSymbol({2.0 * I, -2.0 * I}, {I, -I}, 1.0)) == 0);
    for (int k = -5; k <= 5; ++k)
        CHECK(winding_index(RationalSymbol::r_power(k)) == k);
    CHECK_THROWS_AS(winding_index(RationalSymbol({0.0}, {I}, 1.0)), Error);
}

TEST_CASE("ellipticity")
{
    CHECK(is_elliptic(RationalSymbol({-2.0 * I, -2.0 * I}, {I, -I}, 1.0)).elliptic);
    CHECK_FALSE(is_elliptic(RationalSymbol({0.0}, {-I}, 1.0)).elliptic);
    auto e = is_elliptic(RationalSymbol({2.0 * I, -2.0 * I}, {I, -I}, 1.0));
    CHECK(e.elliptic);
    CHECK(e.min_modulus == doctest::Approx(1.0).epsilon(1e-6));   // (x^2+4)/(x^2+1) -> 1 at infinity
}

TEST_CASE("one-sided limits")
{
    auto s = PCSymbol::from_base(SignForm{1.0, 0.0});
    auto [l, r] = one_sided_limits(s, 0.0);
    CHECK(std::abs(l - cplx{-1.0}) < 1e-15);
    CHECK(std::abs(r - cplx{1.0}) < 1e-15);

    auto p = PCSymbol::power_at_infinity(0.25);
    auto [li, ri] = one_sided_limits(p, kInfinity);
    // left = g(+inf) = e^{2 pi i / 4}, right = g(-inf) = 1
    CHECK(std::abs(li - I) < 1e-12);
    CHECK(std::abs(ri - cplx{1.0}) < 1e-12);

    auto c = PCSymbol::from_base(RationalSymbol::r_power(1));
    auto [a, b] = one_sided_limits(c, 0.5);
    CHECK(a == b);
    CHECK(std::abs(a - RationalSymbol::r_power(1).eval_real(0.5)) < 1e-15);
}

TEST_CASE("explicit jumps must match the base")
{
    CHECK_THROWS_AS(PCSymbol(SignForm{1.0, 0.0}, {}), Error);
    CHECK_THROWS_AS(PCSymbol(SignForm{1.0, 0.0}, {JumpPoint{0.0, -1.0, 1.0}}), Error);   // misses infinity
    CHECK_NOTHROW(PCSymbol(SignForm{1.0, 0.0}, {JumpPoint{0.0, -1.0, 1.0}, JumpPoint{kInfinity, 1.0, -1.0}}));
}

TEST_CASE("property: R(x) (1/R)(x) = 1 at random points")
{
    std::mt19937_64 rng(11);
    std::uniform_real_distribution<double> xs(-50.0, 50.0);
    std::uniform_int_distribution<int> deg(1, 5);
    for (int trial = 0; trial < 20; ++trial) {
        std::vector<cplx> z, p;
        int d = deg(rng);
        for (int j = 0; j < d; ++j) {
            z.push_back(oracle::off_axis(rng, j % 2 == 0));
            p.push_back(oracle::off_axis(rng, j % 3 == 0));
        }
        RationalSymbol R(z, p, cplx{1.5, -0.5});
        RationalSymbol Ri = R.reciprocal();
        for (int k = 0; k < 100; ++k) {
            double x = xs(rng);
            CHECK(std::abs(R.eval_real(x) * Ri.eval_real(x) - 1.0) < 1e-12);
        }
    }
}

TEST_CASE("property: index is additive and matches the argument variation")
{
    std::mt19937_64 rng(23);
    std::uniform_int_distribution<int> deg(1, 6), coin(0, 1);
    auto random_elliptic = [&] {
        std::vector<cplx> z, p;
        int d = deg(rng);
        for (int j = 0; j < d; ++j) {
            z.push_back(oracle::off_axis(rng, coin(rng)));
            p.push_back(oracle::off_axis(rng, coin(rng)));
        }
        return RationalSymbol(z, p, cplx{0.7, 0.3});
    };
    for (int trial = 0; trial < 50; ++trial) {
        RationalSymbol R = random_elliptic(), Q = random_elliptic();
        int k = winding_index(R);
        CHECK(k == oracle::argument_variation([&](double x) { return R.eval_real(x); }));
        CHECK(winding_index(R * Q) == k + winding_index(Q));
        CHECK(winding_index(R * RationalSymbol::constant(cplx{-3.0, 2.0})) == k);
    }
}

TEST_CASE("property: classification invariant under scaling")
{
    RationalSymbol g({cplx{1, 2}, cplx{0.5, -1}, 3.0}, {cplx{-1, 1}, cplx{2, -2}, cplx{0, 4}}, 1.0);
    auto a = classify_roots(g), b = classify_roots(g * RationalSymbol::constant(cplx{0, -7}));
    CHECK(a.upper_zeros == b.upper_zeros);
    CHECK(a.lower_zeros == b.lower_zeros);
    CHECK(a.real_zeros == b.real_zeros);
    CHECK(a.upper_poles == b.upper_poles);
    CHECK(a.lower_poles == b.lower_poles);
}

TEST_CASE("symbol files round-trip bit-exactly")
{
    std::vector<Symbol> cases{
        RationalSymbol({cplx{0.1, 2.0 / 3.0}, cplx{-1e-17, -2.5}}, {cplx{1.0 / 7.0, 1.0}, -I}, cplx{3.0, -0.125}),
        PCSymbol::sign_symbol(cplx{0.3, 1.1}),
        PCSymbol::tanh_symbol(2.0),
        PCSymbol::power_at_infinity(cplx{0.25, -0.1}),
        PCSymbol::from_base(SampledTable{{-1.0, 0.0, 2.5}, {1.0, cplx{2.0, 0.1}, 3.0}}),
    };
    for (const Symbol& s : cases) {
        std::string text = serialize_symbol(s);
        Symbol back = parse_symbol(text);
        CHECK(serialize_symbol(back) == text);
        for (double x : {-2.0, -0.3, 0.7, 5.0})
            CHECK(eval_symbol(back, x) == eval_symbol(s, x));
    }
}

TEST_CASE("symbol parse errors")
{
    CHECK_THROWS_AS(parse_symbol("kind = banana\n"), Error);
    CHECK_THROWS_AS(parse_symbol("kind = rational\nzeros = 1,x\n"), Error);
    CHECK_THROWS_AS(load_symbol("r^1.5"), Error);
}

}
