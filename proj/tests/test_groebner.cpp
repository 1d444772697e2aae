#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "regpow/ideal.hpp"

using namespace regpow;

namespace {

RingPtr qxy() { return Ring::make(FieldSpec::rationals(), {"x", "y"}, {}); }

PolyQ P(const std::string& s, RingPtr r) { return parse_poly<Rat>(s, std::move(r)); }

Ideal<Rat> I(RingPtr r, std::initializer_list<const char*> gens) {
    std::vector<PolyQ> gs;
    for (auto* g : gens) gs.push_back(P(g, r));
    return Ideal<Rat>(r, std::move(gs));
}

}  // namespace

TEST_CASE("buchberger: linear generators are already reduced") {
    auto r = qxy();
    auto gb = reduced_gb(I(r, {"x", "y"}));
    REQUIRE(gb.size() == 2);
    CHECK(gb[0] == P("y", r));
    CHECK(gb[1] == P("x", r));
}

TEST_CASE("buchberger: the single S-pair of (x^2+y^2, xy)") {
    auto r = qxy();
    auto gb = reduced_gb(I(r, {"x^2 + y^2", "x*y"}));
    REQUIRE(gb.size() == 3);
    CHECK(gb[0] == P("x*y", r));
    CHECK(gb[1] == P("x^2 + y^2", r));
    CHECK(gb[2] == P("y^3", r));
    CHECK(verify_buchberger(to_rank1(gb)));
}

TEST_CASE("buchberger: budget failures are typed, never wrong answers") {
    auto r = qxy();
    Budget b;
    b.max_degree = 2;
    BudgetScope scope(b);
    CHECK_THROWS_AS(reduced_gb(I(r, {"x^3 + y^3", "x^2*y - y^3"})), BudgetError);
}

TEST_CASE("normal form: membership, units, and the derived example") {
    auto r = qxy();
    auto gb = reduced_gb(I(r, {"x^2 + y^2", "x*y"}));
    CHECK(poly_nf(P("x^2*y", r), gb).is_zero());  // x^2*y = x*(xy)
    CHECK(poly_nf(P("1", r), reduced_gb(I(r, {"x", "y"}))) == P("1", r));
    PolyQ f = P("(x^2+y^2)*(x-2) + x*y*y^5", r);
    CHECK(poly_nf(f, gb).is_zero());
    // idempotence and linearity
    PolyQ g = P("x^3 - y + 7", r);
    PolyQ n = poly_nf(g, gb);
    CHECK(poly_nf(n, gb) == n);
    PolyQ h = P("y^4 + x", r);
    CHECK(poly_nf(g + h, gb) == poly_nf(g, gb) + poly_nf(h, gb));
}

TEST_CASE("eliminate: substitution oracle") {
    // weights (1,1,2) make T1 - x^2 homogeneous; elimination is order-driven anyway
    auto r = Ring::make(FieldSpec::rationals(), {"x", "T0", "T1"}, {1, 1, 2});
    auto E = eliminate(I(r, {"T0 - x", "T1 - x^2"}), {0});
    auto rt = Ring::make(FieldSpec::rationals(), {"T0", "T1"}, {1, 2});
    CHECK(ideal_equal(E, I(rt, {"T1 - T0^2"})));
}

TEST_CASE("eliminate: empty block and full block") {
    auto r = qxy();
    auto J = I(r, {"x^2 + y^2", "x*y"});
    CHECK(ideal_equal(eliminate(J, {}), J));
    auto all = eliminate(J, {0, 1});
    CHECK(all.gens.empty());  // proper homogeneous ideal has no constants
}

TEST_CASE("eliminate: result is contained in the ideal and avoids the block") {
    auto r = Ring::make(FieldSpec::rationals(), {"t", "x", "T"}, {1, 1, 2});
    auto J = I(r, {"T - x^2*t", "t*x - 1"});
    auto E = eliminate(J, {0});
    auto gbJ = reduced_gb(J);
    for (auto& g : E.gens) {
        auto back = map_poly(g, r, var_map_by_name(*E.ring, *r));
        CHECK(poly_nf(back, gbJ).is_zero());
    }
}

TEST_CASE("quotient and saturation") {
    auto r = qxy();
    auto Ixx = I(r, {"x^2", "x*y"});
    auto m = I(r, {"x", "y"});

    // (x^2, xy) : (x, y) = (x)
    CHECK(ideal_equal(quotient(Ixx, m), I(r, {"x"})));
    // (x^2, xy) : (x,y)^infty = (x)
    CHECK(ideal_equal(saturate(Ixx, m), I(r, {"x"})));
    // x^2 lies in the ideal, so saturating at (x) reaches the unit ideal
    CHECK(ideal_equal(saturate(Ixx, I(r, {"x"})), I(r, {"1"})));
    // irrelevant-primary ideals saturate to the unit ideal
    CHECK(ideal_equal(saturate(ideal_power(m, 3), m), I(r, {"1"})));
    // colon with the zero module
    auto zero = Ideal<Rat>(r, {});
    CHECK(quotient(zero, I(r, {"x"})).gens.empty());
    // saturation is increasing and idempotent
    auto s = saturate(Ixx, m);
    CHECK(ideal_contains(s, Ixx));
    CHECK(ideal_equal(saturate(s, m), s));
}

TEST_CASE("ideal powers") {
    auto r = qxy();
    auto m = I(r, {"x", "y"});
    CHECK(ideal_equal(ideal_power(m, 2), I(r, {"x^2", "x*y", "y^2"})));
    CHECK(ideal_power(m, 2).gens.size() == 3);
    CHECK(ideal_equal(ideal_power(m, 0), I(r, {"1"})));

    auto ex = I(r, {"x^5", "x^4*y", "x*y^4", "y^5"});
    CHECK(ideal_equal(ideal_power(ex, 3), ideal_power(m, 15)));
    // all generators of a power of an equigenerated ideal live in one degree
    for (auto& g : ideal_power(ex, 2).gens) {
        CHECK(g.is_homogeneous());
        CHECK(g.degree().value() == 10);
    }
}

TEST_CASE("ideal power minimalization over dense generators") {
    auto r = qxy();
    auto J = I(r, {"x^2 + y^2", "x*y"});
    auto J2 = ideal_power(J, 2);
    CHECK(J2.gens.size() == 3);  // products are linearly independent here
    CHECK(ideal_equal(J2, I(r, {"x^4 + 2*x^2*y^2 + y^4", "x^3*y + x*y^3", "x^2*y^2"})));
}

TEST_CASE("syzygies: Koszul and the derived example") {
    auto r = qxy();
    {
        auto sz = syzygies<Rat>(r, {P("x", r), P("y", r)});
        REQUIRE(sz.columns.size() == 1);
        CHECK(sz.twists[0] == 2);
        CHECK(sz.columns[0][0] * P("x", r) + sz.columns[0][1] * P("y", r) == PolyQ::zero(r));
    }
    {
        auto sz = syzygies<Rat>(r, {P("x^2", r), P("x*y", r)});
        REQUIRE(sz.columns.size() == 1);
        CHECK(sz.twists[0] == 3);
        // the column is (y, -x) up to sign
        CHECK(sz.columns[0][0] * P("x^2", r) + sz.columns[0][1] * P("x*y", r) == PolyQ::zero(r));
        CHECK(sz.columns[0][0].nterms() == 1);
    }
}

TEST_CASE("syzygies: every column maps to zero under the generator row") {
    auto r = Ring::make(FieldSpec::rationals(), {"x", "y", "z"}, {});
    std::vector<PolyQ> gens = {P("x*y - z^2", r), P("x^2 - y*z", r), P("y^2 - x*z", r)};
    auto sz = syzygies<Rat>(r, gens);
    CHECK(sz.columns.size() >= 2);
    for (size_t c = 0; c < sz.columns.size(); ++c) {
        PolyQ acc = PolyQ::zero(r);
        for (size_t i = 0; i < gens.size(); ++i) acc = acc + sz.columns[c][i] * gens[i];
        CHECK(acc.is_zero());
        // homogeneous of the recorded twist
        for (size_t i = 0; i < gens.size(); ++i)
            if (!sz.columns[c][i].is_zero())
                CHECK(sz.columns[c][i].degree().value() + gens[i].degree().value() == sz.twists[c]);
    }
}

TEST_CASE("gb of ideal equals gb of its gb (ideal equality)") {
    auto r = Ring::make(FieldSpec::rationals(), {"x", "y", "z"}, {});
    auto J = I(r, {"x*y - z^2", "x^2 - y*z"});
    auto gb = reduced_gb(J);
    CHECK(ideal_equal(J, Ideal<Rat>(r, gb)));
}

TEST_CASE("randomized membership: combinations reduce to zero") {
    auto r = qxy();
    auto J = I(r, {"x^5", "x^4*y", "x*y^4", "y^5"});
    auto gb = reduced_gb(J);
    std::mt19937 rng(101);
    std::uniform_int_distribution<int> coef(-4, 4), e(0, 3);
    for (int it = 0; it < 50; ++it) {
        PolyQ f = PolyQ::zero(r);
        for (auto& g : J.gens) {
            PolyQ c = PolyQ::monomial(r, Rat(coef(rng)), r->mono({e(rng), e(rng)}));
            f = f + c * g;
        }
        CHECK(poly_nf(f, gb).is_zero());
    }
}

TEST_CASE("prime field cross-check of a rational basis") {
    auto r = qxy();
    auto rp = Ring::make(FieldSpec::prime(32003), {"x", "y"}, {});
    auto gbq = reduced_gb(I(r, {"x^2 + y^2", "x*y"}));
    Ideal<Fp> Jp(rp, {parse_poly<Fp>("x^2 + y^2", rp), parse_poly<Fp>("x*y", rp)});
    auto gbp = reduced_gb(Jp);
    REQUIRE(gbq.size() == gbp.size());
    for (size_t i = 0; i < gbq.size(); ++i) CHECK(gbq[i].render() == gbp[i].render());
}

TEST_CASE("gb cache: hits reproduce the computed basis exactly") {
    gb_cache::reset_memory();
    auto r = qxy();
    auto J = I(r, {"x^3 - y^3", "x*y^2"});
    auto gb1 = reduced_gb(J);
    auto before = gb_cache::stats();
    auto gb2 = reduced_gb(J);
    auto after = gb_cache::stats();
    CHECK(after.hits == before.hits + 1);
    REQUIRE(gb1.size() == gb2.size());
    for (size_t i = 0; i < gb1.size(); ++i) CHECK(gb1[i] == gb2[i]);
}

TEST_CASE("dimension of lead-term quotients") {
    auto r = qxy();
    CHECK(dim_quotient(I(r, {"x", "y"})) == 0);
    CHECK(dim_quotient(I(r, {"x^2", "x*y"})) == 1);
    CHECK(dim_quotient(Ideal<Rat>(r, {})) == 2);
    CHECK(dim_quotient(I(r, {"1"})) == -1);
    CHECK(is_m_primary(I(r, {"x^5", "x^4*y", "x*y^4", "y^5"})));
    CHECK(!is_m_primary(I(r, {"x^2", "x*y"})));
}
