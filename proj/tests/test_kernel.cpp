#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "regpow/parser.hpp"

using namespace regpow;

namespace {

RingPtr qxy() { return Ring::make(FieldSpec::rationals(), {"x", "y"}, {}); }

PolyQ P(const std::string& s, RingPtr r) { return parse_poly<Rat>(s, std::move(r)); }

Monomial rand_mono(const Ring& r, std::mt19937& rng, int maxe = 4) {
    std::vector<int32_t> e(r.nvars());
    std::uniform_int_distribution<int32_t> d(0, maxe);
    for (auto& x : e) x = d(rng);
    return r.mono(e);
}

PolyQ rand_poly(RingPtr r, std::mt19937& rng) {
    std::uniform_int_distribution<int> nt(0, 4), coef(-5, 5);
    std::vector<Term<Rat>> ts;
    int n = nt(rng);
    for (int i = 0; i < n; ++i) ts.push_back({Rat(coef(rng)), rand_mono(*r, rng)});
    return PolyQ::from_terms(r, std::move(ts));
}

}  // namespace

TEST_CASE("field: rationals are exact") {
    Rat a(1, 3), b(2, 5);
    CHECK((a + b).str() == "11/15");
    CHECK((a * b).str() == "2/15");
    CHECK((a - a).is_zero());
    CHECK((a / b).str() == "5/6");
}

TEST_CASE("field: prime field arithmetic and inverses") {
    FieldSpec f = FieldSpec::prime(32003);
    Fp a = Fp::from_int(-7, 32003);
    CHECK(a.raw() == 32003 - 7);
    Fp inv = a.inv();
    CHECK((a * inv).is_one());
    CHECK_THROWS_AS(FieldSpec::prime(32004), ParseError);
    CHECK(is_prime_u32(2147483647u));
    CHECK(!is_prime_u32(2147483646u));
    (void)f;
}

TEST_CASE("monomial: cached degree matches grading") {
    auto r = Ring::make(FieldSpec::rationals(), {"x", "y", "z"}, {1, 2, 3});
    Monomial m = r->mono({2, 1, 1});
    CHECK(m.d1 == 2 + 2 + 3);
    auto br = Ring::make_bigraded(FieldSpec::rationals(), {"x", "T"}, {{1, 0}, {5, 1}});
    Monomial bm = br->mono({4, 1});
    CHECK(bm.d1 == 9);
    CHECK(bm.d2 == 1);
}

TEST_CASE("order: grevlex basics") {
    auto r = qxy();
    Monomial x2 = r->mono({2, 0}), xy = r->mono({1, 1}), m = r->mono({3, 1});
    CHECK(cmp_mono(*r, x2, xy) > 0);  // x^2 > xy in grevlex
    CHECK(cmp_mono(*r, m, m) == 0);
    CHECK(cmp_mono(*r, x2, m) < 0);  // lower degree
}

TEST_CASE("order: lex ignores degree") {
    auto r = Ring::make(FieldSpec::rationals(), {"x", "y"}, {}, OrderSpec::lex());
    CHECK(cmp_mono(*r, r->mono({1, 0}), r->mono({0, 5})) > 0);
}

TEST_CASE("order: block elimination dominates") {
    // ring (x, T) with x in the front block: x beats T^5
    auto r = Ring::make(FieldSpec::rationals(), {"x", "T"}, {}, OrderSpec::block_elim(1));
    CHECK(cmp_mono(*r, r->mono({1, 0}), r->mono({0, 5})) > 0);
}

TEST_CASE("order: compatibility with multiplication (randomized)") {
    auto r = Ring::make(FieldSpec::rationals(), {"x", "y", "z"}, {});
    std::mt19937 rng(7);
    for (auto spec : {OrderSpec::grevlex(), OrderSpec::lex(), OrderSpec::block_elim(1),
                      OrderSpec::bigraded_grevlex()}) {
        for (int it = 0; it < 300; ++it) {
            Monomial a = rand_mono(*r, rng), b = rand_mono(*r, rng), c = rand_mono(*r, rng);
            int ab = cmp_mono(*r, spec, a, b);
            int ac_bc = cmp_mono(*r, spec, mono_mul(a, c), mono_mul(b, c));
            CHECK(ab == ac_bc);
            // refines divisibility
            if (mono_divides(a, b) && a != b) CHECK(cmp_mono(*r, spec, a, b) < 0);
        }
    }
}

TEST_CASE("parse: normalization") {
    auto r = qxy();
    PolyQ p = P("x^2*y - 3*y^3", r);
    CHECK(p.nterms() == 2);
    CHECK(p.terms()[0].m.d1 == 3);
    CHECK(p.terms()[1].m.d1 == 3);
    CHECK(p.is_homogeneous());
    CHECK(P("x*y - x*y", r).is_zero());
    CHECK(P("(x+y)*(x-y)", r) == P("x^2 - y^2", r));
    CHECK(P("2/4*x", r) == P("1/2*x", r));
}

TEST_CASE("parse: bigraded ring bidegrees") {
    auto br = Ring::make_bigraded(FieldSpec::rationals(), {"x0", "x1", "T0", "T1"},
                                  {{1, 0}, {1, 0}, {1, 1}, {1, 1}});
    PolyQ p = parse_poly<Rat>("x0*T1 - x1*T0", br);
    auto bd = p.bidegree();
    REQUIRE(bd.has_value());
    CHECK(bd->first == 2);
    CHECK(bd->second == 1);
}

TEST_CASE("parse: bidegree examples") {
    auto br = Ring::make_bigraded(FieldSpec::rationals(), {"x", "y", "T0", "T1"},
                                  {{1, 0}, {1, 0}, {5, 1}, {5, 1}});
    auto bd = parse_poly<Rat>("x^4*T0", br).bidegree();
    REQUIRE(bd.has_value());
    CHECK(*bd == std::make_pair<int64_t, int64_t>(9, 1));
    // mixed degrees -> inhomogeneous
    auto br2 = Ring::make_bigraded(FieldSpec::rationals(), {"x", "T0"}, {{1, 0}, {2, 1}});
    CHECK(!parse_poly<Rat>("x + T0", br2).bidegree().has_value());
}

TEST_CASE("parse: syntax errors carry positions") {
    auto r = qxy();
    try {
        P("x^", r);
        FAIL("expected ParseError");
    } catch (const ParseError& e) {
        CHECK(e.offset == 2);
    }
    CHECK_THROWS_AS(P("x + w", r), ParseError);
    CHECK_THROWS_AS(P("x +", r), ParseError);
    CHECK_THROWS_AS(P("(x", r), ParseError);
}

TEST_CASE("parse: Fp coefficient not invertible") {
    auto r = Ring::make(FieldSpec::prime(5), {"x"}, {});
    CHECK_THROWS_AS(parse_poly<Fp>("1/5*x", r), Error);
    CHECK(parse_poly<Fp>("6*x", r) == parse_poly<Fp>("x", r));
}

TEST_CASE("render round-trip is the identity") {
    auto r = Ring::make(FieldSpec::rationals(), {"x", "y", "z"}, {});
    std::mt19937 rng(11);
    for (int it = 0; it < 200; ++it) {
        PolyQ p = rand_poly(r, rng);
        CHECK(parse_poly<Rat>(p.render(), r) == p);
    }
    CHECK(PolyQ::zero(r).render() == "0");
    CHECK(P("-x", r).render() == "-x");
    CHECK(P("x - 3/2", r).render() == "x - 3/2");
}

TEST_CASE("polynomial ring axioms (randomized, exact)") {
    auto r = Ring::make(FieldSpec::rationals(), {"x", "y", "z"}, {});
    std::mt19937 rng(13);
    for (int it = 0; it < 150; ++it) {
        PolyQ a = rand_poly(r, rng), b = rand_poly(r, rng), c = rand_poly(r, rng);
        CHECK((a + b) * c == a * c + b * c);
        CHECK((a * b) * c == a * (b * c));
        CHECK(a + b == b + a);
        CHECK(a - a == PolyQ::zero(r));
    }
}

TEST_CASE("homogeneous polynomial bidegree equals every term's bidegree") {
    auto br = Ring::make_bigraded(FieldSpec::rationals(), {"x", "y", "T0", "T1"},
                                  {{1, 0}, {1, 0}, {1, 1}, {1, 1}});
    PolyQ p = parse_poly<Rat>("x*T1 - y*T0", br);
    auto bd = p.bidegree();
    REQUIRE(bd.has_value());
    for (auto& t : p.terms()) {
        CHECK(t.m.d1 == bd->first);
        CHECK(t.m.d2 == bd->second);
    }
}
