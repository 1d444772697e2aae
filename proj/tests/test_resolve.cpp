#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "regpow/duality.hpp"

using namespace regpow;

namespace {

RingPtr qxy() { return Ring::make(FieldSpec::rationals(), {"x", "y"}, {}); }

PolyQ P(const std::string& s, RingPtr r) { return parse_poly<Rat>(s, std::move(r)); }

Ideal<Rat> I(RingPtr r, std::initializer_list<const char*> gens) {
    std::vector<PolyQ> gs;
    for (auto* g : gens) gs.push_back(P(g, r));
    return Ideal<Rat>(r, std::move(gs));
}

std::vector<int64_t> twists1(const std::vector<GDeg>& v) {
    std::vector<int64_t> out;
    for (auto& t : v) out.push_back(t.d1);
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace

TEST_CASE("minimal presentation: unit relation kills the module") {
    auto r = qxy();
    Presentation<Rat> p;
    p.ring = r;
    p.gens = {GDeg(0)};
    p.rel = {{P("1", r)}};
    p.reldeg = {GDeg(0)};
    CHECK(minimal_presentation(p).is_zero());
}

TEST_CASE("minimal presentation: redundant generator detected via relations") {
    auto r = qxy();
    // generators u (deg 1), v (deg 2) with relation v = x*u: module is free on u
    Presentation<Rat> p;
    p.ring = r;
    p.gens = {GDeg(1), GDeg(2)};
    p.rel = {{P("x", r), P("-1", r)}};
    p.reldeg = {GDeg(2)};
    auto m = minimal_presentation(p);
    REQUIRE(m.gens.size() == 1);
    CHECK(m.gens[0].d1 == 1);
    CHECK(m.rel.empty());
}

TEST_CASE("free module has empty relation matrix") {
    auto r = qxy();
    auto m = minimal_presentation(presentation_free<Rat>(r, {GDeg(0), GDeg(3)}));
    CHECK(m.ngens() == 2);
    CHECK(m.rel.empty());
    auto res = free_resolution(m);
    CHECK(res.length() == 0);
}

TEST_CASE("resolution: Koszul complex of the residue field") {
    auto r = qxy();
    auto res = free_resolution(presentation_of_quotient(I(r, {"x", "y"})));
    REQUIRE(res.length() == 2);
    CHECK(twists1(res.twists[0]) == std::vector<int64_t>{0});
    CHECK(twists1(res.twists[1]) == std::vector<int64_t>{1, 1});
    CHECK(twists1(res.twists[2]) == std::vector<int64_t>{2});
    CHECK(complex_composites_vanish(res));
}

TEST_CASE("resolution: Hilbert-Burch for the square of the maximal ideal") {
    auto r = qxy();
    auto res = free_resolution(presentation_of_ideal(ideal_power(I(r, {"x", "y"}), 2)));
    REQUIRE(res.length() == 1);
    CHECK(twists1(res.twists[0]) == std::vector<int64_t>{2, 2, 2});
    CHECK(twists1(res.twists[1]) == std::vector<int64_t>{3, 3});
    CHECK(regularity_betti(res) == ExtInt(2));
}

TEST_CASE("resolution: the ring itself has length zero and regularity zero") {
    auto r = qxy();
    auto res = free_resolution(presentation_free<Rat>(r, {GDeg(0)}));
    CHECK(res.length() == 0);
    CHECK(regularity_betti(res) == ExtInt(0));
}

TEST_CASE("resolution length is bounded by the variable count") {
    auto r3 = Ring::make(FieldSpec::rationals(), {"x", "y", "z"}, {});
    auto res = free_resolution(presentation_of_quotient(I(r3, {"x^2", "y^2", "z^2", "x*y", "y*z"})));
    CHECK(res.length() <= 3);
    CHECK(complex_composites_vanish(res));
}

TEST_CASE("betti table reads minimal generator degrees") {
    auto r = qxy();
    auto b = betti_table(free_resolution(presentation_of_ideal(I(r, {"x^5", "x^4*y", "x*y^4", "y^5"}))));
    CHECK(b.entries.at({0, 5}) == 4);
    CHECK(b.total(1) == 3);
}

TEST_CASE("regularity of the running monomial ideal is 7") {
    auto r = qxy();
    auto M = presentation_of_ideal(I(r, {"x^5", "x^4*y", "x*y^4", "y^5"}));
    CHECK(regularity_betti(M) == ExtInt(7));
}

TEST_CASE("ext: free, Koszul-dual, and hypersurface examples") {
    auto r = qxy();
    {
        auto res = free_resolution(presentation_free<Rat>(r, {GDeg(0)}));
        auto e0 = ext_module(res, 0);
        REQUIRE(e0.ngens() == 1);
        CHECK(e0.gens[0].d1 == 0);
        CHECK(e0.rel.empty());
    }
    {
        auto res = free_resolution(presentation_of_quotient(I(r, {"x", "y"})));
        auto e2 = ext_module(res, 2);  // isomorphic to k(2)
        REQUIRE(e2.ngens() == 1);
        CHECK(e2.gens[0].d1 == -2);
        CHECK(hilbert_function(e2, -3, -1) == std::vector<int64_t>{0, 1, 0});
        CHECK(ext_module(res, 0).is_zero());
        CHECK(ext_module(res, 1).is_zero());
    }
    {
        auto res = free_resolution(presentation_of_quotient(I(r, {"x*y"})));
        auto e1 = ext_module(res, 1);  // isomorphic to (S/(xy))(2)
        REQUIRE(e1.ngens() == 1);
        CHECK(e1.gens[0].d1 == -2);
        REQUIRE(e1.nrels() == 1);
        CHECK(e1.rel[0][0] == P("x*y", r));
    }
}

TEST_CASE("a-invariants: polynomial ring and powers of the maximal ideal") {
    auto r = qxy();
    {
        LocalCohomology<Rat> lc(presentation_free<Rat>(r, {GDeg(0)}));
        CHECK(lc.a(2) == ExtInt(-2));
        CHECK(lc.a(0) == ExtInt::neg_inf());
        CHECK(lc.a(1) == ExtInt::neg_inf());
        CHECK(lc.a_star() == ExtInt(-2));
        CHECK(lc.reg() == ExtInt(0));
    }
    for (int64_t q = 1; q <= 4; ++q) {
        LocalCohomology<Rat> lc(presentation_of_ideal(ideal_power(I(r, {"x", "y"}), static_cast<uint32_t>(q))));
        CHECK(lc.a(1) == ExtInt(q - 1));
        CHECK(lc.a(2) == ExtInt(-2));
        CHECK(lc.a_star() == ExtInt(q - 1));
        CHECK(lc.reg() == ExtInt(q));
    }
}

TEST_CASE("a-invariants: the running monomial ideal has a* = 6 and reg = 7") {
    auto r = qxy();
    LocalCohomology<Rat> lc(presentation_of_ideal(I(r, {"x^5", "x^4*y", "x*y^4", "y^5"})));
    CHECK(lc.a_star() == ExtInt(6));
    CHECK(lc.a(1) == ExtInt(6));
    CHECK(lc.a(2) == ExtInt(-2));
    CHECK(lc.reg() == ExtInt(7));
}

TEST_CASE("a-invariants: zero module") {
    auto r = qxy();
    Presentation<Rat> p;
    p.ring = r;
    p.gens = {GDeg(0)};
    p.rel = {{P("1", r)}};
    p.reldeg = {GDeg(0)};
    LocalCohomology<Rat> lc(p);
    CHECK(lc.is_zero_module());
    for (size_t i = 0; i <= 2; ++i) CHECK(lc.a(i) == ExtInt::neg_inf());
}

TEST_CASE("local cohomology graded pieces") {
    auto r = qxy();
    // H^0 of the residue field sits in degree 0 only
    LocalCohomology<Rat> lk(presentation_of_quotient(I(r, {"x", "y"})));
    CHECK(lk.h_dim(0, 0) == 1);
    CHECK(lk.h_dim(0, 1) == 0);
    CHECK(lk.h_dim(1, 0) == 0);
    // S/(x^2, xy): torsion x in degree 1; the free part contributes H^1 below 0
    LocalCohomology<Rat> lm(presentation_of_quotient(I(r, {"x^2", "x*y"})));
    CHECK(lm.a(0) == ExtInt(1));
    CHECK(lm.h_dim(0, 1) == 1);
    CHECK(lm.h_dim(0, 0) == 0);
    CHECK(lm.h_dim(1, -1) == 1);
    CHECK(lm.h_dim(1, 0) == 0);
    CHECK(lm.a(1) == ExtInt(-1));
    CHECK(lm.a(2) == ExtInt::neg_inf());
}

TEST_CASE("a^i vanishes outside [depth, dim]") {
    auto r = qxy();
    for (auto& gens : std::vector<std::vector<const char*>>{
             {"x^2", "x*y"}, {"x", "y"}, {"x*y"}, {"x^3", "y^3", "x*y^2"}}) {
        std::vector<PolyQ> gs;
        for (auto* g : gens) gs.push_back(P(g, r));
        auto M = presentation_of_quotient(Ideal<Rat>(r, gs));
        LocalCohomology<Rat> lc(M);
        DepthInfo d = depth_and_cm(M);
        for (int64_t i = 0; i <= lc.N(); ++i) {
            if (i < d.depth || i > d.dim) CHECK(lc.a(static_cast<size_t>(i)) == ExtInt::neg_inf());
        }
        CHECK(d.depth + d.pd == lc.N());  // Auslander-Buchsbaum, both sides computed
    }
}

TEST_CASE("depth, dimension, CM and Gorenstein detection") {
    auto r = qxy();
    {
        DepthInfo d = depth_and_cm(presentation_free<Rat>(r, {GDeg(0)}));
        CHECK(d.depth == 2);
        CHECK(d.dim == 2);
        CHECK(d.cohen_macaulay);
        CHECK(d.gorenstein);
    }
    {
        DepthInfo d = depth_and_cm(presentation_of_quotient(I(r, {"x^2", "x*y"})));
        CHECK(d.depth == 0);
        CHECK(d.dim == 1);
        CHECK(!d.cohen_macaulay);
    }
    {
        // hypersurface in a weighted ring: k[x,y,T0,T1]/(y*T0 - x*T1)
        auto rw = Ring::make(FieldSpec::rationals(), {"x", "y", "T0", "T1"}, {1, 1, 3, 3});
        DepthInfo d = depth_and_cm(presentation_of_quotient(
            Ideal<Rat>(rw, {parse_poly<Rat>("y*T0 - x*T1", rw)})));
        CHECK(d.dim == 3);
        CHECK(d.depth == 3);
        CHECK(d.cohen_macaulay);
        CHECK(d.gorenstein);
    }
}

TEST_CASE("canonical modules") {
    auto r = qxy();
    {
        auto K = canonical_module(presentation_free<Rat>(r, {GDeg(0)}));
        REQUIRE(K.ngens() == 1);
        CHECK(K.gens[0].d1 == 2);  // S(-N) for N = 2
        CHECK(K.rel.empty());
    }
    {
        // S/(f) with deg f = e: canonical module is (S/f)(e - N)
        auto K = canonical_module(presentation_of_quotient(I(r, {"x*y"})));
        REQUIRE(K.ngens() == 1);
        CHECK(K.gens[0].d1 == 0);
        REQUIRE(K.nrels() == 1);
        CHECK(K.rel[0][0] == P("x*y", r));
    }
    CHECK_THROWS_AS(canonical_module(presentation_of_quotient(I(r, {"x^2", "x*y"}))), NotCMError);
}

TEST_CASE("hilbert functions") {
    auto r = qxy();
    CHECK(hilbert_function(presentation_free<Rat>(r, {GDeg(0)}), 0, 4) ==
          std::vector<int64_t>{1, 2, 3, 4, 5});
    auto m2 = presentation_of_ideal(ideal_power(I(r, {"x", "y"}), 2));
    CHECK(hilbert_function(m2, 0, 4) == std::vector<int64_t>{0, 0, 3, 4, 5});
    Presentation<Rat> z;
    z.ring = r;
    z.gens = {GDeg(0)};
    z.rel = {{P("1", r)}};
    z.reldeg = {GDeg(0)};
    CHECK(hilbert_function(minimal_presentation(z), -2, 2) == std::vector<int64_t>(5, 0));
}

TEST_CASE("euler characteristic against the Hilbert polynomial") {
    auto r = qxy();
    auto M = presentation_of_quotient(I(r, {"x^2", "x*y"}));
    LocalCohomology<Rat> lc(M);
    ModuleHF<Rat> hf(minimal_presentation(M));
    auto HP = fit_hilbert_polynomial(hf, lc.reg());
    for (int64_t n = -3; n <= 6; ++n) {
        Rat euler(0);
        for (int64_t i = 0; i <= lc.N(); ++i) {
            int64_t h = lc.h_dim(static_cast<size_t>(i), n);
            euler = (i % 2 == 0) ? euler + Rat(h) : euler - Rat(h);
        }
        CHECK(Rat(static_cast<long>(hf.eval(n))) - HP.eval(n) == euler);
    }
}
