#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "regpow/cohomsheaf.hpp"

using namespace regpow;

namespace {

RingPtr qvars(size_t n) {
    std::vector<std::string> v;
    for (size_t i = 0; i < n; ++i) v.push_back("x" + std::to_string(i));
    return Ring::make(FieldSpec::rationals(), v, {});
}

PolyQ P(const std::string& s, RingPtr r) { return parse_poly<Rat>(s, std::move(r)); }

Ideal<Rat> I(RingPtr r, std::initializer_list<const char*> gens) {
    std::vector<PolyQ> gs;
    for (auto* g : gens) gs.push_back(P(g, r));
    return Ideal<Rat>(r, std::move(gs));
}

int64_t binom(int64_t n, int64_t k) {
    if (k < 0 || n < 0 || k > n) return 0;
    int64_t r = 1;
    for (int64_t i = 0; i < k; ++i) r = r * (n - i) / (i + 1);
    return r;
}

// closed formulas for line bundles on projective space
int64_t h_line_bundle(int64_t n, int64_t e, int64_t i) {
    if (i == 0) return binom(n + e, n);
    if (i == n) return binom(-e - 1, n);
    return 0;
}

}  // namespace

TEST_CASE("line bundle goldens on P^1..P^3, twists -8..8") {
    for (size_t nv = 2; nv <= 4; ++nv) {
        auto r = qvars(nv);
        SheafCohomology<Rat> sc(presentation_free<Rat>(r, {GDeg(0)}));
        const int64_t n = static_cast<int64_t>(nv) - 1;
        for (int64_t e = -8; e <= 8; ++e) {
            auto h = sc.h(e);
            for (int64_t i = 0; i <= n; ++i) {
                CAPTURE(nv);
                CAPTURE(e);
                CAPTURE(i);
                CHECK(h[static_cast<size_t>(i)] == h_line_bundle(n, e, i));
            }
        }
    }
}

TEST_CASE("twisted line bundles through module shifts") {
    auto r = qvars(2);
    SheafCohomology<Rat> sc(presentation_free<Rat>(r, {GDeg(-2)}));  // O(2) as S(2)
    CHECK(sc.h(0) == std::vector<int64_t>{3, 0});
    CHECK(sc.h(-4) == std::vector<int64_t>{0, 1});
}

TEST_CASE("the sheaf of m^2 is the structure sheaf") {
    auto r = Ring::make(FieldSpec::rationals(), {"x", "y"}, {});
    auto M = presentation_of_ideal(ideal_power(I(r, {"x", "y"}), 2));
    SheafCohomology<Rat> sc(M);
    // dim M_1 = 0 yet h^0(M~(1)) = 2
    CHECK(sc.h(1) == std::vector<int64_t>{2, 0});
    CHECK(sc.h(0) == std::vector<int64_t>{1, 0});
    CHECK(sc.h(-2) == std::vector<int64_t>{0, 1});
    CHECK(sc.sheaf_regularity() == ExtInt(0));
}

TEST_CASE("sheaf regularity examples and the module bound") {
    auto r = qvars(2);
    CHECK(sheaf_regularity(presentation_free<Rat>(r, {GDeg(0)})) == ExtInt(0));
    CHECK(sheaf_regularity(presentation_free<Rat>(r, {GDeg(3)})) == ExtInt(3));  // S(-3): a^2 = 1
    auto rxy = Ring::make(FieldSpec::rationals(), {"x", "y"}, {});
    auto M = presentation_of_ideal(ideal_power(I(rxy, {"x", "y"}), 2));
    CHECK(sheaf_regularity(M) == ExtInt(0));
    CHECK(regularity_betti(M) == ExtInt(2));  // strictly larger than the sheaf side here
}

TEST_CASE("Xtilde cohomology routes: certificates are enforced") {
    auto rxy = Ring::make(FieldSpec::rationals(), {"x", "y"}, {});
    auto R = rees_presentation(I(rxy, {"x", "y"}));
    XtCertificates cert{ExtInt(-1), true, ExtInt(-1), true};
    // q = -1 is never certified on the pi side
    CHECK_THROWS_AS(cohomology_Xtilde(R, 2, -1, XtRoute::pi_side, cert), NotCertifiedError);
    // p = a*_phi is not certified on the phi side
    CHECK_THROWS_AS(cohomology_Xtilde(R, -1, 1, XtRoute::phi_side, cert), NotCertifiedError);
    XtCertificates none{ExtInt(-1), true, ExtInt(0), false};
    CHECK_THROWS_AS(cohomology_Xtilde(R, 2, 1, XtRoute::phi_side, none), NotCertifiedError);
}

TEST_CASE("Xtilde cohomology: blowup of the Koszul ideal is the diagonal") {
    auto rxy = Ring::make(FieldSpec::rationals(), {"x", "y"}, {});
    auto R = rees_presentation(I(rxy, {"x", "y"}));
    XtCertificates cert{ExtInt(-1), true, ExtInt(-1), true};
    // O(p,q) restricted to the diagonal is O(p+q) on P^1
    for (int64_t p = 0; p <= 2; ++p)
        for (int64_t q = 0; q <= 2; ++q) {
            auto h = cohomology_Xtilde(R, p, q, XtRoute::both, cert);
            CHECK(h[0] == p + q + 1);
            for (size_t i = 1; i < h.size(); ++i) CHECK(h[i] == 0);
        }
    // and q = 0 gives the base line bundles for any p >= 0
    for (int64_t p = 0; p <= 3; ++p) {
        auto h = cohomology_Xtilde(R, p, 0, XtRoute::pi_side, cert);
        CHECK(h[0] == p + 1);
        CHECK(h[1] == 0);
    }
}

TEST_CASE("x-support local cohomology pieces") {
    auto rxy = Ring::make(FieldSpec::rationals(), {"x", "y"}, {});
    // domain: no (x)-torsion, H^0 pieces vanish
    auto R = rees_presentation(I(rxy, {"x^5", "x^4*y", "x*y^4", "y^5"}));
    for (auto& [q, v] : x_local_cohomology_pieces(R, 1, 0, 2, 0)) CHECK(v == 0);
    // negative strands vanish
    for (auto& [q, v] : x_local_cohomology_pieces(R, -2, 0, 2, 1)) CHECK(v == 0);
    // q = 1, i = 1: nonzero piece at p = a*(I) - d = 1
    auto t1 = x_local_cohomology_pieces(R, 1, 1, 1, 1);
    REQUIRE(t1.size() == 1);
    CHECK(t1[0].second > 0);
    auto t2 = x_local_cohomology_pieces(R, 2, 1, 1, 1);
    CHECK(t2[0].second == 0);  // above a*(I) the pieces are gone
}

TEST_CASE("serre vanishing along the pi route") {
    auto rxy = Ring::make(FieldSpec::rationals(), {"x", "y"}, {});
    auto ideal = I(rxy, {"x^2", "x*y"});
    auto R = rees_presentation(ideal);
    XtCertificates cert{ExtInt(-1), true, ExtInt(-1), true};
    for (int64_t q = 1; q <= 2; ++q) {
        LocalCohomology<Rat> lc(presentation_of_ideal(ideal_power(ideal, static_cast<uint32_t>(q))));
        int64_t p0 = lc.reg().value() - R.d * q + 1;
        for (int64_t p = p0; p < p0 + 3; ++p) {
            auto h = cohomology_Xtilde(R, p, q, XtRoute::pi_side, cert);
            for (size_t i = 1; i < h.size(); ++i) CHECK(h[i] == 0);
        }
    }
}
