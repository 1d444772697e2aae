#ifndef REGPOW_COHOMSHEAF_HPP
#define REGPOW_COHOMSHEAF_HPP

#include "regpow/duality.hpp"
#include "regpow/rees.hpp"

namespace regpow {

// Sheaf cohomology of the coherent sheaf associated to a graded module on
// Proj of its ring, from exact local cohomology pieces:
//   h^i(F(n)) = dim [H^{i+1}_m(M)]_n          for i >= 1,
//   h^0(F(n)) = dim M_n - dim [H^0_m(M)]_n + dim [H^1_m(M)]_n.
template <class C>
class SheafCohomology {
  public:
    explicit SheafCohomology(const Presentation<C>& M)
        : pres_(minimal_presentation(M)), lc_(pres_), hf_(pres_) {}

    size_t proj_dim() const { return pres_.ring->nvars() - 1; }

    std::vector<int64_t> h(int64_t twist) const {
        std::vector<int64_t> out(proj_dim() + 1, 0);
        out[0] = hf_.eval(twist) - lc_.h_dim(0, twist) + lc_.h_dim(1, twist);
        for (size_t i = 1; i < out.size(); ++i) out[i] = lc_.h_dim(i + 1, twist);
        return out;
    }

    // least r with h^i(F(r - i)) = 0 for all i > 0: max_{j>=2}(a^j + j)
    ExtInt sheaf_regularity() const {
        ExtInt r = ExtInt::neg_inf();
        for (size_t j = 2; j <= static_cast<size_t>(lc_.N()); ++j)
            r = max(r, lc_.a(j) + static_cast<int64_t>(j));
        if (r > lc_.reg()) throw Error("internal: sheaf regularity exceeds module regularity");
        return r;
    }

    const LocalCohomology<C>& local() const { return lc_; }
    const Presentation<C>& pres() const { return pres_; }

  private:
    Presentation<C> pres_;
    LocalCohomology<C> lc_;
    ModuleHF<C> hf_;
};

template <class C>
std::vector<int64_t> sheaf_cohomology_proj(const Presentation<C>& M, int64_t twist) {
    return SheafCohomology<C>(M).h(twist);
}

template <class C>
ExtInt sheaf_regularity(const Presentation<C>& M) {
    return SheafCohomology<C>(M).sheaf_regularity();
}

// ---- cohomology on the blowup through the two certified Leray routes ----

enum class XtRoute { pi_side, phi_side, both };

struct XtCertificates {
    ExtInt a_star_pi;   // certified value or upper bound
    bool pi_exact = false;
    ExtInt a_star_phi;  // detected stabilization constant
    bool phi_known = false;
};

// h^i(Xtilde, O(p,q)). The pi route pushes through the blowup morphism and
// needs q > a*_pi; it evaluates sheaf cohomology of I^q twisted by p + dq on
// the base projective space. The phi route pushes through the projection to
// the image and needs p > a*_phi; it evaluates the x-degree-p strand sheaf
// at twist q. `both` asserts the two vectors agree. Refuses rather than
// returning an uncertified number.
template <class C>
std::vector<int64_t> cohomology_Xtilde(const ReesPresentation<C>& R, int64_t p, int64_t q,
                                       XtRoute route, const XtCertificates& cert) {
    auto pi_ok = [&] { return ExtInt(q) > cert.a_star_pi; };
    auto phi_ok = [&] { return cert.phi_known && ExtInt(p) > cert.a_star_phi; };

    auto run_pi = [&]() {
        if (q < 0) throw NotCertifiedError("pi-side route needs q >= 0");
        Ideal<C> base(R.base, R.f);
        auto M = presentation_of_ideal(ideal_power(base, static_cast<uint32_t>(q)));
        return sheaf_cohomology_proj(M, p + R.d * q);
    };
    auto run_phi = [&]() { return sheaf_cohomology_proj(strand_x(R, p).pres, q); };

    switch (route) {
        case XtRoute::pi_side:
            if (!pi_ok()) throw NotCertifiedError("pi-side route needs q > a*_pi");
            return run_pi();
        case XtRoute::phi_side:
            if (!phi_ok()) throw NotCertifiedError("phi-side route needs p > a*_phi");
            return run_phi();
        case XtRoute::both: {
            if (!pi_ok()) throw NotCertifiedError("pi-side route needs q > a*_pi");
            if (!phi_ok()) throw NotCertifiedError("phi-side route needs p > a*_phi");
            auto a = run_pi();
            auto b = run_phi();
            size_t n = std::max(a.size(), b.size());
            a.resize(n, 0);
            b.resize(n, 0);
            if (a != b) throw Error("internal: Leray routes disagree at (" + std::to_string(p) + "," +
                                    std::to_string(q) + ")");
            return a;
        }
    }
    throw Error("unreachable");
}

// Graded pieces of x-support local cohomology of the Rees algebra:
// [H^i_(x)(R)]_(p,q) computed strand-by-strand as [H^i_m(R_(*,q))]_{p+dq}.
template <class C>
std::vector<std::pair<int64_t, int64_t>> x_local_cohomology_pieces(const ReesPresentation<C>& R,
                                                                   int64_t p, int64_t q_lo,
                                                                   int64_t q_hi, size_t i) {
    std::vector<std::pair<int64_t, int64_t>> out;
    for (int64_t q = q_lo; q <= q_hi; ++q) {
        if (q < 0) throw Error("x-support pieces need q >= 0");
        if (p < 0) {
            out.emplace_back(q, 0);
            continue;
        }
        auto S = strand_T(R, q);
        LocalCohomology<C> lc(S.pres);
        out.emplace_back(q, lc.h_dim(i, p + R.d * q));
    }
    return out;
}

}  // namespace regpow

#endif
