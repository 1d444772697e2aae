#ifndef REGPOW_REES_HPP
#define REGPOW_REES_HPP

#include <functional>
#include <map>

#include "regpow/presentation.hpp"

namespace regpow {

// Bigraded Rees algebra data for an equigenerated ideal: ambient k[x, T]
// with deg x = (1,0), deg T_j = (d,1), the defining ideal J (kernel of
// T_j -> f_j t), and the standard-graded fiber ring k[T].
template <class C>
struct ReesPresentation {
    RingPtr base;     // A = k[x..], standard graded
    RingPtr ambient;  // k[x.., T..], bigraded
    RingPtr fiber;    // k[T..], standard graded (t-degree)
    int64_t d = 0;
    std::vector<Poly<C>> f;  // ordered generators of I, in the base ring
    std::vector<Poly<C>> J;  // bihomogeneous generators of the defining ideal
    size_t nx = 0, nT = 0;

    // normalized x-degree of a bihomogeneous element: total minus d * t-degree
    int64_t xdeg(const Poly<C>& g) const {
        auto bd = g.bidegree();
        if (!bd) throw Error("defining-ideal element is not bihomogeneous");
        return bd->first - d * bd->second;
    }
};

// (e, c) -> (p, q): converts a blowup twist e and a base pullback twist c
// into the bi-projective convention, (p, q) = (c - d*e, e).
inline std::pair<int64_t, int64_t> twist_convert(int64_t d, int64_t e, int64_t c) {
    return {c - d * e, e};
}

namespace detail {

inline std::string tvar_name(size_t j) { return "T" + std::to_string(j); }

// All exponent vectors over `n` variables with |e| = deg, in a fixed
// deterministic order (descending lexicographic).
inline void exponents_of_degree(size_t n, int64_t deg, std::vector<std::vector<int32_t>>& out) {
    std::vector<int32_t> e(n, 0);
    // descending lex: first variable takes the largest share first
    std::function<void(size_t, int64_t)> rec = [&](size_t i, int64_t rem) {
        if (i + 1 == n) {
            e[i] = static_cast<int32_t>(rem);
            out.push_back(e);
            e[i] = 0;
            return;
        }
        for (int64_t k = rem; k >= 0; --k) {
            e[i] = static_cast<int32_t>(k);
            rec(i + 1, rem - k);
        }
        e[i] = 0;
    };
    if (n == 0) {
        if (deg == 0) out.push_back({});
        return;
    }
    rec(0, deg);
}

}  // namespace detail

// Defining ideal of the Rees algebra by eliminating t from
// (T_0 - f_0 t, ..., T_m - f_m t) in k[t, x, T].
template <class C>
ReesPresentation<C> rees_presentation(const Ideal<C>& I) {
    ReesPresentation<C> R;
    R.base = I.ring;
    const Ring& A = *I.ring;
    if (A.bigraded()) throw Error("Rees construction expects a single-graded base ring");
    for (size_t v = 0; v < A.nvars(); ++v)
        if (A.weight1(v) != 1) throw Error("Rees construction expects a standard-graded base ring");
    if (I.gens.empty()) throw Error("Rees construction needs a nonzero ideal");
    for (auto& g : I.gens)
        if (!g.is_homogeneous()) throw Error("Rees construction needs homogeneous generators");
    const int64_t d = I.gens[0].degree().value();
    for (auto& g : I.gens)
        if (g.degree().value() != d)
            throw Error("ideal is not equigenerated: generator degrees differ");
    if (d < 1) throw Error("generation degree must be positive");
    R.d = d;
    R.f = I.gens;
    R.nx = A.nvars();
    R.nT = I.gens.size();

    // working ring k[t, x.., T..], t first for the elimination block
    std::vector<std::string> wvars = {"t_aux"};
    std::vector<int64_t> wweights = {1};
    for (size_t v = 0; v < R.nx; ++v) {
        wvars.push_back(A.var(v));
        wweights.push_back(1);
    }
    for (size_t j = 0; j < R.nT; ++j) {
        wvars.push_back(detail::tvar_name(j));
        wweights.push_back(d + 1);
    }
    RingPtr W = Ring::make(A.field(), wvars, wweights, OrderSpec::block_elim(1));

    std::vector<int> base_to_W(A.nvars());
    for (size_t v = 0; v < A.nvars(); ++v) base_to_W[v] = static_cast<int>(v + 1);
    std::vector<Poly<C>> wgens;
    for (size_t j = 0; j < R.nT; ++j) {
        Poly<C> Tj = Poly<C>::variable(W, 1 + R.nx + j);
        Poly<C> ft = map_poly(R.f[j], W, base_to_W) * Poly<C>::variable(W, 0);
        wgens.push_back(Tj - ft);
    }
    auto gb = reduced_gb(Ideal<C>(W, wgens));

    // bigraded ambient ring
    std::vector<std::string> avars;
    std::vector<std::pair<int64_t, int64_t>> agrad;
    for (size_t v = 0; v < R.nx; ++v) {
        avars.push_back(A.var(v));
        agrad.emplace_back(1, 0);
    }
    for (size_t j = 0; j < R.nT; ++j) {
        avars.push_back(detail::tvar_name(j));
        agrad.emplace_back(d, 1);
    }
    R.ambient = Ring::make_bigraded(A.field(), avars, agrad, OrderSpec::bigraded_grevlex());
    R.fiber = Ring::make(A.field(), std::vector<std::string>(avars.begin() + R.nx, avars.end()),
                         std::vector<int64_t>(R.nT, 1));

    auto wm = var_map_by_name(*W, *R.ambient);  // t_aux maps to -1
    for (auto& g : gb) {
        bool uses_t = false;
        for (auto& t : g.terms())
            if (t.m.e[0] != 0) uses_t = true;
        if (uses_t) continue;
        Poly<C> h = map_poly(g, R.ambient, wm);
        if (!h.bidegree()) throw Error("internal: defining ideal generator is not bihomogeneous");
        R.J.push_back(std::move(h));
    }
    // J meets k[x] trivially: no defining relation may lead with an x-monomial
    for (auto& g : R.J) {
        bool xonly = true;
        for (size_t j = 0; j < R.nT; ++j)
            if (g.lm().e[R.nx + j] != 0) xonly = false;
        if (xonly) throw Error("internal: defining ideal meets the base ring");
    }
    return R;
}

// Substitution check: T_j -> f_j t sends every defining relation to zero.
template <class C>
bool rees_substitution_ok(const ReesPresentation<C>& R) {
    const Ring& A = *R.base;
    std::vector<std::string> vars = A.vars();
    vars.push_back("t_aux");
    RingPtr At = Ring::make(A.field(), vars, {});
    std::vector<int> bm(A.nvars());
    for (size_t v = 0; v < A.nvars(); ++v) bm[v] = static_cast<int>(v);
    std::vector<Poly<C>> images;
    for (size_t v = 0; v < R.nx; ++v) images.push_back(Poly<C>::variable(At, v));
    for (size_t j = 0; j < R.nT; ++j)
        images.push_back(map_poly(R.f[j], At, bm) * Poly<C>::variable(At, A.nvars()));
    for (auto& g : R.J)
        if (!subst_poly(g, At, images).is_zero()) return false;
    return true;
}

// J intersected with k[T], by block elimination of the x-variables.
template <class C>
Ideal<C> fiber_ideal(const ReesPresentation<C>& R) {
    std::vector<int> front;
    for (size_t v = 0; v < R.nx; ++v) front.push_back(static_cast<int>(v));
    Ideal<C> E = eliminate(Ideal<C>(R.ambient, R.J), front);
    auto vm = var_map_by_name(*E.ring, *R.fiber);
    std::vector<Poly<C>> gens;
    for (auto& g : E.gens) gens.push_back(map_poly(g, R.fiber, vm));
    return Ideal<C>(R.fiber, gens);
}

enum class StrandDir { x_strand, T_strand };

template <class C>
struct StrandModule {
    StrandDir dir;
    int64_t index;
    Presentation<C> pres;
};

// The strand with fixed x-degree p, as a module over k[T]: free cover on the
// x-monomials of degree p (twists 0), relations x^a * g for the defining
// relations g with xdeg(g) <= p. Negative strands vanish.
template <class C>
StrandModule<C> strand_x(const ReesPresentation<C>& R, int64_t p) {
    StrandModule<C> S{StrandDir::x_strand, p, {}};
    S.pres.ring = R.fiber;
    if (p < 0) return S;

    std::vector<std::vector<int32_t>> rows;
    detail::exponents_of_degree(R.nx, p, rows);
    std::map<std::vector<int32_t>, size_t> rowof;
    for (size_t i = 0; i < rows.size(); ++i) rowof[rows[i]] = i;
    S.pres.gens.assign(rows.size(), GDeg(0, 0));

    for (auto& g : R.J) {
        int64_t xd = R.xdeg(g);
        int64_t td = g.bidegree()->second;
        if (xd > p) continue;
        std::vector<std::vector<int32_t>> alphas;
        detail::exponents_of_degree(R.nx, p - xd, alphas);
        for (auto& alpha : alphas) {
            std::vector<std::vector<Term<C>>> col(rows.size());
            for (auto& t : g.terms()) {
                std::vector<int32_t> xpart(R.nx), tpart(R.nT);
                for (size_t v = 0; v < R.nx; ++v) xpart[v] = t.m.e[v] + alpha[v];
                for (size_t j = 0; j < R.nT; ++j) tpart[j] = t.m.e[R.nx + j];
                col[rowof.at(xpart)].push_back({t.c, R.fiber->mono(tpart)});
            }
            std::vector<Poly<C>> column;
            column.reserve(rows.size());
            for (auto& ts : col) column.push_back(Poly<C>::from_terms(R.fiber, std::move(ts)));
            S.pres.rel.push_back(std::move(column));
            S.pres.reldeg.push_back(GDeg(td, 0));
        }
    }
    return S;
}

// The strand with fixed t-degree q, as a module over k[x]: free cover on the
// T-monomials of degree q (twists d*q), relations T^b * g for the defining
// relations g with t-degree <= q. Its degree-n piece is (I^q)_n.
template <class C>
StrandModule<C> strand_T(const ReesPresentation<C>& R, int64_t q) {
    StrandModule<C> S{StrandDir::T_strand, q, {}};
    S.pres.ring = R.base;
    if (q < 0) return S;

    std::vector<std::vector<int32_t>> rows;
    detail::exponents_of_degree(R.nT, q, rows);
    std::map<std::vector<int32_t>, size_t> rowof;
    for (size_t i = 0; i < rows.size(); ++i) rowof[rows[i]] = i;
    S.pres.gens.assign(rows.size(), GDeg(R.d * q, 0));

    for (auto& g : R.J) {
        int64_t xd = R.xdeg(g);
        int64_t td = g.bidegree()->second;
        if (td > q) continue;
        std::vector<std::vector<int32_t>> betas;
        detail::exponents_of_degree(R.nT, q - td, betas);
        for (auto& beta : betas) {
            std::vector<std::vector<Term<C>>> col(rows.size());
            for (auto& t : g.terms()) {
                std::vector<int32_t> xpart(R.nx), tpart(R.nT);
                for (size_t v = 0; v < R.nx; ++v) xpart[v] = t.m.e[v];
                for (size_t j = 0; j < R.nT; ++j) tpart[j] = t.m.e[R.nx + j] + beta[j];
                col[rowof.at(tpart)].push_back({t.c, R.base->mono(xpart)});
            }
            std::vector<Poly<C>> column;
            column.reserve(rows.size());
            for (auto& ts : col) column.push_back(Poly<C>::from_terms(R.base, std::move(ts)));
            S.pres.rel.push_back(std::move(column));
            S.pres.reldeg.push_back(GDeg(R.d * q + xd, 0));
        }
    }
    return S;
}

// dim_k of the bidegree-(p, q) piece of k[x,T]/J, counting monomials with
// x-degree p and T-degree q outside the lead-term ideal.
template <class C>
int64_t rees_piece_dim(const ReesPresentation<C>& R, int64_t p, int64_t q) {
    if (p < 0 || q < 0) return 0;
    auto gb = reduced_gb(Ideal<C>(R.ambient, R.J));
    std::vector<Monomial> lead;
    for (auto& g : gb) lead.push_back(g.lm());
    std::vector<std::vector<int32_t>> xs, ts;
    detail::exponents_of_degree(R.nx, p, xs);
    detail::exponents_of_degree(R.nT, q, ts);
    int64_t count = 0;
    for (auto& a : xs)
        for (auto& b : ts) {
            std::vector<int32_t> e(R.nx + R.nT);
            for (size_t v = 0; v < R.nx; ++v) e[v] = a[v];
            for (size_t j = 0; j < R.nT; ++j) e[R.nx + j] = b[j];
            Monomial m = R.ambient->mono(e);
            bool div = false;
            for (auto& l : lead)
                if (mono_divides(l, m)) {
                    div = true;
                    break;
                }
            if (!div) ++count;
        }
    return count;
}

// The Rees ring as a cyclic module over the flattened ambient ring, for
// depth/CM/Gorenstein tests and the canonical module. Weights are the sums
// of the bidegree components, so bihomogeneous stays homogeneous.
template <class C>
Presentation<C> rees_ring_module(const ReesPresentation<C>& R, RingPtr* flat_out = nullptr) {
    std::vector<int64_t> w;
    for (size_t v = 0; v < R.ambient->nvars(); ++v)
        w.push_back(R.ambient->weight1(v) + R.ambient->weight2(v));
    RingPtr flat = Ring::make(R.ambient->field(), R.ambient->vars(), w);
    if (flat_out) *flat_out = flat;
    std::vector<int> vm(R.ambient->nvars());
    for (size_t v = 0; v < R.ambient->nvars(); ++v) vm[v] = static_cast<int>(v);
    std::vector<Poly<C>> gens;
    for (auto& g : R.J) gens.push_back(map_poly(g, flat, vm));
    return presentation_of_quotient(Ideal<C>(flat, gens));
}

// Bidegrees of the defining relations, needed to re-read flattened results
// bigradedly.
template <class C>
std::vector<GDeg> rees_relation_bidegrees(const ReesPresentation<C>& R) {
    std::vector<GDeg> out;
    for (auto& g : R.J) {
        auto bd = g.bidegree();
        out.push_back(GDeg(bd->first, bd->second));
    }
    return out;
}

}  // namespace regpow

#endif
