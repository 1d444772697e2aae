#ifndef REGPOW_IDEAL_HPP
#define REGPOW_IDEAL_HPP

#include <algorithm>
#include <map>
#include <numeric>
#include <string>
#include <vector>

#include "regpow/buchberger.hpp"
#include "regpow/gb_cache.hpp"
#include "regpow/parser.hpp"

namespace regpow {

template <class C>
struct Ideal {
    RingPtr ring;
    std::vector<Poly<C>> gens;

    Ideal() = default;
    Ideal(RingPtr r, std::vector<Poly<C>> g) : ring(std::move(r)), gens(std::move(g)) {
        std::erase_if(gens, [](const Poly<C>& p) { return p.is_zero(); });
    }
    bool is_homogeneous() const {
        for (auto& g : gens)
            if (!g.is_homogeneous()) return false;
        return true;
    }
};

template <class C>
std::vector<Poly<C>> minimal_generators(RingPtr ring, const std::vector<Poly<C>>& cands_in);

template <class C>
std::vector<ModVec<C>> to_rank1(const std::vector<Poly<C>>& ps) {
    std::vector<ModVec<C>> vs;
    vs.reserve(ps.size());
    for (auto& p : ps) vs.push_back(ModVec<C>::from_poly(p, 0));
    return vs;
}

template <class C>
std::vector<Poly<C>> from_rank1(const std::vector<ModVec<C>>& vs) {
    std::vector<Poly<C>> ps;
    ps.reserve(vs.size());
    for (auto& v : vs) ps.push_back(v.to_column(1)[0]);
    return ps;
}

// Reduced Gröbner basis of an ideal under the ring's active order, through
// the synchronized content-hash cache. The result is certified against the
// input by normal forms (each generator reduces to zero).
template <class C>
std::vector<Poly<C>> reduced_gb(const Ideal<C>& I) {
    std::vector<std::string> rendered;
    rendered.reserve(I.gens.size());
    for (auto& g : I.gens) rendered.push_back(g.render());
    std::sort(rendered.begin(), rendered.end());
    const std::string key = gb_cache::make_key(I.ring->describe(), rendered);
    if (auto hit = gb_cache::lookup(key)) {
        std::vector<Poly<C>> gb;
        gb.reserve(hit->size());
        for (auto& s : *hit) gb.push_back(parse_poly<C>(s, I.ring));
        return gb;
    }
    auto basis = module_groebner<C>(I.ring, to_rank1(I.gens));
    std::vector<Poly<C>> gb = from_rank1(basis);
    for (auto& g : I.gens)
        if (!module_nf(ModVec<C>::from_poly(g, 0), basis).is_zero())
            throw Error("internal: generator does not reduce to zero against its own basis");
    std::vector<std::string> out;
    out.reserve(gb.size());
    for (auto& g : gb) out.push_back(g.render());
    gb_cache::store(key, out);
    return gb;
}

template <class C>
Poly<C> poly_nf(const Poly<C>& f, const std::vector<Poly<C>>& gb) {
    return module_nf(ModVec<C>::from_poly(f, 0), to_rank1(gb)).to_column(1)[0];
}

template <class C>
bool in_ideal(const Poly<C>& f, const Ideal<C>& I) {
    return poly_nf(f, reduced_gb(I)).is_zero();
}

template <class C>
bool ideal_contains(const Ideal<C>& A, const Ideal<C>& B) {  // B subset of A
    auto gb = reduced_gb(A);
    for (auto& g : B.gens)
        if (!poly_nf(g, gb).is_zero()) return false;
    return true;
}

template <class C>
bool ideal_equal(const Ideal<C>& A, const Ideal<C>& B) {
    return ideal_contains(A, B) && ideal_contains(B, A);
}

// ---- variable elimination ----

// Generators of I intersected with the subring on the variables outside
// `front`. Internally reorders variables so the eliminated block comes
// first and runs a block order.
template <class C>
Ideal<C> eliminate(const Ideal<C>& I, const std::vector<int>& front) {
    const Ring& R = *I.ring;
    if (front.empty()) return I;
    std::vector<bool> is_front(R.nvars(), false);
    for (int i : front) is_front[i] = true;

    std::vector<size_t> perm;  // new position -> old index
    for (size_t i = 0; i < R.nvars(); ++i)
        if (is_front[i]) perm.push_back(i);
    for (size_t i = 0; i < R.nvars(); ++i)
        if (!is_front[i]) perm.push_back(i);

    std::vector<std::string> pvars(R.nvars());
    std::vector<std::pair<int64_t, int64_t>> pgrad(R.nvars());
    std::vector<int> to_perm(R.nvars());
    for (size_t n = 0; n < R.nvars(); ++n) {
        pvars[n] = R.var(perm[n]);
        pgrad[n] = R.grading()[perm[n]];
        to_perm[perm[n]] = static_cast<int>(n);
    }
    RingPtr work;
    if (R.bigraded())
        work = Ring::make_bigraded(R.field(), pvars, pgrad, OrderSpec::block_elim(static_cast<int>(front.size())));
    else {
        std::vector<int64_t> w(R.nvars());
        for (size_t n = 0; n < R.nvars(); ++n) w[n] = pgrad[n].first;
        work = Ring::make(R.field(), pvars, w, OrderSpec::block_elim(static_cast<int>(front.size())));
    }

    Ideal<C> J(work, {});
    for (auto& g : I.gens) J.gens.push_back(map_poly(g, work, to_perm));
    auto gb = reduced_gb(J);

    // Sub-ring on the surviving variables.
    std::vector<std::string> svars;
    std::vector<std::pair<int64_t, int64_t>> sgrad;
    for (size_t i = 0; i < R.nvars(); ++i)
        if (!is_front[i]) {
            svars.push_back(R.var(i));
            sgrad.push_back(R.grading()[i]);
        }
    RingPtr sub;
    if (R.bigraded())
        sub = Ring::make_bigraded(R.field(), svars, sgrad);
    else {
        std::vector<int64_t> w;
        for (auto& g : sgrad) w.push_back(g.first);
        sub = Ring::make(R.field(), svars, w);
    }

    auto vm = var_map_by_name(*work, *sub);
    Ideal<C> out(sub, {});
    for (auto& g : gb) {
        bool uses_front = false;
        for (auto& t : g.terms())
            for (size_t n = 0; n < front.size() && !uses_front; ++n)
                if (t.m.e[n] != 0) uses_front = true;
        if (!uses_front) out.gens.push_back(map_poly(g, sub, vm));
    }
    return out;
}

// ---- syzygies ----

template <class C>
struct SyzygyMatrix {
    std::vector<std::vector<Poly<C>>> columns;  // columns[c][generator index]
    std::vector<int64_t> twists;                // source degree per column
};

// First syzygy module of an ordered list of homogeneous polynomials.
template <class C>
SyzygyMatrix<C> syzygies(RingPtr ring, const std::vector<Poly<C>>& gens) {
    std::vector<int64_t> tw(1, 0);
    auto zs = module_syzygies<C>(ring, to_rank1(gens), &tw);
    SyzygyMatrix<C> out;
    for (auto& z : zs) {
        auto col = z.to_column(gens.size());
        int64_t deg = 0;
        for (size_t i = 0; i < col.size(); ++i)
            if (!col[i].is_zero()) {
                deg = col[i].degree().value() + gens[i].degree().value();
                break;
            }
        out.columns.push_back(std::move(col));
        out.twists.push_back(deg);
    }
    return out;
}

// ---- quotient, saturation ----

template <class C>
Ideal<C> ideal_intersect(const Ideal<C>& A, const Ideal<C>& B) {
    // Syzygies of the concatenated row [gens(A) | gens(B)]: for each relation
    // sum a_i f_i + sum b_j g_j = 0 the element sum a_i f_i lies in both.
    std::vector<Poly<C>> all = A.gens;
    all.insert(all.end(), B.gens.begin(), B.gens.end());
    auto zs = module_syzygies<C>(A.ring, to_rank1(all));
    std::vector<Poly<C>> out;
    for (auto& z : zs) {
        auto col = z.to_column(all.size());
        Poly<C> v = Poly<C>::zero(A.ring);
        for (size_t i = 0; i < A.gens.size(); ++i) v = v + col[i] * A.gens[i];
        if (!v.is_zero()) out.push_back(std::move(v));
    }
    return Ideal<C>(A.ring, minimal_generators(A.ring, out));
}

template <class C>
Ideal<C> colon_single(const Ideal<C>& I, const Poly<C>& g) {
    std::vector<Poly<C>> all;
    all.push_back(g);
    all.insert(all.end(), I.gens.begin(), I.gens.end());
    auto zs = module_syzygies<C>(I.ring, to_rank1(all));
    std::vector<Poly<C>> out;
    for (auto& z : zs) {
        auto col = z.to_column(all.size());
        if (!col[0].is_zero()) out.push_back(col[0]);
    }
    return Ideal<C>(I.ring, minimal_generators(I.ring, out));
}

template <class C>
Ideal<C> quotient(const Ideal<C>& I, const Ideal<C>& J) {
    if (J.gens.empty()) {
        // I : (0) is the whole ring.
        return Ideal<C>(I.ring, {Poly<C>::constant(I.ring, scalar_ops<C>::one(I.ring->field()))});
    }
    Ideal<C> acc = colon_single(I, J.gens[0]);
    for (size_t k = 1; k < J.gens.size(); ++k) acc = ideal_intersect(acc, colon_single(I, J.gens[k]));
    return acc;
}

template <class C>
Ideal<C> saturate(const Ideal<C>& I, const Ideal<C>& J) {
    Ideal<C> cur = I;
    for (int round = 0; round < 1000; ++round) {
        Ideal<C> nxt = quotient(cur, J);
        if (ideal_contains(cur, nxt)) return cur;  // nxt subset cur always holds the other way
        cur = nxt;
    }
    throw BudgetError("length", "saturation did not stabilize");
}

// ---- minimal generators ----

// Minimal homogeneous generating set of the ideal generated by `cands`,
// preserving input order. Fast paths: divisibility filter for monomials,
// exact linear algebra when all candidates share one degree.
template <class C>
std::vector<Poly<C>> minimal_generators(RingPtr ring, const std::vector<Poly<C>>& cands_in) {
    std::vector<Poly<C>> cands;
    for (auto& c : cands_in)
        if (!c.is_zero()) cands.push_back(c);
    if (cands.empty()) return cands;

    bool all_mono = true;
    for (auto& c : cands)
        if (c.nterms() != 1) all_mono = false;
    if (all_mono) {
        std::vector<Poly<C>> kept;
        for (size_t i = 0; i < cands.size(); ++i) {
            bool red = false;
            for (size_t j = 0; j < cands.size() && !red; ++j) {
                if (i == j) continue;
                if (mono_divides(cands[j].lm(), cands[i].lm()) &&
                    (cands[j].lm() != cands[i].lm() || j < i))
                    red = true;
            }
            if (!red) kept.push_back(cands[i].mul_scalar(cands[i].lc().inv()));
        }
        return kept;
    }

    bool equi = true;
    for (auto& c : cands)
        if (!c.is_homogeneous() || c.degree() != cands[0].degree()) equi = false;
    if (equi) {
        // One degree: minimal generators are any k-basis of the span.
        std::map<std::vector<int32_t>, size_t> colof;
        for (auto& c : cands)
            for (auto& t : c.terms()) colof.emplace(t.m.e, colof.size());
        std::vector<std::vector<C>> rows;  // reduced rows
        std::vector<size_t> pivots;
        std::vector<Poly<C>> kept;
        const size_t ncols = colof.size();
        for (auto& c : cands) {
            std::vector<C> row(ncols, C{});
            for (auto& t : c.terms()) row[colof[t.m.e]] = t.c;
            // reduce against chosen rows
            for (size_t r = 0; r < rows.size(); ++r) {
                const C& x = row[pivots[r]];
                if (x.is_zero()) continue;
                C f = x / rows[r][pivots[r]];
                for (size_t j = 0; j < ncols; ++j) row[j] = row[j] - f * rows[r][j];
            }
            size_t piv = ncols;
            for (size_t j = 0; j < ncols; ++j)
                if (!row[j].is_zero()) {
                    piv = j;
                    break;
                }
            if (piv == ncols) continue;  // dependent
            rows.push_back(std::move(row));
            pivots.push_back(piv);
            kept.push_back(c);
        }
        return kept;
    }

    // General homogeneous case: greedy normal-form filter in degree order.
    std::vector<size_t> order(cands.size());
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](size_t a, size_t b) {
        return cands[a].degree().value() < cands[b].degree().value();
    });
    std::vector<Poly<C>> kept;
    for (size_t oi : order) {
        if (kept.empty()) {
            kept.push_back(cands[oi]);
            continue;
        }
        Ideal<C> K(ring, kept);
        if (!in_ideal(cands[oi], K)) kept.push_back(cands[oi]);
    }
    return kept;
}

// ---- powers ----

// I^q by explicit q-fold products of the generators, then minimalized.
// I^0 = (1).
template <class C>
Ideal<C> ideal_power(const Ideal<C>& I, uint32_t q) {
    if (q == 0) return Ideal<C>(I.ring, {Poly<C>::constant(I.ring, scalar_ops<C>::one(I.ring->field()))});
    const size_t n = I.gens.size();
    if (n == 0) return I;
    std::vector<Poly<C>> products;
    std::vector<uint32_t> pick(q, 0);  // nondecreasing index multisets
    while (true) {
        Poly<C> p = I.gens[pick[0]];
        for (uint32_t t = 1; t < q; ++t) p = p * I.gens[pick[t]];
        products.push_back(std::move(p));
        // next multiset
        int pos = static_cast<int>(q) - 1;
        while (pos >= 0 && pick[pos] == n - 1) --pos;
        if (pos < 0) break;
        uint32_t v = pick[pos] + 1;
        for (uint32_t t = pos; t < q; ++t) pick[t] = v;
    }
    return Ideal<C>(I.ring, minimal_generators(I.ring, products));
}

// ---- dimension from lead terms ----

// Krull dimension of S/(monomial ideal): the largest coordinate subspace
// avoiding every generator's support; -1 for the unit ideal.
inline int64_t dim_monomial_quotient(size_t nvars, const std::vector<Monomial>& gens) {
    for (auto& g : gens)
        if (g.is_one()) return -1;
    if (nvars > 25) throw BudgetError("basis", "too many variables for support enumeration");
    std::vector<uint32_t> supp;
    supp.reserve(gens.size());
    for (auto& g : gens) {
        uint32_t s = 0;
        for (size_t i = 0; i < nvars; ++i)
            if (g.e[i] > 0) s |= (1u << i);
        supp.push_back(s);
    }
    int64_t best = -1;
    for (uint32_t z = 0; z < (1u << nvars); ++z) {
        bool ok = true;
        for (uint32_t s : supp)
            if ((s & ~z) == 0) {
                ok = false;
                break;
            }
        if (ok) best = std::max<int64_t>(best, __builtin_popcount(z));
    }
    return best;
}

// dim of S/I computed from the lead-term ideal of a Gröbner basis.
template <class C>
int64_t dim_quotient(const Ideal<C>& I) {
    auto gb = reduced_gb(I);
    std::vector<Monomial> lead;
    lead.reserve(gb.size());
    for (auto& g : gb) lead.push_back(g.lm());
    return dim_monomial_quotient(I.ring->nvars(), lead);
}

// An ideal is irrelevant-primary when the quotient is finite over the field.
template <class C>
bool is_m_primary(const Ideal<C>& I) {
    return dim_quotient(I) == 0;
}

}  // namespace regpow

#endif
