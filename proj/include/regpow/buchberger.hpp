#ifndef REGPOW_BUCHBERGER_HPP
#define REGPOW_BUCHBERGER_HPP

#include <cstdint>
#include <set>
#include <unordered_set>
#include <utility>
#include <vector>

#include "regpow/budget.hpp"
#include "regpow/modvec.hpp"

namespace regpow {

// Buchberger engine over free modules (an ideal is the rank-1 case).
// Deterministic: sugar-first pair selection with creation-index tiebreak,
// first-divisor reduction, canonical output normalization.

// Full normal form of v against basis; no term of the result is divisible by
// a basis lead term (same component, monomial divisibility).
template <class C>
ModVec<C> module_nf(const ModVec<C>& v, const std::vector<ModVec<C>>& basis) {
    if (v.is_zero() || basis.empty()) return v;
    ModVec<C> h = v;
    std::vector<MTerm<C>> rem;
    while (!h.is_zero()) {
        current_budget().check_time();
        const MTerm<C>& lt = h.lt();
        bool divided = false;
        for (const auto& g : basis) {
            if (g.is_zero()) continue;
            const MTerm<C>& glt = g.lt();
            if (glt.comp != lt.comp || !mono_divides(glt.m, lt.m)) continue;
            C q = lt.c / glt.c;
            h = h - g.mul_term(q, mono_div(lt.m, glt.m));
            divided = true;
            break;
        }
        if (!divided) {
            rem.push_back(lt);
            h = h - ModVec<C>::from_terms(v.ring(), {lt});
        }
    }
    return ModVec<C>::from_terms(v.ring(), std::move(rem));
}

// Normal form recording the quotients: v = sum_k quot[k] * basis[k] + result.
template <class C>
ModVec<C> module_nf_tracked(const ModVec<C>& v, const std::vector<ModVec<C>>& basis,
                            std::vector<std::vector<Term<C>>>& quot) {
    quot.assign(basis.size(), {});
    if (v.is_zero()) return v;
    ModVec<C> h = v;
    std::vector<MTerm<C>> rem;
    while (!h.is_zero()) {
        current_budget().check_time();
        const MTerm<C>& lt = h.lt();
        bool divided = false;
        for (size_t k = 0; k < basis.size(); ++k) {
            const auto& g = basis[k];
            if (g.is_zero()) continue;
            const MTerm<C>& glt = g.lt();
            if (glt.comp != lt.comp || !mono_divides(glt.m, lt.m)) continue;
            C q = lt.c / glt.c;
            Monomial qm = mono_div(lt.m, glt.m);
            h = h - g.mul_term(q, qm);
            quot[k].push_back({q, qm});
            divided = true;
            break;
        }
        if (!divided) {
            rem.push_back(lt);
            h = h - ModVec<C>::from_terms(v.ring(), {lt});
        }
    }
    return ModVec<C>::from_terms(v.ring(), std::move(rem));
}

template <class C>
ModVec<C> s_vector(const ModVec<C>& f, const ModVec<C>& g) {
    const Ring& ring = *f.ring();
    const MTerm<C>& a = f.lt();
    const MTerm<C>& b = g.lt();
    Monomial l = mono_lcm(ring, a.m, b.m);
    return f.mul_term(a.c.inv(), mono_div(l, a.m)) - g.mul_term(b.c.inv(), mono_div(l, b.m));
}

namespace detail {

struct PairKey {
    int64_t sugar;
    uint64_t idx;
    size_t i, j;
    bool operator<(const PairKey& o) const {
        if (sugar != o.sugar) return sugar < o.sugar;
        return idx < o.idx;
    }
};

template <class C>
struct Engine {
    RingPtr ring;
    bool track;
    std::vector<ModVec<C>> basis;
    std::vector<ModVec<C>> rep;  // coordinates over the input generators (track mode)
    std::vector<int64_t> sugar;
    std::set<PairKey> pairs;
    uint64_t next_idx = 0;
    bool use_product_criterion = false;  // valid for rank-1 (ideal) input only

    void add_pairs_for(size_t newi) {
        const auto& h = basis[newi];
        const MTerm<C>& hl = h.lt();
        struct Cand {
            size_t k;
            Monomial l;
            int64_t s;
            bool keep = true;
        };
        std::vector<Cand> cands;
        for (size_t k = 0; k < newi; ++k) {
            if (basis[k].is_zero()) continue;
            const MTerm<C>& kl = basis[k].lt();
            if (kl.comp != hl.comp) continue;
            Monomial l = mono_lcm(*ring, kl.m, hl.m);
            int64_t s = std::max(sugar[k] + l.d1 - kl.m.d1, sugar[newi] + l.d1 - hl.m.d1);
            cands.push_back({k, std::move(l), s});
        }
        // Chain criterion against existing pairs.
        for (auto it = pairs.begin(); it != pairs.end();) {
            const auto& p = *it;
            const MTerm<C>& il = basis[p.i].lt();
            const MTerm<C>& jl = basis[p.j].lt();
            if (il.comp == hl.comp) {
                Monomial lij = mono_lcm(*ring, il.m, jl.m);
                if (mono_divides(hl.m, lij)) {
                    Monomial lih = mono_lcm(*ring, il.m, hl.m);
                    Monomial lhj = mono_lcm(*ring, hl.m, jl.m);
                    if (lih != lij && lhj != lij) {
                        it = pairs.erase(it);
                        continue;
                    }
                }
            }
            ++it;
        }
        // Keep only lcm-minimal new pairs.
        std::vector<size_t> order(cands.size());
        for (size_t i = 0; i < order.size(); ++i) order[i] = i;
        std::stable_sort(order.begin(), order.end(),
                         [&](size_t a, size_t b) { return cands[a].l.d1 < cands[b].l.d1; });
        std::vector<size_t> kept;
        for (size_t oi : order) {
            bool elim = false;
            for (size_t kj : kept) {
                if (mono_divides(cands[kj].l, cands[oi].l) && cands[kj].l != cands[oi].l) {
                    elim = true;
                    break;
                }
            }
            if (elim) cands[oi].keep = false;
            else kept.push_back(oi);
        }
        for (auto& cd : cands) {
            if (!cd.keep) continue;
            if (use_product_criterion && mono_coprime(basis[cd.k].lt().m, hl.m)) continue;
            pairs.insert({cd.s, next_idx++, cd.k, newi});
        }
    }

    void add_element(ModVec<C> v, ModVec<C> r, int64_t s) {
        if (track) {
            C f = primitive_factor(v);
            v = v.mul_scalar(f);
            r = r.mul_scalar(f);
        } else {
            v = make_primitive(v);
        }
        basis.push_back(std::move(v));
        rep.push_back(std::move(r));
        sugar.push_back(s);
        current_budget().check_basis(basis.size());
        add_pairs_for(basis.size() - 1);
    }

    void complete() {
        while (!pairs.empty()) {
            current_budget().check_time();
            PairKey p = *pairs.begin();
            pairs.erase(pairs.begin());
            current_budget().check_degree(p.sugar);
            const auto& f = basis[p.i];
            const auto& g = basis[p.j];
            Monomial l = mono_lcm(*ring, f.lt().m, g.lt().m);
            ModVec<C> s = f.mul_term(f.lt().c.inv(), mono_div(l, f.lt().m)) -
                          g.mul_term(g.lt().c.inv(), mono_div(l, g.lt().m));
            int64_t hsugar = p.sugar;
            ModVec<C> r;
            if (track) {
                std::vector<std::vector<Term<C>>> quot;
                ModVec<C> red = module_nf_tracked(s, basis, quot);
                if (red.is_zero()) continue;
                // rep of the reduced S-vector over the inputs
                ModVec<C> rr = rep[p.i].mul_term(f.lt().c.inv(), mono_div(l, f.lt().m)) -
                               rep[p.j].mul_term(g.lt().c.inv(), mono_div(l, g.lt().m));
                for (size_t k = 0; k < quot.size(); ++k)
                    for (auto& q : quot[k]) rr = rr - rep[k].mul_term(q.c, q.m);
                add_element(std::move(red), std::move(rr), hsugar);
            } else {
                ModVec<C> red = module_nf(s, basis);
                if (red.is_zero()) continue;
                add_element(std::move(red), ModVec<C>(ring), hsugar);
            }
        }
    }
};

}  // namespace detail

// Reduced Gröbner basis of the submodule generated by gens: lead terms
// pairwise non-divisible, tails fully reduced, monic, sorted by lead term.
template <class C>
std::vector<ModVec<C>> module_groebner(RingPtr ring, const std::vector<ModVec<C>>& gens,
                                       const std::vector<int64_t>* twists = nullptr) {
    detail::Engine<C> e;
    e.ring = ring;
    e.track = false;
    e.use_product_criterion = true;
    for (const auto& g : gens) {
        if (g.is_zero()) continue;
        if (g.max_comp() > 0) e.use_product_criterion = false;
        int64_t s = twists ? g.degree_ub(*twists) : g.degree_ub(std::vector<int64_t>(g.max_comp() + 1, 0));
        e.add_element(g, ModVec<C>(ring), s);
    }
    e.complete();

    // Minimalize: drop elements whose lead is divisible by another lead.
    std::vector<ModVec<C>> kept;
    for (size_t i = 0; i < e.basis.size(); ++i) {
        bool redundant = false;
        for (size_t j = 0; j < e.basis.size(); ++j) {
            if (i == j) continue;
            const auto& a = e.basis[i].lt();
            const auto& b = e.basis[j].lt();
            if (a.comp == b.comp && mono_divides(b.m, a.m) && !(j > i && a.m == b.m)) {
                redundant = true;
                break;
            }
        }
        if (!redundant) kept.push_back(e.basis[i]);
    }
    // Tail-reduce each against the others; make monic.
    std::vector<ModVec<C>> out;
    for (size_t i = 0; i < kept.size(); ++i) {
        std::vector<ModVec<C>> others;
        others.reserve(kept.size() - 1);
        for (size_t j = 0; j < kept.size(); ++j)
            if (j != i) others.push_back(kept[j]);
        ModVec<C> r = module_nf(kept[i], others);
        out.push_back(r.mul_scalar(r.lt().c.inv()));
    }
    std::sort(out.begin(), out.end(), [&](const ModVec<C>& a, const ModVec<C>& b) {
        return cmp_mterm(*ring, a.lt(), b.lt()) < 0;
    });
    return out;
}

// Minimal homogeneous generating set of the submodule generated by `vecs`
// inside the free module with the given component twists: candidates are
// taken in degree order and kept exactly when they do not reduce to zero
// against the incrementally completed basis of the kept ones (graded
// Nakayama). Falls back to the input when some candidate is inhomogeneous.
template <class C>
std::vector<ModVec<C>> minimalize_module_generators(RingPtr ring, std::vector<ModVec<C>> vecs,
                                                    const std::vector<int64_t>& twists) {
    std::vector<int64_t> degs(vecs.size());
    for (size_t i = 0; i < vecs.size(); ++i) {
        if (vecs[i].is_zero()) return vecs;
        if (!vecs[i].homogeneous_degree(twists, degs[i])) return vecs;
    }
    std::vector<size_t> order(vecs.size());
    for (size_t i = 0; i < order.size(); ++i) order[i] = i;
    std::stable_sort(order.begin(), order.end(), [&](size_t a, size_t b) { return degs[a] < degs[b]; });

    detail::Engine<C> e;
    e.ring = ring;
    e.track = false;
    std::vector<ModVec<C>> kept;
    for (size_t oi : order) {
        ModVec<C> h = module_nf(vecs[oi], e.basis);
        if (h.is_zero()) continue;
        kept.push_back(vecs[oi]);
        e.add_element(std::move(h), ModVec<C>(ring), degs[oi]);
        e.complete();
    }
    return kept;
}

// Generators of the syzygy module of `gens` (a subset of a free module over
// ring): vectors z with sum_k z_k * gens[k] = 0, as elements of the free
// module with one component per generator. Schreyer-style: complete to a
// Gröbner basis with coordinate tracking, then push every S-pair relation of
// the completed basis back to input coordinates. With twists given and
// homogeneous input the result is a minimal generating set.
template <class C>
std::vector<ModVec<C>> module_syzygies(RingPtr ring, const std::vector<ModVec<C>>& gens,
                                       const std::vector<int64_t>* twists = nullptr) {
    detail::Engine<C> e;
    e.ring = ring;
    e.track = true;
    std::vector<ModVec<C>> out;
    for (size_t i = 0; i < gens.size(); ++i) {
        if (gens[i].is_zero()) {
            // A zero generator contributes the coordinate vector itself.
            out.push_back(ModVec<C>::from_terms(
                ring, {{scalar_ops<C>::one(ring->field()), ring->mono_one(), static_cast<int32_t>(i)}}));
            continue;
        }
        int64_t s = twists ? gens[i].degree_ub(*twists)
                           : gens[i].degree_ub(std::vector<int64_t>(gens[i].max_comp() + 1, 0));
        e.add_element(gens[i],
                      ModVec<C>::from_terms(ring, {{scalar_ops<C>::one(ring->field()), ring->mono_one(),
                                                    static_cast<int32_t>(i)}}),
                      s);
    }
    e.complete();

    std::unordered_set<std::string> seen;
    auto emit = [&](ModVec<C> z) {
        if (z.is_zero()) return;
        z = make_primitive(z);
        std::string key;
        for (auto& t : z.terms()) {
            key += t.c.str();
            key += ':';
            for (auto x : t.m.e) {
                key += std::to_string(x);
                key += ',';
            }
            key += '#';
            key += std::to_string(t.comp);
            key += ';';
        }
        if (seen.insert(std::move(key)).second) out.push_back(std::move(z));
    };

    const auto& B = e.basis;
    // Chain elimination: a pair whose lcm strictly factors through another
    // lead contributes a syzygy generated by the two shorter ones. The
    // properness condition keeps the divisibility poset acyclic.
    auto chain_redundant = [&](size_t i, size_t j, const Monomial& lij) {
        for (size_t k = 0; k < B.size(); ++k) {
            if (k == i || k == j) continue;
            const auto& kl = B[k].lt();
            if (kl.comp != B[i].lt().comp || !mono_divides(kl.m, lij)) continue;
            if (mono_lcm(*ring, B[i].lt().m, kl.m) != lij &&
                mono_lcm(*ring, kl.m, B[j].lt().m) != lij)
                return true;
        }
        return false;
    };
    for (size_t i = 0; i < B.size(); ++i) {
        for (size_t j = i + 1; j < B.size(); ++j) {
            if (B[i].lt().comp != B[j].lt().comp) continue;
            current_budget().check_time();
            Monomial l = mono_lcm(*ring, B[i].lt().m, B[j].lt().m);
            if (chain_redundant(i, j, l)) continue;
            C ci = B[i].lt().c.inv();
            C cj = B[j].lt().c.inv();
            Monomial mi = mono_div(l, B[i].lt().m);
            Monomial mj = mono_div(l, B[j].lt().m);
            ModVec<C> s = B[i].mul_term(ci, mi) - B[j].mul_term(cj, mj);
            std::vector<std::vector<Term<C>>> quot;
            ModVec<C> r = module_nf_tracked(s, B, quot);
            if (!r.is_zero()) throw Error("internal: S-pair of a completed basis did not reduce to zero");
            ModVec<C> z = e.rep[i].mul_term(ci, mi) - e.rep[j].mul_term(cj, mj);
            for (size_t k = 0; k < quot.size(); ++k)
                for (auto& q : quot[k]) z = z - e.rep[k].mul_term(q.c, q.m);
            emit(std::move(z));
        }
    }
    if (twists) {
        std::vector<int64_t> gen_degs;
        gen_degs.reserve(gens.size());
        bool homog = true;
        for (auto& g : gens) {
            int64_t d = 0;
            if (!g.is_zero() && !g.homogeneous_degree(*twists, d)) homog = false;
            gen_degs.push_back(g.is_zero() ? 0 : d);
        }
        if (homog) return minimalize_module_generators(ring, std::move(out), gen_degs);
    }
    return out;
}

// Exhaustive Buchberger criterion check: every S-pair of gb reduces to zero.
template <class C>
bool verify_buchberger(const std::vector<ModVec<C>>& gb) {
    for (size_t i = 0; i < gb.size(); ++i)
        for (size_t j = i + 1; j < gb.size(); ++j) {
            if (gb[i].lt().comp != gb[j].lt().comp) continue;
            if (!module_nf(s_vector(gb[i], gb[j]), gb).is_zero()) return false;
        }
    return true;
}

}  // namespace regpow

#endif
