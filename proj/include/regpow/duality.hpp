#ifndef REGPOW_DUALITY_HPP
#define REGPOW_DUALITY_HPP

#include <map>

#include "regpow/resolution.hpp"

namespace regpow {

// ---- Hilbert functions ----

// Enumerates monomials of exact weighted degree and counts those avoiding a
// monomial ideal. Degrees here are small; memoized per instance.
class MonomialCounter {
  public:
    MonomialCounter(RingPtr ring, std::vector<Monomial> lead) : ring_(std::move(ring)), lead_(std::move(lead)) {}

    int64_t count(int64_t deg) const {
        if (deg < 0) return 0;
        auto it = memo_.find(deg);
        if (it != memo_.end()) return it->second;
        std::vector<int32_t> e(ring_->nvars(), 0);
        int64_t n = rec(0, deg, e);
        memo_[deg] = n;
        return n;
    }

  private:
    int64_t rec(size_t var, int64_t remaining, std::vector<int32_t>& e) const {
        if (var == ring_->nvars()) {
            if (remaining != 0) return 0;
            for (auto& g : lead_) {
                bool div = true;
                for (size_t i = 0; i < e.size(); ++i)
                    if (g.e[i] > e[i]) {
                        div = false;
                        break;
                    }
                if (div) return 0;
            }
            return 1;
        }
        int64_t w = ring_->weight1(var);
        int64_t out = 0;
        for (int64_t k = 0; k * w <= remaining; ++k) {
            e[var] = static_cast<int32_t>(k);
            out += rec(var + 1, remaining - k * w, e);
        }
        e[var] = 0;
        return out;
    }

    RingPtr ring_;
    std::vector<Monomial> lead_;
    mutable std::map<int64_t, int64_t> memo_;
};

// Graded dimension counter for a presented module: dim M_n via lead terms of
// a module Groebner basis of the relations.
template <class C>
class ModuleHF {
  public:
    explicit ModuleHF(const Presentation<C>& p) : ring_(p.ring), gens_(p.gens) {
        std::vector<std::vector<Monomial>> lead(p.gens.size());
        if (!p.rel.empty()) {
            std::vector<ModVec<C>> cols;
            cols.reserve(p.rel.size());
            for (auto& col : p.rel) cols.push_back(ModVec<C>::from_column(p.ring, col));
            std::vector<int64_t> tw;
            for (auto& g : p.gens) tw.push_back(g.d1);
            auto gb = module_groebner<C>(p.ring, cols, &tw);
            for (auto& v : gb) lead[v.lt().comp].push_back(v.lt().m);
        }
        counters_.reserve(p.gens.size());
        for (size_t i = 0; i < p.gens.size(); ++i) counters_.emplace_back(p.ring, lead[i]);
        lead_ = std::move(lead);
    }

    int64_t eval(int64_t n) const {
        int64_t s = 0;
        for (size_t i = 0; i < counters_.size(); ++i) s += counters_[i].count(n - gens_[i].d1);
        return s;
    }

    const std::vector<std::vector<Monomial>>& lead_terms() const { return lead_; }
    const std::vector<GDeg>& gens() const { return gens_; }
    const RingPtr& ring() const { return ring_; }

    // Krull dimension of the module from lead-term supports; -1 for zero.
    int64_t krull_dim() const {
        int64_t d = -1;
        for (size_t i = 0; i < counters_.size(); ++i)
            d = std::max(d, dim_monomial_quotient(ring_->nvars(), lead_[i]));
        return d;
    }

  private:
    RingPtr ring_;
    std::vector<GDeg> gens_;
    std::vector<std::vector<Monomial>> lead_;
    std::vector<MonomialCounter> counters_;
};

template <class C>
std::vector<int64_t> hilbert_function(const Presentation<C>& p, int64_t lo, int64_t hi) {
    ModuleHF<C> hf(p);
    std::vector<int64_t> out;
    for (int64_t n = lo; n <= hi; ++n) out.push_back(hf.eval(n));
    return out;
}

// ---- Hilbert polynomial (standard gradings) ----

// Newton-form polynomial fitted from consecutive exact values; degree at
// most nvars-1. Fit is taken above the regularity and verified on two extra
// points, so there is no stabilization guessing.
struct HilbertPolynomial {
    int64_t n0 = 0;
    std::vector<Rat> diffs;  // finite differences at n0

    Rat eval(int64_t n) const {
        // sum_k diffs[k] * binom(n - n0, k)
        Rat acc(0);
        Rat binom(1);
        for (size_t k = 0; k < diffs.size(); ++k) {
            if (k > 0) binom = binom * Rat(n - n0 - static_cast<int64_t>(k) + 1) / Rat(static_cast<long>(k));
            acc = acc + diffs[k] * binom;
        }
        return acc;
    }
    int64_t degree() const {  // -1 for the zero polynomial
        for (size_t k = diffs.size(); k-- > 0;)
            if (!diffs[k].is_zero()) return static_cast<int64_t>(k);
        return -1;
    }
};

template <class C>
HilbertPolynomial fit_hilbert_polynomial(const ModuleHF<C>& hf, ExtInt reg) {
    const int64_t N = static_cast<int64_t>(hf.ring()->nvars());
    const int64_t r = reg.finite() ? reg.value() : 0;
    const int64_t n0 = r + 1;
    const int64_t cnt = std::max<int64_t>(N + 2, N + std::max<int64_t>(r, 0) + 2);
    std::vector<Rat> vals;
    for (int64_t n = n0; n < n0 + cnt; ++n) vals.push_back(Rat(static_cast<long>(hf.eval(n))));
    // forward differences
    HilbertPolynomial P;
    P.n0 = n0;
    std::vector<Rat> row = vals;
    for (int64_t k = 0; k < cnt; ++k) {
        P.diffs.push_back(row[0]);
        if (static_cast<int64_t>(P.diffs.size()) > N + 1) break;
        std::vector<Rat> nxt;
        for (size_t i = 0; i + 1 < row.size(); ++i) nxt.push_back(row[i + 1] - row[i]);
        if (nxt.empty()) break;
        bool all0 = true;
        for (auto& v : nxt)
            if (!v.is_zero()) all0 = false;
        row = std::move(nxt);
        if (all0) break;
    }
    for (int64_t n = n0 + cnt; n < n0 + cnt + 2; ++n)
        if (!(P.eval(n) == Rat(static_cast<long>(hf.eval(n)))))
            throw Error("internal: Hilbert polynomial fit failed verification");
    return P;
}

// ---- Ext and local duality ----

// Ext^j(M, S) as a graded module: cohomology of the dualized minimal free
// resolution at position j.
template <class C>
Presentation<C> ext_module(const Resolution<C>& R, size_t j) {
    const RingPtr& ring = R.ring;
    if (R.twists.empty() || R.twists[0].empty() || j > R.length())
        return presentation_free<C>(ring, {});
    const size_t nj = R.rank(j);

    // dual twists
    std::vector<GDeg> dual_j;
    for (auto& t : R.twists[j]) dual_j.push_back(-t);

    // delta_{j+1}: columns indexed by F_j* basis, living in F_{j+1}*
    std::vector<ModVec<C>> cols_next(nj, ModVec<C>(ring));
    if (j < R.length()) {
        const auto& d = R.maps[j];  // F_{j+1} -> F_j, d[c][r]
        for (size_t b = 0; b < nj; ++b) {
            std::vector<Poly<C>> col;
            col.reserve(d.size());
            for (size_t a = 0; a < d.size(); ++a) col.push_back(d[a][b]);
            cols_next[b] = ModVec<C>::from_column(ring, col);
        }
    }
    std::vector<int64_t> tw_next;
    if (j < R.length())
        for (auto& t : R.twists[j + 1]) tw_next.push_back(-t.d1);
    auto K = module_syzygies<C>(ring, cols_next, j < R.length() ? &tw_next : nullptr);
    if (K.empty()) return presentation_free<C>(ring, {});

    std::vector<GDeg> ktw;
    std::vector<std::vector<Poly<C>>> kcols;
    for (auto& z : K) {
        auto col = z.to_column(nj);
        ktw.push_back(column_gdeg(col, dual_j));
        kcols.push_back(std::move(col));
    }

    // relations: coordinates of ker-generators modulo im(delta_j)
    std::vector<ModVec<C>> all;
    for (auto& c : kcols) all.push_back(ModVec<C>::from_column(ring, c));
    size_t nK = all.size();
    if (j > 0) {
        const auto& d = R.maps[j - 1];  // F_j -> F_{j-1}
        const size_t rows_prev = R.twists[j - 1].size();
        for (size_t b = 0; b < rows_prev; ++b) {
            std::vector<Poly<C>> col;
            col.reserve(d.size());
            for (size_t a = 0; a < d.size(); ++a) col.push_back(d[a][b]);
            all.push_back(ModVec<C>::from_column(ring, col));
        }
    }
    std::vector<int64_t> tw_j;
    for (auto& t : dual_j) tw_j.push_back(t.d1);
    auto Z = module_syzygies<C>(ring, all, &tw_j);

    Presentation<C> p;
    p.ring = ring;
    p.gens = ktw;
    for (auto& z : Z) {
        auto col = z.to_column(all.size());
        std::vector<Poly<C>> head(col.begin(), col.begin() + nK);
        bool zero = true;
        for (auto& e : head)
            if (!e.is_zero()) zero = false;
        if (zero) continue;
        p.reldeg.push_back(column_gdeg(head, ktw));
        p.rel.push_back(std::move(head));
    }
    return minimal_presentation(p);
}

// ---- a-invariants via graded local duality ----

// a^i(M) = -indeg Ext^{N-i}(M, S) - (sum of variable weights); the table
// keeps the minimal Ext presentations so graded pieces of local cohomology
// can be evaluated exactly on any window.
template <class C>
class LocalCohomology {
  public:
    explicit LocalCohomology(const Presentation<C>& M) {
        ring_ = M.ring;
        N_ = static_cast<int64_t>(ring_->nvars());
        shift_ = ring_->weight_sum1();
        res_ = free_resolution(M);
        zero_ = res_.twists[0].empty();
        ext_.resize(N_ + 1);
        a_.assign(N_ + 1, ExtInt::neg_inf());
        for (size_t j = 0; j <= static_cast<size_t>(N_); ++j) {
            if (zero_ || j > res_.length()) {
                ext_[j] = presentation_free<C>(ring_, {});
                continue;
            }
            ext_[j] = ext_module(res_, j);
            if (!ext_[j].is_zero()) {
                int64_t indeg = ext_[j].gens[0].d1;
                for (auto& g : ext_[j].gens) indeg = std::min(indeg, g.d1);
                a_[N_ - j] = ExtInt(-indeg - shift_);
            }
        }
        a_star_ = ExtInt::neg_inf();
        reg_ = ExtInt::neg_inf();
        for (int64_t i = 0; i <= N_; ++i) {
            a_star_ = max(a_star_, a_[i]);
            reg_ = max(reg_, a_[i] + i);
        }
        // independent cross-check against the Betti-side regularity
        bool standard = true;
        for (size_t v = 0; v < ring_->nvars(); ++v)
            if (ring_->weight1(v) != 1) standard = false;
        if (standard && regularity_betti(res_) != reg_)
            throw Error("internal: duality regularity disagrees with Betti regularity");
    }

    const Resolution<C>& resolution() const { return res_; }
    int64_t N() const { return N_; }
    bool is_zero_module() const { return zero_; }
    ExtInt a(size_t i) const { return i <= static_cast<size_t>(N_) ? a_[i] : ExtInt::neg_inf(); }
    const std::vector<ExtInt>& a_all() const { return a_; }
    ExtInt a_star() const { return a_star_; }
    ExtInt reg() const { return reg_; }

    // dim_k [H^i_m(M)]_n
    int64_t h_dim(size_t i, int64_t n) const {
        if (i > static_cast<size_t>(N_)) return 0;
        const auto& E = ext_[N_ - i];
        if (E.is_zero()) return 0;
        auto it = hf_.find(N_ - i);
        if (it == hf_.end()) it = hf_.emplace(N_ - i, ModuleHF<C>(E)).first;
        return it->second.eval(-n - shift_);
    }

    const Presentation<C>& ext(size_t j) const { return ext_[j]; }

  private:
    RingPtr ring_;
    int64_t N_ = 0;
    int64_t shift_ = 0;
    bool zero_ = false;
    Resolution<C> res_;
    std::vector<Presentation<C>> ext_;
    std::vector<ExtInt> a_;
    ExtInt a_star_, reg_;
    mutable std::map<size_t, ModuleHF<C>> hf_;
};

// ---- depth, dimension, Cohen-Macaulay and Gorenstein tests ----

struct DepthInfo {
    bool zero_module = false;
    int64_t depth = 0;
    int64_t dim = 0;
    int64_t pd = 0;
    bool cohen_macaulay = false;
    bool gorenstein = false;
};

template <class C>
DepthInfo depth_and_cm(const Presentation<C>& M) {
    DepthInfo info;
    Resolution<C> res = free_resolution(M);
    if (res.twists[0].empty()) {
        info.zero_module = true;
        return info;
    }
    const int64_t N = static_cast<int64_t>(M.ring->nvars());
    info.pd = static_cast<int64_t>(res.length());
    info.depth = N - info.pd;  // Auslander-Buchsbaum
    Presentation<C> pruned;
    pruned.ring = M.ring;
    pruned.gens = res.twists[0];
    if (!res.maps.empty()) {
        pruned.rel = res.maps[0];
        pruned.reldeg = res.twists[1];
    }
    ModuleHF<C> hf(pruned);
    info.dim = hf.krull_dim();
    // cross-check dimension against the Hilbert polynomial degree where the
    // grading is standard
    bool standard = true;
    for (size_t v = 0; v < M.ring->nvars(); ++v)
        if (M.ring->weight1(v) != 1) standard = false;
    if (standard) {
        auto P = fit_hilbert_polynomial(hf, regularity_betti(res));
        if (P.degree() + 1 != info.dim)
            throw Error("internal: Hilbert polynomial degree disagrees with lead-term dimension");
    }
    info.cohen_macaulay = info.depth == info.dim;
    int64_t last_betti = static_cast<int64_t>(res.twists.back().size());
    info.gorenstein = info.cohen_macaulay && last_betti == 1;
    return info;
}

// Ext^c(M, S) twisted by the sum of the variable degrees, c = codim M.
template <class C>
Presentation<C> canonical_module(const Presentation<C>& M) {
    DepthInfo info = depth_and_cm(M);
    if (info.zero_module) throw NotCMError("zero module has no canonical module");
    if (!info.cohen_macaulay) throw NotCMError("module is not Cohen-Macaulay");
    const int64_t N = static_cast<int64_t>(M.ring->nvars());
    const int64_t c = N - info.dim;
    Resolution<C> res = free_resolution(M);
    Presentation<C> E = ext_module(res, static_cast<size_t>(c));
    return shift_presentation(E, GDeg(M.ring->weight_sum1(), M.ring->weight_sum2()));
}

}  // namespace regpow

#endif
