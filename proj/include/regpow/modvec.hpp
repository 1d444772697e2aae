#ifndef REGPOW_MODVEC_HPP
#define REGPOW_MODVEC_HPP

#include <algorithm>
#include <utility>
#include <vector>

#include "regpow/poly.hpp"

namespace regpow {

template <class C>
struct MTerm {
    C c;
    Monomial m;
    int32_t comp;
};

// Term order on free-module terms: monomials compared in the ring's order,
// ties broken toward the lower component (term-over-position).
template <class C>
int cmp_mterm(const Ring& ring, const MTerm<C>& a, const MTerm<C>& b) {
    int c = cmp_mono(ring, a.m, b.m);
    if (c) return c;
    if (a.comp != b.comp) return a.comp < b.comp ? 1 : -1;
    return 0;
}

// Element of a free module over the ring, terms strictly decreasing.
template <class C>
class ModVec {
  public:
    ModVec() = default;
    explicit ModVec(RingPtr ring) : ring_(std::move(ring)) {}

    static ModVec zero(RingPtr ring) { return ModVec(std::move(ring)); }
    static ModVec from_terms(RingPtr ring, std::vector<MTerm<C>> terms) {
        ModVec v(std::move(ring));
        std::sort(terms.begin(), terms.end(),
                  [&](const MTerm<C>& a, const MTerm<C>& b) { return cmp_mterm(*v.ring_, a, b) > 0; });
        for (auto& t : terms) {
            if (t.c.is_zero()) continue;
            if (!v.t_.empty() && v.t_.back().m == t.m && v.t_.back().comp == t.comp) {
                C s = v.t_.back().c + t.c;
                if (s.is_zero())
                    v.t_.pop_back();
                else
                    v.t_.back().c = std::move(s);
            } else {
                v.t_.push_back(std::move(t));
            }
        }
        return v;
    }
    static ModVec from_poly(const Poly<C>& p, int32_t comp) {
        ModVec v(p.ring());
        v.t_.reserve(p.nterms());
        for (auto& t : p.terms()) v.t_.push_back({t.c, t.m, comp});
        return v;
    }
    // Column vector (one polynomial per component) to module element.
    static ModVec from_column(RingPtr ring, const std::vector<Poly<C>>& col) {
        std::vector<MTerm<C>> ts;
        for (size_t i = 0; i < col.size(); ++i)
            for (auto& t : col[i].terms()) ts.push_back({t.c, t.m, static_cast<int32_t>(i)});
        return from_terms(std::move(ring), std::move(ts));
    }

    const RingPtr& ring() const { return ring_; }
    const std::vector<MTerm<C>>& terms() const { return t_; }
    bool is_zero() const { return t_.empty(); }
    const MTerm<C>& lt() const { return t_.front(); }

    std::vector<Poly<C>> to_column(size_t ncomp) const {
        std::vector<std::vector<Term<C>>> buf(ncomp);
        for (auto& t : t_) buf[t.comp].push_back({t.c, t.m});
        std::vector<Poly<C>> col;
        col.reserve(ncomp);
        for (auto& b : buf) col.push_back(Poly<C>::from_terms(ring_, std::move(b)));
        return col;
    }

    ModVec operator-() const {
        ModVec v(ring_);
        v.t_.reserve(t_.size());
        for (auto& t : t_) v.t_.push_back({-t.c, t.m, t.comp});
        return v;
    }
    friend ModVec operator+(const ModVec& a, const ModVec& b) { return merge(a, b, false); }
    friend ModVec operator-(const ModVec& a, const ModVec& b) { return merge(a, b, true); }

    ModVec mul_term(const C& c, const Monomial& m) const {
        ModVec v(ring_);
        if (c.is_zero()) return v;
        v.t_.reserve(t_.size());
        for (auto& t : t_) v.t_.push_back({t.c * c, mono_mul(t.m, m), t.comp});
        return v;
    }
    ModVec mul_scalar(const C& c) const {
        ModVec v(ring_);
        if (c.is_zero()) return v;
        v.t_.reserve(t_.size());
        for (auto& t : t_) v.t_.push_back({t.c * c, t.m, t.comp});
        return v;
    }
    ModVec mul_poly(const Poly<C>& p) const {
        std::vector<MTerm<C>> ts;
        ts.reserve(t_.size() * p.nterms());
        for (auto& s : p.terms())
            for (auto& t : t_) ts.push_back({t.c * s.c, mono_mul(t.m, s.m), t.comp});
        return from_terms(ring_, std::move(ts));
    }

    friend bool operator==(const ModVec& a, const ModVec& b) {
        if (a.t_.size() != b.t_.size()) return false;
        for (size_t i = 0; i < a.t_.size(); ++i)
            if (!(a.t_[i].c == b.t_[i].c) || a.t_[i].m != b.t_[i].m || a.t_[i].comp != b.t_[i].comp)
                return false;
        return true;
    }

    // Degree of a term against component twists: deg(m) + twist[comp].
    bool homogeneous_degree(const std::vector<int64_t>& twists, int64_t& out) const {
        if (t_.empty()) return false;
        out = t_[0].m.d1 + twists[t_[0].comp];
        for (auto& t : t_)
            if (t.m.d1 + twists[t.comp] != out) return false;
        return true;
    }
    int64_t degree_ub(const std::vector<int64_t>& twists) const {
        int64_t d = INT64_MIN;
        for (auto& t : t_) d = std::max(d, t.m.d1 + twists[t.comp]);
        return d;
    }
    int32_t max_comp() const {
        int32_t c = -1;
        for (auto& t : t_) c = std::max(c, t.comp);
        return c;
    }

  private:
    static ModVec merge(const ModVec& a, const ModVec& b, bool subtract) {
        ModVec v(a.ring_);
        v.t_.reserve(a.t_.size() + b.t_.size());
        size_t i = 0, j = 0;
        while (i < a.t_.size() || j < b.t_.size()) {
            int c;
            if (i == a.t_.size())
                c = -1;
            else if (j == b.t_.size())
                c = 1;
            else
                c = cmp_mterm(*a.ring_, a.t_[i], b.t_[j]);
            if (c > 0) {
                v.t_.push_back(a.t_[i++]);
            } else if (c < 0) {
                const auto& t = b.t_[j++];
                v.t_.push_back({subtract ? -t.c : t.c, t.m, t.comp});
            } else {
                C s = subtract ? a.t_[i].c - b.t_[j].c : a.t_[i].c + b.t_[j].c;
                if (!s.is_zero()) v.t_.push_back({std::move(s), a.t_[i].m, a.t_[i].comp});
                ++i;
                ++j;
            }
        }
        return v;
    }

    RingPtr ring_;
    std::vector<MTerm<C>> t_;
};

// Content normalization factor. Scaling by it gives, over Q, coprime integer
// coefficients with positive lead; over F_p, a monic vector. Keeps Buchberger
// intermediates small and outputs canonical. Exposed as a factor so tracked
// representations can be scaled in lockstep.
inline Rat primitive_factor_impl(const std::vector<Rat>& cs) {
    mpz_class l = 1;
    for (auto& c : cs) l = lcm(l, c.den());
    mpz_class g = 0;
    for (auto& c : cs) g = gcd(g, mpz_class(c.num() * (l / c.den())));
    if (g == 0) return Rat(1);
    if (cs.front().sign() < 0) g = -g;
    mpq_class f(l, g);
    f.canonicalize();
    return Rat(f);
}
inline Fp primitive_factor_impl(const std::vector<Fp>& cs) { return cs.front().inv(); }

template <class C>
C primitive_factor(const ModVec<C>& v) {
    std::vector<C> cs;
    cs.reserve(v.terms().size());
    for (auto& t : v.terms()) cs.push_back(t.c);
    return primitive_factor_impl(cs);
}

template <class C>
ModVec<C> make_primitive(const ModVec<C>& v) {
    if (v.is_zero()) return v;
    return v.mul_scalar(primitive_factor(v));
}

}  // namespace regpow

#endif
