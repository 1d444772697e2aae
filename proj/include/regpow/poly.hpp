#ifndef REGPOW_POLY_HPP
#define REGPOW_POLY_HPP

#include <algorithm>
#include <optional>
#include <sstream>
#include <utility>
#include <vector>

#include "regpow/extint.hpp"
#include "regpow/ring.hpp"

namespace regpow {

template <class C>
struct Term {
    C c;
    Monomial m;
};

// Exact multivariate polynomial: term list strictly decreasing in the ring's
// active order, no zero coefficients.
template <class C>
class Poly {
  public:
    Poly() = default;
    explicit Poly(RingPtr ring) : ring_(std::move(ring)) {}

    static Poly zero(RingPtr ring) { return Poly(std::move(ring)); }
    static Poly constant(RingPtr ring, C c) {
        Poly p(ring);
        if (!c.is_zero()) p.t_.push_back({std::move(c), ring->mono_one()});
        return p;
    }
    static Poly monomial(RingPtr ring, C c, Monomial m) {
        Poly p(ring);
        if (!c.is_zero()) p.t_.push_back({std::move(c), std::move(m)});
        return p;
    }
    static Poly variable(RingPtr ring, size_t i) {
        return monomial(ring, scalar_ops<C>::one(ring->field()), ring->mono_var(i));
    }
    // Sorts, merges equal monomials, removes zeros.
    static Poly from_terms(RingPtr ring, std::vector<Term<C>> terms) {
        Poly p(std::move(ring));
        std::sort(terms.begin(), terms.end(), [&](const Term<C>& a, const Term<C>& b) {
            return cmp_mono(*p.ring_, a.m, b.m) > 0;
        });
        for (auto& t : terms) {
            if (t.c.is_zero()) continue;
            if (!p.t_.empty() && p.t_.back().m == t.m) {
                C s = p.t_.back().c + t.c;
                if (s.is_zero())
                    p.t_.pop_back();
                else
                    p.t_.back().c = std::move(s);
            } else {
                p.t_.push_back(std::move(t));
            }
        }
        return p;
    }

    const RingPtr& ring() const { return ring_; }
    const std::vector<Term<C>>& terms() const { return t_; }
    bool is_zero() const { return t_.empty(); }
    size_t nterms() const { return t_.size(); }

    const Monomial& lm() const { return t_.front().m; }
    const C& lc() const { return t_.front().c; }

    bool is_homogeneous() const {
        for (size_t i = 1; i < t_.size(); ++i)
            if (t_[i].m.d1 != t_[0].m.d1 || t_[i].m.d2 != t_[0].m.d2) return false;
        return true;
    }
    // Weighted degree of the polynomial: max over terms.
    ExtInt degree() const {
        if (t_.empty()) return ExtInt::neg_inf();
        int64_t d = t_[0].m.d1;
        for (auto& t : t_) d = std::max(d, t.m.d1);
        return d;
    }
    // Common bidegree of all terms, or nullopt for 0 or inhomogeneous input.
    std::optional<std::pair<int64_t, int64_t>> bidegree() const {
        if (t_.empty()) return std::nullopt;
        auto bd = std::make_pair(t_[0].m.d1, t_[0].m.d2);
        for (auto& t : t_)
            if (t.m.d1 != bd.first || t.m.d2 != bd.second) return std::nullopt;
        return bd;
    }

    Poly operator-() const {
        Poly p(ring_);
        p.t_.reserve(t_.size());
        for (auto& t : t_) p.t_.push_back({-t.c, t.m});
        return p;
    }

    friend Poly operator+(const Poly& a, const Poly& b) { return merge(a, b, false); }
    friend Poly operator-(const Poly& a, const Poly& b) { return merge(a, b, true); }

    friend Poly operator*(const Poly& a, const Poly& b) {
        std::vector<Term<C>> out;
        out.reserve(a.t_.size() * b.t_.size());
        for (auto& s : a.t_)
            for (auto& t : b.t_) out.push_back({s.c * t.c, mono_mul(s.m, t.m)});
        return from_terms(a.ring_, std::move(out));
    }

    Poly mul_term(const C& c, const Monomial& m) const {
        Poly p(ring_);
        if (c.is_zero()) return p;
        p.t_.reserve(t_.size());
        for (auto& t : t_) p.t_.push_back({t.c * c, mono_mul(t.m, m)});
        return p;
    }
    Poly mul_scalar(const C& c) const {
        Poly p(ring_);
        if (c.is_zero()) return p;
        p.t_.reserve(t_.size());
        for (auto& t : t_) p.t_.push_back({t.c * c, t.m});
        return p;
    }

    Poly pow(uint32_t k) const {
        Poly r = constant(ring_, scalar_ops<C>::one(ring_->field()));
        Poly base = *this;
        while (k) {
            if (k & 1) r = r * base;
            base = k > 1 ? base * base : base;
            k >>= 1;
        }
        return r;
    }

    friend bool operator==(const Poly& a, const Poly& b) {
        if (a.t_.size() != b.t_.size()) return false;
        for (size_t i = 0; i < a.t_.size(); ++i)
            if (!(a.t_[i].c == b.t_[i].c) || a.t_[i].m != b.t_[i].m) return false;
        return true;
    }
    friend bool operator!=(const Poly& a, const Poly& b) { return !(a == b); }

    // Canonical text form; parse_poly(render(p)) == p.
    std::string render() const {
        if (t_.empty()) return "0";
        std::ostringstream os;
        for (size_t i = 0; i < t_.size(); ++i) {
            const auto& t = t_[i];
            std::string cs = t.c.str();
            bool neg = !cs.empty() && cs[0] == '-';
            if (i == 0) {
                if (neg) os << "-";
            } else {
                os << (neg ? " - " : " + ");
            }
            std::string mag = neg ? cs.substr(1) : cs;
            bool wrote = false;
            if (t.m.is_one()) {
                os << mag;
                wrote = true;
            } else if (mag != "1") {
                os << mag << "*";
            }
            bool first = true;
            for (size_t v = 0; v < t.m.e.size(); ++v) {
                if (t.m.e[v] == 0) continue;
                if (!first) os << "*";
                os << ring_->var(v);
                if (t.m.e[v] > 1) os << "^" << t.m.e[v];
                first = false;
                wrote = true;
            }
            if (!wrote) os << "1";
        }
        return os.str();
    }

    // Re-sorts terms for a ring with the same structure but another order.
    Poly converted(const RingPtr& target) const {
        std::vector<Term<C>> ts = t_;
        return from_terms(target, std::move(ts));
    }

  private:
    static Poly merge(const Poly& a, const Poly& b, bool subtract) {
        Poly p(a.ring_);
        p.t_.reserve(a.t_.size() + b.t_.size());
        size_t i = 0, j = 0;
        while (i < a.t_.size() || j < b.t_.size()) {
            int c;
            if (i == a.t_.size())
                c = -1;
            else if (j == b.t_.size())
                c = 1;
            else
                c = cmp_mono(*a.ring_, a.t_[i].m, b.t_[j].m);
            if (c > 0) {
                p.t_.push_back(a.t_[i++]);
            } else if (c < 0) {
                const auto& t = b.t_[j++];
                p.t_.push_back({subtract ? -t.c : t.c, t.m});
            } else {
                C s = subtract ? a.t_[i].c - b.t_[j].c : a.t_[i].c + b.t_[j].c;
                if (!s.is_zero()) p.t_.push_back({std::move(s), a.t_[i].m});
                ++i;
                ++j;
            }
        }
        return p;
    }

    RingPtr ring_;
    std::vector<Term<C>> t_;
};

using PolyQ = Poly<Rat>;
using PolyFp = Poly<Fp>;

// Maps a polynomial into another ring. var_map[i] gives the target index of
// source variable i, or -1 when the variable must not occur.
template <class C>
Poly<C> map_poly(const Poly<C>& p, const RingPtr& target, const std::vector<int>& var_map) {
    std::vector<Term<C>> out;
    out.reserve(p.nterms());
    for (const auto& t : p.terms()) {
        std::vector<int32_t> e(target->nvars(), 0);
        for (size_t i = 0; i < t.m.e.size(); ++i) {
            if (t.m.e[i] == 0) continue;
            if (var_map[i] < 0) throw Error("variable '" + p.ring()->var(i) + "' has no image in target ring");
            e[var_map[i]] += t.m.e[i];
        }
        out.push_back({t.c, target->mono(std::move(e))});
    }
    return Poly<C>::from_terms(target, std::move(out));
}

// Variable map by name; unmatched variables map to -1.
inline std::vector<int> var_map_by_name(const Ring& src, const Ring& dst) {
    std::vector<int> m(src.nvars());
    for (size_t i = 0; i < src.nvars(); ++i) m[i] = dst.var_index(src.var(i));
    return m;
}

// Substitutes target polynomials for the variables of p.
template <class C>
Poly<C> subst_poly(const Poly<C>& p, const RingPtr& target, const std::vector<Poly<C>>& images) {
    Poly<C> acc = Poly<C>::zero(target);
    for (const auto& t : p.terms()) {
        Poly<C> prod = Poly<C>::constant(target, t.c);
        for (size_t i = 0; i < t.m.e.size(); ++i)
            if (t.m.e[i]) prod = prod * images[i].pow(static_cast<uint32_t>(t.m.e[i]));
        acc = acc + prod;
    }
    return acc;
}

}  // namespace regpow

#endif
