#include "regpow/order.hpp"

#include <cassert>

#include "regpow/ring.hpp"

namespace regpow {

std::string OrderSpec::str() const {
    switch (kind) {
        case Kind::grevlex:
            return "grevlex";
        case Kind::lex:
            return "lex";
        case Kind::block_elim:
            return "block(" + std::to_string(front) + ")";
        case Kind::bigraded_grevlex:
            return "bigrevlex";
    }
    return "?";
}

namespace {

// Graded reverse-lex on the variable range [lo, hi): higher weighted degree
// wins; on ties the monomial with the smaller exponent at the last differing
// variable is the larger one.
int cmp_grevlex_range(const Ring& ring, const Monomial& a, const Monomial& b, size_t lo, size_t hi) {
    int64_t da = 0, db = 0;
    for (size_t i = lo; i < hi; ++i) {
        da += ring.weight1(i) * a.e[i];
        db += ring.weight1(i) * b.e[i];
    }
    if (da != db) return da < db ? -1 : 1;
    for (size_t i = hi; i-- > lo;) {
        if (a.e[i] != b.e[i]) return a.e[i] > b.e[i] ? -1 : 1;
    }
    return 0;
}

}  // namespace

int cmp_mono(const Ring& ring, const OrderSpec& order, const Monomial& a, const Monomial& b) {
    const size_t n = ring.nvars();
    assert(a.e.size() == n && b.e.size() == n);
    switch (order.kind) {
        case OrderSpec::Kind::grevlex:
            if (a.d1 != b.d1) return a.d1 < b.d1 ? -1 : 1;
            for (size_t i = n; i-- > 0;)
                if (a.e[i] != b.e[i]) return a.e[i] > b.e[i] ? -1 : 1;
            return 0;
        case OrderSpec::Kind::lex:
            for (size_t i = 0; i < n; ++i)
                if (a.e[i] != b.e[i]) return a.e[i] < b.e[i] ? -1 : 1;
            return 0;
        case OrderSpec::Kind::block_elim: {
            const size_t k = static_cast<size_t>(order.front);
            assert(k <= n);
            if (int c = cmp_grevlex_range(ring, a, b, 0, k)) return c;
            return cmp_grevlex_range(ring, a, b, k, n);
        }
        case OrderSpec::Kind::bigraded_grevlex:
            if (a.d1 != b.d1) return a.d1 < b.d1 ? -1 : 1;
            if (a.d2 != b.d2) return a.d2 < b.d2 ? -1 : 1;
            for (size_t i = n; i-- > 0;)
                if (a.e[i] != b.e[i]) return a.e[i] > b.e[i] ? -1 : 1;
            return 0;
    }
    return 0;
}

int cmp_mono(const Ring& ring, const Monomial& a, const Monomial& b) {
    return cmp_mono(ring, ring.order(), a, b);
}

}  // namespace regpow
