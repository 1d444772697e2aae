#include "regpow/monomial.hpp"

#include <algorithm>
#include <cassert>

#include "regpow/ring.hpp"

namespace regpow {

Monomial mono_mul(const Monomial& a, const Monomial& b) {
    assert(a.e.size() == b.e.size());
    Monomial m = a;
    for (size_t i = 0; i < b.e.size(); ++i) m.e[i] += b.e[i];
    m.d1 += b.d1;
    m.d2 += b.d2;
    return m;
}

Monomial mono_div(const Monomial& a, const Monomial& b) {
    assert(mono_divides(b, a));
    Monomial m = a;
    for (size_t i = 0; i < b.e.size(); ++i) m.e[i] -= b.e[i];
    m.d1 -= b.d1;
    m.d2 -= b.d2;
    return m;
}

bool mono_divides(const Monomial& a, const Monomial& b) {
    for (size_t i = 0; i < a.e.size(); ++i)
        if (a.e[i] > b.e[i]) return false;
    return true;
}

Monomial mono_lcm(const Ring& r, const Monomial& a, const Monomial& b) {
    std::vector<int32_t> e(a.e.size());
    for (size_t i = 0; i < e.size(); ++i) e[i] = std::max(a.e[i], b.e[i]);
    return r.mono(std::move(e));
}

Monomial mono_gcd(const Ring& r, const Monomial& a, const Monomial& b) {
    std::vector<int32_t> e(a.e.size());
    for (size_t i = 0; i < e.size(); ++i) e[i] = std::min(a.e[i], b.e[i]);
    return r.mono(std::move(e));
}

bool mono_coprime(const Monomial& a, const Monomial& b) {
    for (size_t i = 0; i < a.e.size(); ++i)
        if (a.e[i] > 0 && b.e[i] > 0) return false;
    return true;
}

}  // namespace regpow
