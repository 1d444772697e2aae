#ifndef REGPOW_MONOMIAL_HPP
#define REGPOW_MONOMIAL_HPP

#include <cstdint>
#include <vector>

namespace regpow {

class Ring;

// Exponent vector with its grading-weighted degree cached. Construction goes
// through Ring::mono so the cache is always consistent with the grading.
struct Monomial {
    std::vector<int32_t> e;
    int64_t d1 = 0;  // weighted degree (first grading component)
    int64_t d2 = 0;  // second grading component; 0 in single-graded rings

    size_t nvars() const { return e.size(); }
    bool is_one() const {
        for (int32_t x : e)
            if (x) return false;
        return true;
    }
    int64_t total_exponents() const {
        int64_t s = 0;
        for (int32_t x : e) s += x;
        return s;
    }
    bool operator==(const Monomial& o) const { return e == o.e; }
    bool operator!=(const Monomial& o) const { return e != o.e; }
};

Monomial mono_mul(const Monomial& a, const Monomial& b);
// Exact division; caller must have checked divisibility.
Monomial mono_div(const Monomial& a, const Monomial& b);
bool mono_divides(const Monomial& a, const Monomial& b);  // a | b
Monomial mono_lcm(const Ring& r, const Monomial& a, const Monomial& b);
Monomial mono_gcd(const Ring& r, const Monomial& a, const Monomial& b);
bool mono_coprime(const Monomial& a, const Monomial& b);

}  // namespace regpow

#endif
