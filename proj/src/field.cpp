#include "regpow/field.hpp"

namespace regpow {

bool is_prime_u32(uint32_t n) {
    if (n < 2) return false;
    for (uint32_t q : {2u, 3u, 5u, 7u, 11u, 13u, 17u, 19u, 23u, 29u, 31u, 37u}) {
        if (n == q) return true;
        if (n % q == 0) return false;
    }
    // Deterministic Miller-Rabin; these bases cover all n < 3,215,031,751.
    uint32_t d = n - 1;
    int s = 0;
    while ((d & 1) == 0) {
        d >>= 1;
        ++s;
    }
    for (uint64_t a : {2ull, 3ull, 5ull, 7ull}) {
        uint64_t x = 1, base = a % n, e = d;
        while (e) {
            if (e & 1) x = x * base % n;
            base = base * base % n;
            e >>= 1;
        }
        if (x == 1 || x == n - 1) continue;
        bool witness = true;
        for (int i = 1; i < s; ++i) {
            x = x * x % n;
            if (x == n - 1) {
                witness = false;
                break;
            }
        }
        if (witness) return false;
    }
    return true;
}

FieldSpec FieldSpec::prime(uint32_t p) {
    if (p < 2 || p >= (1u << 31) || !is_prime_u32(p))
        throw ParseError("field characteristic must be a prime below 2^31, got " + std::to_string(p));
    return FieldSpec{Kind::prime, p};
}

Fp Fp::inv() const {
    if (v_ == 0) throw Error("division by zero in F_" + std::to_string(p_));
    // Extended Euclid on (v, p).
    int64_t t = 0, newt = 1, r = p_, newr = v_;
    while (newr != 0) {
        int64_t q = r / newr;
        int64_t tmp = t - q * newt;
        t = newt;
        newt = tmp;
        tmp = r - q * newr;
        r = newr;
        newr = tmp;
    }
    if (t < 0) t += p_;
    return Fp(static_cast<uint32_t>(t), p_);
}

}  // namespace regpow
