#ifndef REGPOW_FIELD_HPP
#define REGPOW_FIELD_HPP

#include <gmpxx.h>

#include <cstdint>
#include <string>

#include "regpow/errors.hpp"

namespace regpow {

bool is_prime_u32(uint32_t n);

// Coefficient domain descriptor. Characteristic 0 means the rationals;
// otherwise a prime field with word-size p < 2^31.
struct FieldSpec {
    enum class Kind { rationals, prime };
    Kind kind = Kind::rationals;
    uint32_t p = 0;

    static FieldSpec rationals() { return FieldSpec{Kind::rationals, 0}; }
    static FieldSpec prime(uint32_t p);

    uint32_t characteristic() const { return kind == Kind::rationals ? 0 : p; }
    bool operator==(const FieldSpec& o) const { return kind == o.kind && p == o.p; }
    std::string str() const { return kind == Kind::rationals ? "Q" : "Fp " + std::to_string(p); }
};

// Exact rational scalar over GMP.
class Rat {
  public:
    Rat() : v_(0) {}
    explicit Rat(long n) : v_(n) {}
    Rat(long num, unsigned long den) : v_(num, den) { v_.canonicalize(); }
    explicit Rat(const mpq_class& v) : v_(v) {}
    explicit Rat(const mpz_class& n) : v_(n) {}

    bool is_zero() const { return sgn(v_) == 0; }
    bool is_one() const { return v_ == 1; }
    bool is_unit() const { return !is_zero(); }
    int sign() const { return sgn(v_); }

    Rat operator-() const { return Rat(mpq_class(-v_)); }
    Rat inv() const {
        if (is_zero()) throw Error("division by zero");
        return Rat(mpq_class(1 / v_));
    }
    friend Rat operator+(const Rat& a, const Rat& b) { return Rat(mpq_class(a.v_ + b.v_)); }
    friend Rat operator-(const Rat& a, const Rat& b) { return Rat(mpq_class(a.v_ - b.v_)); }
    friend Rat operator*(const Rat& a, const Rat& b) { return Rat(mpq_class(a.v_ * b.v_)); }
    friend Rat operator/(const Rat& a, const Rat& b) { return a * b.inv(); }
    friend bool operator==(const Rat& a, const Rat& b) { return a.v_ == b.v_; }
    friend bool operator!=(const Rat& a, const Rat& b) { return a.v_ != b.v_; }

    const mpq_class& raw() const { return v_; }
    mpz_class num() const { return v_.get_num(); }
    mpz_class den() const { return v_.get_den(); }
    std::string str() const { return v_.get_str(); }

  private:
    mpq_class v_;
};

// Prime-field scalar. Carries its modulus so arithmetic never needs outside
// context; all intermediates fit in 64 bits since p < 2^31.
class Fp {
  public:
    Fp() : v_(0), p_(0) {}
    Fp(uint32_t v, uint32_t p) : v_(v % p), p_(p) {}
    static Fp from_int(long n, uint32_t p) {
        long r = n % static_cast<long>(p);
        if (r < 0) r += p;
        return Fp(static_cast<uint32_t>(r), p);
    }

    uint32_t modulus() const { return p_; }
    bool is_zero() const { return v_ == 0; }
    bool is_one() const { return v_ == 1; }
    bool is_unit() const { return v_ != 0; }
    int sign() const { return v_ == 0 ? 0 : 1; }

    Fp operator-() const { return p_ ? Fp(v_ == 0 ? 0 : p_ - v_, p_) : *this; }
    Fp inv() const;
    // A default-constructed Fp is an unpinned zero: take the modulus from
    // whichever operand carries one.
    friend Fp operator+(const Fp& a, const Fp& b) {
        uint32_t p = a.p_ ? a.p_ : b.p_;
        if (!p) return Fp();
        uint64_t s = static_cast<uint64_t>(a.v_) + b.v_;
        return Fp(static_cast<uint32_t>(s >= p ? s - p : s), p);
    }
    friend Fp operator-(const Fp& a, const Fp& b) {
        uint32_t p = a.p_ ? a.p_ : b.p_;
        if (!p) return Fp();
        return Fp(a.v_ >= b.v_ ? a.v_ - b.v_ : a.v_ + p - b.v_, p);
    }
    friend Fp operator*(const Fp& a, const Fp& b) {
        uint32_t p = a.p_ ? a.p_ : b.p_;
        if (!p) return Fp();
        return Fp(static_cast<uint32_t>((static_cast<uint64_t>(a.v_) * b.v_) % p), p);
    }
    friend Fp operator/(const Fp& a, const Fp& b) { return a * b.inv(); }
    friend bool operator==(const Fp& a, const Fp& b) { return a.v_ == b.v_; }
    friend bool operator!=(const Fp& a, const Fp& b) { return a.v_ != b.v_; }

    uint32_t raw() const { return v_; }
    std::string str() const { return std::to_string(v_); }

  private:
    uint32_t v_;
    uint32_t p_;
};

// Uniform construction of scalars of either coefficient type from integer or
// rational literals, given the active field.
template <class C>
struct scalar_ops;

template <>
struct scalar_ops<Rat> {
    static Rat from_fraction(const FieldSpec&, const mpz_class& num, const mpz_class& den) {
        mpq_class q(num);
        q /= mpq_class(den);
        return Rat(q);
    }
    static Rat from_int(const FieldSpec&, long n) { return Rat(n); }
    static Rat one(const FieldSpec&) { return Rat(1); }
    static constexpr bool matches(const FieldSpec& f) { return f.kind == FieldSpec::Kind::rationals; }
};

template <>
struct scalar_ops<Fp> {
    static Fp from_fraction(const FieldSpec& f, const mpz_class& num, const mpz_class& den) {
        mpz_class r = num % f.p;
        if (r < 0) r += f.p;
        mpz_class s = den % f.p;
        if (s < 0) s += f.p;
        Fp a(static_cast<uint32_t>(r.get_ui()), f.p);
        Fp b(static_cast<uint32_t>(s.get_ui()), f.p);
        if (b.is_zero()) throw Error("coefficient denominator not invertible modulo " + std::to_string(f.p));
        return a / b;
    }
    static Fp from_int(const FieldSpec& f, long n) { return Fp::from_int(n, f.p); }
    static Fp one(const FieldSpec& f) { return Fp(1, f.p); }
    static constexpr bool matches(const FieldSpec& f) { return f.kind == FieldSpec::Kind::prime; }
};

}  // namespace regpow

#endif
