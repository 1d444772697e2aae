#ifndef REGPOW_EXTINT_HPP
#define REGPOW_EXTINT_HPP

#include <cstdint>
#include <string>

namespace regpow {

// Integer extended by -infinity. -inf is below every integer and acts as the
// identity for max; adding an integer to -inf gives -inf.
class ExtInt {
  public:
    ExtInt() : fin_(false), v_(0) {}
    ExtInt(int64_t v) : fin_(true), v_(v) {}  // NOLINT: implicit by design
    static ExtInt neg_inf() { return ExtInt(); }

    bool finite() const { return fin_; }
    int64_t value() const { return v_; }

    friend bool operator==(const ExtInt& a, const ExtInt& b) {
        return a.fin_ == b.fin_ && (!a.fin_ || a.v_ == b.v_);
    }
    friend bool operator!=(const ExtInt& a, const ExtInt& b) { return !(a == b); }
    friend bool operator<(const ExtInt& a, const ExtInt& b) {
        if (!a.fin_) return b.fin_;
        if (!b.fin_) return false;
        return a.v_ < b.v_;
    }
    friend bool operator<=(const ExtInt& a, const ExtInt& b) { return a < b || a == b; }
    friend bool operator>(const ExtInt& a, const ExtInt& b) { return b < a; }
    friend bool operator>=(const ExtInt& a, const ExtInt& b) { return b <= a; }

    friend ExtInt operator+(const ExtInt& a, int64_t s) { return a.fin_ ? ExtInt(a.v_ + s) : neg_inf(); }
    friend ExtInt max(const ExtInt& a, const ExtInt& b) { return a < b ? b : a; }

    std::string str() const { return fin_ ? std::to_string(v_) : "-inf"; }

  private:
    bool fin_;
    int64_t v_;
};

}  // namespace regpow

#endif
