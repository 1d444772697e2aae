#ifndef REGPOW_RING_HPP
#define REGPOW_RING_HPP

#include <cstdint>
#include <memory>
#include <string>
#include <utility>
#include <vector>

#include "regpow/field.hpp"
#include "regpow/monomial.hpp"
#include "regpow/order.hpp"

namespace regpow {

using RingPtr = std::shared_ptr<const Ring>;

// A polynomial ring over a field: named variables, a positive grading (single
// integer weights or integer-pair bidegrees), and an active monomial order.
// Immutable; shared freely between threads.
class Ring : public std::enable_shared_from_this<Ring> {
  public:
    static RingPtr make(FieldSpec field, std::vector<std::string> vars,
                        std::vector<int64_t> weights,  // empty = standard grading
                        OrderSpec order = OrderSpec::grevlex());
    static RingPtr make_bigraded(FieldSpec field, std::vector<std::string> vars,
                                 std::vector<std::pair<int64_t, int64_t>> bidegrees,
                                 OrderSpec order = OrderSpec::bigraded_grevlex());

    const FieldSpec& field() const { return field_; }
    size_t nvars() const { return vars_.size(); }
    const std::vector<std::string>& vars() const { return vars_; }
    const std::string& var(size_t i) const { return vars_[i]; }
    int var_index(const std::string& name) const;  // -1 if absent

    bool bigraded() const { return bigraded_; }
    int64_t weight1(size_t i) const { return grading_[i].first; }
    int64_t weight2(size_t i) const { return grading_[i].second; }
    const std::vector<std::pair<int64_t, int64_t>>& grading() const { return grading_; }
    int64_t weight_sum1() const;
    int64_t weight_sum2() const;

    const OrderSpec& order() const { return order_; }
    RingPtr with_order(OrderSpec o) const;

    Monomial mono(std::vector<int32_t> exps) const;
    Monomial mono_one() const { return mono(std::vector<int32_t>(nvars(), 0)); }
    Monomial mono_var(size_t i, int32_t e = 1) const;

    // Structural identity (field, variables, grading); order excluded.
    bool same_structure(const Ring& o) const;
    std::string describe() const;  // stable text used in cache keys

  private:
    Ring() = default;
    FieldSpec field_;
    std::vector<std::string> vars_;
    std::vector<std::pair<int64_t, int64_t>> grading_;
    bool bigraded_ = false;
    OrderSpec order_;
};

}  // namespace regpow

#endif
