#include "regpow/ring.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace regpow {

namespace {
void check_vars(const std::vector<std::string>& vars) {
    std::set<std::string> seen;
    for (const auto& v : vars) {
        if (v.empty()) throw ParseError("empty variable name");
        if (!seen.insert(v).second) throw ParseError("duplicate variable name '" + v + "'");
    }
}
}  // namespace

RingPtr Ring::make(FieldSpec field, std::vector<std::string> vars, std::vector<int64_t> weights, OrderSpec order) {
    check_vars(vars);
    if (weights.empty()) weights.assign(vars.size(), 1);
    if (weights.size() != vars.size()) throw ParseError("grading size mismatch");
    auto r = std::shared_ptr<Ring>(new Ring());
    r->field_ = field;
    r->vars_ = std::move(vars);
    r->grading_.reserve(weights.size());
    for (int64_t w : weights) {
        if (w < 1) throw ParseError("variable weights must be positive");
        r->grading_.emplace_back(w, 0);
    }
    r->bigraded_ = false;
    r->order_ = order;
    return r;
}

RingPtr Ring::make_bigraded(FieldSpec field, std::vector<std::string> vars,
                            std::vector<std::pair<int64_t, int64_t>> bidegrees, OrderSpec order) {
    check_vars(vars);
    if (bidegrees.size() != vars.size()) throw ParseError("grading size mismatch");
    for (auto& [a, b] : bidegrees)
        if (a + b < 1) throw ParseError("variable total degree must be positive");
    auto r = std::shared_ptr<Ring>(new Ring());
    r->field_ = field;
    r->vars_ = std::move(vars);
    r->grading_ = std::move(bidegrees);
    r->bigraded_ = true;
    r->order_ = order;
    return r;
}

int Ring::var_index(const std::string& name) const {
    for (size_t i = 0; i < vars_.size(); ++i)
        if (vars_[i] == name) return static_cast<int>(i);
    return -1;
}

int64_t Ring::weight_sum1() const {
    int64_t s = 0;
    for (auto& [a, b] : grading_) s += a;
    return s;
}

int64_t Ring::weight_sum2() const {
    int64_t s = 0;
    for (auto& [a, b] : grading_) s += b;
    return s;
}

RingPtr Ring::with_order(OrderSpec o) const {
    if (o == order_) return shared_from_this();
    auto r = std::shared_ptr<Ring>(new Ring(*this));
    r->order_ = o;
    return r;
}

Monomial Ring::mono(std::vector<int32_t> exps) const {
    Monomial m;
    m.e = std::move(exps);
    if (m.e.size() != nvars()) throw Error("exponent vector size mismatch");
    for (size_t i = 0; i < m.e.size(); ++i) {
        m.d1 += grading_[i].first * m.e[i];
        m.d2 += grading_[i].second * m.e[i];
    }
    return m;
}

Monomial Ring::mono_var(size_t i, int32_t e) const {
    std::vector<int32_t> exps(nvars(), 0);
    exps[i] = e;
    return mono(std::move(exps));
}

bool Ring::same_structure(const Ring& o) const {
    return field_ == o.field_ && vars_ == o.vars_ && grading_ == o.grading_;
}

std::string Ring::describe() const {
    std::ostringstream os;
    os << field_.str() << "[";
    for (size_t i = 0; i < vars_.size(); ++i) {
        if (i) os << ",";
        os << vars_[i];
        if (bigraded_)
            os << "(" << grading_[i].first << "," << grading_[i].second << ")";
        else if (grading_[i].first != 1)
            os << "(" << grading_[i].first << ")";
    }
    os << "]/" << order_.str();
    return os.str();
}

}  // namespace regpow
