#ifndef REGPOW_BUDGET_HPP
#define REGPOW_BUDGET_HPP

#include <chrono>
#include <cstdint>

#include "regpow/errors.hpp"

namespace regpow {

// Resource caps for basis computations. Thread-local so that concurrent jobs
// carry independent budgets; exceeding a cap raises BudgetError, never a
// wrong answer.
struct Budget {
    int64_t max_degree = 80;
    size_t max_basis = 20000;
    double max_seconds = 0;  // 0 = unlimited
    std::chrono::steady_clock::time_point start = std::chrono::steady_clock::now();

    void check_degree(int64_t d) const {
        if (d > max_degree) throw BudgetError("degree", "reached degree " + std::to_string(d));
    }
    void check_basis(size_t n) const {
        if (n > max_basis) throw BudgetError("basis", "basis size " + std::to_string(n));
    }
    void check_time() const {
        if (max_seconds <= 0) return;
        double el = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        if (el > max_seconds) throw BudgetError("time", "wall clock cap hit");
    }
};

Budget& current_budget();

// RAII scope installing a budget on the current thread.
class BudgetScope {
  public:
    explicit BudgetScope(Budget b);
    ~BudgetScope();
    BudgetScope(const BudgetScope&) = delete;
    BudgetScope& operator=(const BudgetScope&) = delete;

  private:
    Budget saved_;
};

}  // namespace regpow

#endif
