#include "regpow/budget.hpp"

namespace regpow {

namespace {
thread_local Budget g_budget;
}

Budget& current_budget() { return g_budget; }

BudgetScope::BudgetScope(Budget b) : saved_(g_budget) {
    b.start = std::chrono::steady_clock::now();
    g_budget = b;
}

BudgetScope::~BudgetScope() { g_budget = saved_; }

}  // namespace regpow
