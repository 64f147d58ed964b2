#include "oplab/budget.hpp"

#include <chrono>

namespace oplab {

void BudgetLedger::reserve(std::uint64_t count, const std::string& purpose) {
    std::lock_guard<std::mutex> lock(mu_);
    if (count > limit_ - used_) {
        throw BudgetExhausted("budget exhausted: " + std::to_string(used_) + "/" +
                              std::to_string(limit_) + " used, requested " + std::to_string(count) +
                              " for '" + purpose + "'");
    }
    used_ += count;
    const auto now = std::chrono::duration_cast<std::chrono::milliseconds>(
                         std::chrono::system_clock::now().time_since_epoch())
                         .count();
    log_.push_back(Entry{now, purpose, count});
}

std::uint64_t BudgetLedger::used() const {
    std::lock_guard<std::mutex> lock(mu_);
    return used_;
}

std::uint64_t BudgetLedger::remaining() const {
    std::lock_guard<std::mutex> lock(mu_);
    return limit_ - used_;
}

std::vector<BudgetLedger::Entry> BudgetLedger::entries() const {
    std::lock_guard<std::mutex> lock(mu_);
    return log_;
}

}  // namespace oplab
