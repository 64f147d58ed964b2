#pragma once

#include <cstdint>
#include <limits>
#include <mutex>
#include <string>
#include <vector>

#include "oplab/errors.hpp"

namespace oplab {

// Hard cap on expert queries. Reservations are atomic; `used <= limit` holds
// under any interleaving and `used` always equals the sum of logged counts.
class BudgetLedger {
public:
    struct Entry {
        std::int64_t timestamp_ms;
        std::string purpose;
        std::uint64_t count;
    };

    explicit BudgetLedger(std::uint64_t limit) : limit_(limit) {}

    // Never runs out; used for ablations that exempt validation queries.
    static BudgetLedger unlimited() {
        return BudgetLedger(std::numeric_limits<std::uint64_t>::max());
    }

    // Charges `count` units or throws BudgetExhausted leaving the ledger unchanged.
    void reserve(std::uint64_t count, const std::string& purpose);

    std::uint64_t limit() const { return limit_; }
    std::uint64_t used() const;
    std::uint64_t remaining() const;
    std::vector<Entry> entries() const;

private:
    const std::uint64_t limit_;
    mutable std::mutex mu_;
    std::uint64_t used_ = 0;
    std::vector<Entry> log_;
};

}  // namespace oplab
