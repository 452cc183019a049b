#ifndef TAP_BUDGET_HPP
#define TAP_BUDGET_HPP

#include <atomic>
#include <chrono>
#include <cstdint>
#include <optional>
#include <stdexcept>

namespace tap {

struct BudgetExhausted : std::runtime_error {
    explicit BudgetExhausted(const std::string& what) : std::runtime_error(what) {}
};

/// Shared step/wall-clock budget for long-running searches and eliminations.
/// Step counting is deterministic; the optional deadline is a safety net.
/// Thread-safe: workers share one instance and poll it.
class Budget {
  public:
    Budget() = default;

    Budget(std::uint64_t max_steps, std::optional<double> seconds)
        : max_steps_(max_steps) {
        if (seconds) {
            deadline_ = std::chrono::steady_clock::now() +
                        std::chrono::duration_cast<std::chrono::steady_clock::duration>(
                            std::chrono::duration<double>(*seconds));
        }
    }

    /// Record n units of work; throws BudgetExhausted once the budget is spent.
    void tick(std::uint64_t n = 1) const {
        const std::uint64_t used = steps_.fetch_add(n, std::memory_order_relaxed) + n;
        if (used > max_steps_) {
            tripped_.store(true, std::memory_order_relaxed);
            throw BudgetExhausted("step budget exhausted");
        }
        // Checking the clock on every tick would dominate tight loops.
        if (deadline_ && (used & 0x3ff) == 0) {
            if (std::chrono::steady_clock::now() > *deadline_) {
                tripped_.store(true, std::memory_order_relaxed);
                throw BudgetExhausted("time budget exhausted");
            }
        }
    }

    bool tripped() const noexcept { return tripped_.load(std::memory_order_relaxed); }

    std::uint64_t steps_used() const noexcept { return steps_.load(std::memory_order_relaxed); }

  private:
    std::uint64_t max_steps_ = UINT64_MAX;
    std::optional<std::chrono::steady_clock::time_point> deadline_;
    mutable std::atomic<std::uint64_t> steps_{0};
    mutable std::atomic<bool> tripped_{false};
};

inline void budget_tick(const Budget* b, std::uint64_t n = 1) {
    if (b != nullptr) b->tick(n);
}

}  // namespace tap

#endif  // TAP_BUDGET_HPP
