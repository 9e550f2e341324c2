#ifndef EQUIMULT_BUDGET_HPP
#define EQUIMULT_BUDGET_HPP

#include <cstdint>
#include <string>

#include "errors.hpp"

namespace equimult {

// Step budget for the polynomial kernels. Every division step in the
// Groebner engine ticks the active budget; a runaway computation becomes a
// clean resource_error instead of an unbounded run. The default cap is 10^6
// reduction steps per scope.
class step_budget {
  public:
    explicit step_budget(std::uint64_t limit = 1'000'000) : limit_(limit) {}

    void tick(std::uint64_t n = 1) {
        used_ += n;
        if (used_ > limit_)
            throw resource_error("reduction-step budget exceeded (limit " + std::to_string(limit_) + ")");
    }

    std::uint64_t used() const { return used_; }
    std::uint64_t limit() const { return limit_; }

  private:
    std::uint64_t limit_;
    std::uint64_t used_ = 0;
};

namespace detail {
inline step_budget*& active_budget() {
    thread_local step_budget* b = nullptr;
    return b;
}
}  // namespace detail

inline void budget_tick(std::uint64_t n = 1) {
    if (auto* b = detail::active_budget()) b->tick(n);
}

inline std::uint64_t budget_used() {
    auto* b = detail::active_budget();
    return b ? b->used() : 0;
}

// RAII scope: installs a budget for the current thread.
class budget_scope {
  public:
    explicit budget_scope(std::uint64_t limit = 1'000'000) : budget_(limit) {
        prev_ = detail::active_budget();
        detail::active_budget() = &budget_;
    }
    ~budget_scope() { detail::active_budget() = prev_; }

    budget_scope(const budget_scope&) = delete;
    budget_scope& operator=(const budget_scope&) = delete;

    std::uint64_t used() const { return budget_.used(); }

  private:
    step_budget budget_;
    step_budget* prev_;
};

}  // namespace equimult

#endif
