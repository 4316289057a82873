#pragma once

// Tri-state outcome for exhaustive searches with node budgets.  A search
// that runs out of budget is "inconclusive" -- never conflated with a
// proven "none", so nonexistence claims always rest on full exhaustion.

#include <cstdint>
#include <utility>

namespace splitterlab {

enum class SearchStatus { found, none, inconclusive };

inline constexpr std::uint64_t kDefaultNodeBudget = 100'000'000;

template <class T>
struct SearchResult {
    SearchStatus status = SearchStatus::none;
    T value{};                 // meaningful only when status == found
    std::uint64_t nodes = 0;   // placements attempted

    bool found() const { return status == SearchStatus::found; }
    bool none() const { return status == SearchStatus::none; }
    bool inconclusive() const { return status == SearchStatus::inconclusive; }

    static SearchResult make_found(T v, std::uint64_t n) {
        return {SearchStatus::found, std::move(v), n};
    }
    static SearchResult make_none(std::uint64_t n) { return {SearchStatus::none, T{}, n}; }
    static SearchResult make_inconclusive(std::uint64_t n) {
        return {SearchStatus::inconclusive, T{}, n};
    }
};

}  // namespace splitterlab
