#pragma once

#include <cstddef>
#include <set>

#include "multiseg/multisegment.hpp"

namespace multiseg {

inline constexpr std::size_t kDefaultDownsetBudget = 200000;

/// Visited-set cap was hit while enumerating a downset; carries the count
/// of states enumerated so far.
struct DownsetBudgetExceeded : std::runtime_error {
    std::size_t partial_count;
    explicit DownsetBudgetExceeded(std::size_t n)
        : std::runtime_error("downset budget exceeded"), partial_count(n) {}
};

/// All c obtained from b by one elementary linking: a linked pair replaced
/// by its union plus (if nonempty) its intersection. Deduplicated.
std::set<Multisegment> elementary_linkings(const Multisegment& b);

/// { c : c < b }, the strict downset under the order generated by
/// elementary linkings. BFS per line with a canonical-form visited set,
/// recombined across lines. Throws DownsetBudgetExceeded past `limit`
/// visited states.
std::set<Multisegment> strict_downset(const Multisegment& b,
                                      std::size_t limit = kDefaultDownsetBudget);

/// b1 <= b2. Short-circuits to false when supports differ.
bool leq(const Multisegment& b1, const Multisegment& b2,
         std::size_t limit = kDefaultDownsetBudget);

}  // namespace multiseg
