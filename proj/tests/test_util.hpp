#pragma once

// Shared helpers for the test suites: independent enumeration oracles and
// instance generators. Everything here is deliberately naive; these are the
// reference paths the library is checked against.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <set>
#include <vector>

#include "harborth/element_set.hpp"

namespace testutil {

// All invariant-factor chains with product in [2, max_order].
inline std::vector<std::vector<std::int64_t>> all_abelian_groups(std::int64_t max_order) {
    std::vector<std::vector<std::int64_t>> out;
    std::vector<std::int64_t> chain;
    std::function<void(std::int64_t, std::int64_t)> grow =
        [&](std::int64_t min_factor, std::int64_t product) {
            if (!chain.empty()) out.push_back(chain);
            for (std::int64_t f = min_factor; product * f <= max_order; ++f) {
                // next factor must be a multiple of the previous one
                if (!chain.empty() && f % chain.back() != 0) continue;
                chain.push_back(f);
                grow(f, product * f);
                chain.pop_back();
            }
        };
    grow(2, 1);
    std::sort(out.begin(), out.end());
    return out;
}

// Sums over all k-subsets by direct combination enumeration.
inline std::set<std::uint32_t> enumerate_k_subsums(const harborth::ElementSet& s, int k) {
    std::set<std::uint32_t> sums;
    const auto& members = s.indices();
    const int n = static_cast<int>(members.size());
    if (k > n) return sums;
    std::vector<int> pick(k);
    std::function<void(int, int, std::uint32_t)> rec = [&](int start, int chosen,
                                                           std::uint32_t acc) {
        if (chosen == k) {
            sums.insert(acc);
            return;
        }
        for (int i = start; i <= n - (k - chosen); ++i) {
            rec(i + 1, chosen + 1, s.group().add(acc, members[i]));
        }
    };
    rec(0, 0, 0);
    return sums;
}

inline std::set<std::uint32_t> enumerate_subsums_up_to(const harborth::ElementSet& s, int k) {
    std::set<std::uint32_t> sums;
    for (int size = 1; size <= k; ++size) {
        const auto part = enumerate_k_subsums(s, size);
        sums.insert(part.begin(), part.end());
    }
    return sums;
}

inline bool enumerate_is_free(const harborth::ElementSet& s, int k) {
    return !enumerate_k_subsums(s, k).contains(0);
}

// Multiset of element orders: an isomorphism invariant that separates the
// small groups used in tests.
inline std::vector<std::int64_t> order_statistics(const harborth::Group& g) {
    std::vector<std::int64_t> orders;
    for (std::int64_t x = 0; x < g.order(); ++x) {
        std::int64_t ord = 1;
        std::uint32_t acc = static_cast<std::uint32_t>(x);
        while (acc != 0) {
            acc = g.add(acc, static_cast<std::uint32_t>(x));
            ++ord;
        }
        orders.push_back(ord);
    }
    std::sort(orders.begin(), orders.end());
    return orders;
}

}  // namespace testutil
