#pragma once

#include "harborth/element_set.hpp"

namespace harborth {

/// Size-indexed subset-sum table over a group.
///
/// For each group element g the table keeps a mask over subset sizes
/// 0..max_size; bit s is set iff some s-subset of the pushed members sums
/// to g. Bit 0 (the empty subset) is set at the zero element only. push()
/// extends the table by one member with a shift-and-or pass over the group
/// (O(order) word operations); pop() restores the previous state exactly
/// from a snapshot stack, which is what the branch-and-bound search needs.
///
/// Single-writer; distinct tables may be used concurrently.
class SubsumTable {
   public:
    SubsumTable(Group g, int max_size);

    const Group& group() const noexcept { return group_; }
    int max_size() const noexcept { return max_size_; }
    int depth() const noexcept { return static_cast<int>(members_.size()); }
    const std::vector<std::uint32_t>& members() const noexcept { return members_; }

    void push(std::uint32_t element);
    void pop();

    bool reachable(std::uint32_t element, int subset_size) const;
    bool zero_sum_exists(int subset_size) const { return reachable(0, subset_size); }

    /// Whether pushing `candidate` would put zero into Σ_{max_size}: true iff
    /// some (max_size - 1)-subset of the current members sums to -candidate.
    bool creates_zero_sum(std::uint32_t candidate) const;

    /// All elements g with bit `subset_size` set, ascending.
    std::vector<std::uint32_t> reachable_set(int subset_size) const;

    bool same_state(const SubsumTable& other) const {
        return reach_ == other.reach_ && members_ == other.members_;
    }

   private:
    const std::vector<std::uint32_t>& shift_row(std::uint32_t element);

    Group group_;
    int max_size_;
    int words_;
    std::uint64_t top_mask_;
    std::vector<std::uint64_t> reach_;                    // order x words
    std::vector<std::vector<std::uint64_t>> snapshots_;   // one per push
    std::vector<std::uint32_t> members_;
    std::vector<std::vector<std::uint32_t>> row_cache_;   // row[e][x] = x - e
};

/// Group sum of all members; the empty set sums to zero.
Element sigma(const ElementSet& s);

/// Σ_k(S): sums over k-subsets of distinct members. Empty when k > |S|.
ElementSet k_subsums(const ElementSet& s, int k);

/// Σ_{<=k}(S): union of Σ_s(S) for 1 <= s <= min(k, |S|).
ElementSet subsums_up_to(const ElementSet& s, int k);

/// True iff no k-subset of S sums to zero; vacuously true when |S| < k.
bool is_k_zero_sum_free(const ElementSet& s, int k);

struct DshCheck {
    std::int64_t size;
    std::int64_t bound;
    bool holds;
};

/// |Σ_k(X)| against the Dias da Silva-Hamidoune floor min(k|X| - k^2 + 1, p),
/// for X inside a prime cyclic group.
DshCheck dsh_check(const ElementSet& x, int k);

}  // namespace harborth
