#include "harborth/subsum.hpp"

#include <stdexcept>

#include "harborth/numeric.hpp"

namespace harborth {

SubsumTable::SubsumTable(Group g, int max_size) : group_(std::move(g)), max_size_(max_size) {
    if (max_size_ < 0) {
        throw std::domain_error("subset size bound must be nonnegative");
    }
    words_ = (max_size_ + 1 + 63) / 64;
    const int top_bits = max_size_ + 1 - 64 * (words_ - 1);
    top_mask_ = top_bits == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << top_bits) - 1;
    reach_.assign(static_cast<std::size_t>(group_.order()) * words_, 0);
    reach_[0] = 1;  // empty subset reaches zero
    row_cache_.resize(group_.order());
}

const std::vector<std::uint32_t>& SubsumTable::shift_row(std::uint32_t element) {
    auto& row = row_cache_[element];
    if (row.empty()) {
        const std::uint32_t neg = group_.negate(element);
        row.resize(group_.order());
        for (std::int64_t x = 0; x < group_.order(); ++x) {
            row[x] = group_.add(static_cast<std::uint32_t>(x), neg);
        }
    }
    return row;
}

void SubsumTable::push(std::uint32_t element) {
    group_.check_index(element);
    const auto& row = shift_row(element);
    snapshots_.push_back(reach_);
    const std::vector<std::uint64_t>& old = snapshots_.back();
    const std::int64_t order = group_.order();
    if (words_ == 1) {
        for (std::int64_t x = 0; x < order; ++x) {
            reach_[x] = (old[x] | (old[row[x]] << 1)) & top_mask_;
        }
    } else {
        for (std::int64_t x = 0; x < order; ++x) {
            const std::uint64_t* src = old.data() + static_cast<std::size_t>(row[x]) * words_;
            std::uint64_t* dst = reach_.data() + static_cast<std::size_t>(x) * words_;
            std::uint64_t carry = 0;
            for (int w = 0; w < words_; ++w) {
                const std::uint64_t shifted = (src[w] << 1) | carry;
                carry = src[w] >> 63;
                dst[w] |= shifted;
            }
            dst[words_ - 1] &= top_mask_;
        }
    }
    members_.push_back(element);
}

void SubsumTable::pop() {
    if (members_.empty()) {
        throw std::logic_error("pop on empty table");
    }
    reach_ = std::move(snapshots_.back());
    snapshots_.pop_back();
    members_.pop_back();
}

bool SubsumTable::reachable(std::uint32_t element, int subset_size) const {
    group_.check_index(element);
    if (subset_size < 0 || subset_size > max_size_) {
        throw std::out_of_range("subset size " + std::to_string(subset_size) +
                                " outside [0, " + std::to_string(max_size_) + "]");
    }
    const std::uint64_t word =
        reach_[static_cast<std::size_t>(element) * words_ + subset_size / 64];
    return (word >> (subset_size % 64)) & 1;
}

bool SubsumTable::creates_zero_sum(std::uint32_t candidate) const {
    if (max_size_ == 0) return false;
    return reachable(group_.negate(candidate), max_size_ - 1);
}

std::vector<std::uint32_t> SubsumTable::reachable_set(int subset_size) const {
    std::vector<std::uint32_t> out;
    for (std::int64_t x = 0; x < group_.order(); ++x) {
        if (reachable(static_cast<std::uint32_t>(x), subset_size)) {
            out.push_back(static_cast<std::uint32_t>(x));
        }
    }
    return out;
}

Element sigma(const ElementSet& s) {
    std::uint32_t acc = 0;
    for (std::uint32_t m : s.indices()) {
        acc = s.group().add(acc, m);
    }
    return element_at(s.group(), acc);
}

namespace {
void check_k(int k) {
    if (k < 1) {
        throw std::domain_error("subset size k must be >= 1, got " + std::to_string(k));
    }
}
}  // namespace

ElementSet k_subsums(const ElementSet& s, int k) {
    check_k(k);
    if (static_cast<std::size_t>(k) > s.size()) {
        return ElementSet(s.group());
    }
    SubsumTable table(s.group(), k);
    for (std::uint32_t m : s.indices()) {
        table.push(m);
    }
    return ElementSet(s.group(), table.reachable_set(k));
}

ElementSet subsums_up_to(const ElementSet& s, int k) {
    check_k(k);
    const int cap = static_cast<int>(std::min<std::size_t>(k, s.size()));
    if (cap == 0) {
        return ElementSet(s.group());
    }
    SubsumTable table(s.group(), cap);
    for (std::uint32_t m : s.indices()) {
        table.push(m);
    }
    std::vector<std::uint32_t> out;
    for (std::int64_t x = 0; x < s.group().order(); ++x) {
        for (int size = 1; size <= cap; ++size) {
            if (table.reachable(static_cast<std::uint32_t>(x), size)) {
                out.push_back(static_cast<std::uint32_t>(x));
                break;
            }
        }
    }
    return ElementSet(s.group(), std::move(out));
}

bool is_k_zero_sum_free(const ElementSet& s, int k) {
    check_k(k);
    if (static_cast<std::size_t>(k) > s.size()) {
        return true;
    }
    SubsumTable table(s.group(), k);
    for (std::uint32_t m : s.indices()) {
        if (table.creates_zero_sum(m)) {
            return false;
        }
        table.push(m);
    }
    return !table.zero_sum_exists(k);
}

DshCheck dsh_check(const ElementSet& x, int k) {
    const Group& g = x.group();
    if (!g.is_cyclic() || !is_prime(g.order())) {
        throw std::domain_error("restricted-sumset bound requires a prime cyclic group, got " +
                                g.literal());
    }
    if (k < 1 || static_cast<std::size_t>(k) > x.size()) {
        throw std::domain_error("k must satisfy 1 <= k <= |X|");
    }
    const std::int64_t p = g.order();
    const std::int64_t size = static_cast<std::int64_t>(k_subsums(x, k).size());
    const std::int64_t bound =
        std::min<std::int64_t>(static_cast<std::int64_t>(k) * x.size() -
                                   static_cast<std::int64_t>(k) * k + 1,
                               p);
    return DshCheck{size, bound, size >= bound};
}

}  // namespace harborth
