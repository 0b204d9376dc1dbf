#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace harborth {

/// A finite abelian group in invariant-factor form C_{n_1} + ... + C_{n_r}
/// with n_i | n_{i+1} and every n_i >= 2.
///
/// Construction canonicalizes arbitrary modulus lists by repeated gcd/lcm
/// exchange, so from_moduli({6,4}) and from_moduli({2,12}) compare equal.
/// Elements are addressed by their mixed-radix index in [0, order), last
/// coordinate fastest; indices are the working currency of every downstream
/// table and bit vector. Values are immutable after construction.
class Group {
   public:
    static Group from_moduli(const std::vector<std::int64_t>& moduli);

    /// Parses a comma-separated modulus list, e.g. "2,12" or "18".
    static Group parse(const std::string& literal);

    const std::vector<std::int64_t>& factors() const noexcept { return factors_; }
    std::int64_t order() const noexcept { return order_; }
    std::int64_t exponent() const noexcept { return factors_.back(); }
    int rank() const noexcept { return static_cast<int>(factors_.size()); }

    /// Canonical literal: invariant factors joined by commas.
    std::string literal() const;

    bool operator==(const Group& other) const noexcept { return factors_ == other.factors_; }
    bool operator!=(const Group& other) const noexcept { return factors_ != other.factors_; }

    bool is_cyclic() const noexcept { return factors_.size() == 1; }
    bool is_elementary_two() const noexcept { return exponent() == 2; }
    /// All invariant factors equal (G = C_n^d).
    bool is_homocyclic() const noexcept;

    // Index arithmetic, coordinate-wise modular.
    std::uint32_t add(std::uint32_t a, std::uint32_t b) const;
    std::uint32_t negate(std::uint32_t a) const;
    std::uint32_t scalar_mul(std::int64_t m, std::uint32_t a) const;

    std::uint32_t index_of(std::span<const std::int64_t> coords) const;
    std::vector<std::int64_t> coords_of(std::uint32_t index) const;
    void check_index(std::uint32_t index) const;

   private:
    Group(std::vector<std::int64_t> factors);

    std::vector<std::int64_t> factors_;
    std::vector<std::int64_t> strides_;  // strides_[i] = prod of factors after i
    std::int64_t order_ = 0;
};

/// One group element: coordinates plus canonical index, tagged with its group
/// so mixed-group arithmetic is rejected.
struct Element {
    Group group;
    std::vector<std::int64_t> coords;
    std::uint32_t index = 0;
};

Element make_element(const Group& g, std::vector<std::int64_t> coords);
Element element_at(const Group& g, std::uint32_t index);

Element add(const Element& a, const Element& b);
Element negate(const Element& a);
Element scalar_mul(std::int64_t m, const Element& a);

}  // namespace harborth
