#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "harborth/subsum.hpp"

namespace harborth {

/// An explicit lower-bound witness: a set claimed to be k-zero-sum-free of a
/// stated size, so g^k >= claimed_size + 1 when verified.
struct ConstructionResult {
    std::string name;
    Group group;
    int k;
    ElementSet set;
    std::int64_t claimed_size;
    std::int64_t implied_lower_bound;  // claimed_size + 1
    bool verified;
};

class VerificationError : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
};

namespace constructions {

/// {1, ..., ceil(n/3)} in C_n, 3-zero-sum free for n >= 4.
ConstructionResult c3_interval(std::int64_t n);

/// The n/2 odd residues of C_n (n even), 3-zero-sum free by parity.
ConstructionResult c3_odds(std::int64_t n);

/// Union of per-axis 3-free sets (interval on odd factors, odds on even
/// factors), with the zero element adjoined when every factor is odd.
/// Requires n_1 >= 4; k = 3.
ConstructionResult prop33_assembly(const Group& g);

/// Full cylinder over the last coordinate range [1, floor(n_t/k) - eps],
/// eps = 1 when k | n_t; k-zero-sum free because last coordinates cannot
/// reach a multiple of n_t.
ConstructionResult prop34_slab(const Group& g, int k);

/// 4-zero-sum-free set in C_2^r: basis vectors, adjacent basis pairs, and
/// (for r >= 7) sums of seven consecutive basis vectors spaced three apart.
ConstructionResult prop36_c2r(int r);

/// Two-block extremal set in C_p: a short initial interval plus a tail
/// interval of length about (p-1)/k. Generated for any prime p and k in
/// range; `verified` reports honestly whether the set is k-zero-sum free,
/// which fails below the theorem's p-threshold.
ConstructionResult thm311_extremal(std::int64_t p, int k);

/// Interval {0..m} plus {n-2} in C_n, 4-zero-sum free; m depends on
/// n mod 4. Odd n >= 5 or even n >= 6.
ConstructionResult prop317_318_set(std::int64_t n);

/// Literal fixture sets with their claimed (group, k) freeness.
std::vector<ConstructionResult> fixture_sets();

/// Every verified construction applicable to (g, k), for bound aggregation.
std::vector<ConstructionResult> applicable_for(const Group& g, int k);

}  // namespace constructions
}  // namespace harborth
