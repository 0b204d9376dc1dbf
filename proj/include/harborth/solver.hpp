#pragma once

#include <cstdint>
#include <optional>
#include <string_view>

#include "harborth/subsum.hpp"

namespace harborth {

/// Admissible set-preserving actions used for search pruning.
///  - scalar: x -> m*x with gcd(m, exp G) = 1
///  - scalar_and_translation: additionally x -> x + t with k*t = 0
///  - linear_over_f2: for elementary 2-groups, coordinate permutations plus
///    (for even k) translations; degrades to scalar_and_translation elsewhere
///  - auto_select: linear_over_f2 for elementary 2-groups with even k,
///    scalar_and_translation otherwise
enum class Symmetry { none, scalar, scalar_and_translation, linear_over_f2, auto_select };

Symmetry resolve_symmetry(Symmetry mode, const Group& g, int k);
const char* to_string(Symmetry mode);
std::optional<Symmetry> symmetry_from_string(std::string_view name);

struct SearchBudget {
    std::uint64_t max_nodes = 100'000'000;
    double max_seconds = 300.0;
    Symmetry symmetry = Symmetry::auto_select;
    int workers = 1;
};

struct ExactResult {
    Group group;
    int k;
    std::int64_t max_free_size;
    std::int64_t harborth;  // max_free_size + 1; order + 1 when G itself is free
    ElementSet witness;
    std::uint64_t nodes_explored;
    bool exhausted;
};

/// Maximum size of a k-zero-sum-free subset of G by symmetry-pruned
/// branch-and-bound. When exhausted, max_free_size is exact and the witness
/// is the lexicographically smallest maximum set (by sorted index sequence);
/// otherwise both are lower bounds. The result is identical for every worker
/// count on runs that complete within budget.
ExactResult max_zero_sum_free(const Group& g, int k, const SearchBudget& budget = {});

/// Independent verification oracle: exhaustive enumeration of all 2^order
/// subsets with a plain byte-array reachability table. Refuses order > 20.
ExactResult brute_force_oracle(const Group& g, int k);

enum class DecisionStatus { found, ruled_out, indeterminate };

struct DecisionResult {
    DecisionStatus status;
    std::optional<ElementSet> witness;  // present iff status == found
    std::uint64_t nodes_explored;
};

/// Decision form: does a k-zero-sum-free subset of size exactly t exist?
/// ruled_out carries an exhaustion guarantee; indeterminate means the budget
/// ran out first.
DecisionResult exists_free_of_size(const Group& g, int k, std::int64_t t,
                                   const SearchBudget& budget = {});

}  // namespace harborth
