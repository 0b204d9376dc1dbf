#pragma once

#include <functional>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "harborth/element_set.hpp"

namespace harborth {

enum class BoundKind { lower, upper, exact };

const char* to_string(BoundKind kind);

struct Provenance {
    std::string source;
    BoundKind kind;
    std::int64_t value;
};

struct BoundReport {
    Group group;
    int k;
    std::int64_t lower;
    std::int64_t upper;
    std::optional<std::int64_t> exact;
    std::vector<Provenance> provenance;
    std::optional<ElementSet> witness;
};

/// Raised when two sources disagree (some lower bound exceeds some upper
/// bound). This is a transcription bug by definition and is never swallowed.
class ConsistencyError : public std::logic_error {
   public:
    using std::logic_error::logic_error;
};

/// Every closed-form value and bound from the literature as data-driven
/// formula entries with explicit applicability, aggregated into a best-known
/// report per (G, k). Special values are consulted before general formulas;
/// formulas outside their hypotheses contribute nothing rather than guessing.
class BoundsRegistry {
   public:
    BoundsRegistry();
    // formula entries capture this; copying would alias the original's state
    BoundsRegistry(const BoundsRegistry&) = delete;
    BoundsRegistry& operator=(const BoundsRegistry&) = delete;

    /// Max of applicable lower bounds (construction witnesses included), min
    /// of applicable upper bounds, exact when they meet. Provenance lists
    /// every contributing source. Throws ConsistencyError on lower > upper.
    BoundReport best_bounds(const Group& g, int k) const;

    /// Stores a solver result as an exact source for later queries.
    void register_exact(const Group& g, int k, std::int64_t value,
                        std::optional<ElementSet> witness = std::nullopt);

    // Closed forms, each usable on its own.

    /// g^1 = |G|; g^2 = |A| + |B| + 1 from the halving decomposition.
    static BoundReport g1_g2_values(const Group& g, int k);

    /// Exact value (even k, or odd k with p = 1 mod k) or a two-point
    /// interval for prime cyclic groups above the parity-specific threshold;
    /// nullopt when the hypotheses fail.
    static std::optional<BoundReport> thm311_value(std::int64_t p, int k);

    /// ceil((p + k^2 - 1)/k): the restricted-sumset upper bound for g^k(C_p).
    static std::int64_t dsh_upper(std::int64_t p, int k);

    /// Tightest stated bounds for g^3/g^4 over C_n; nullopt out of range.
    static std::optional<BoundReport> small_k_cyclic_bounds(std::int64_t n, int k);

    /// Doubling transfer: g^k(C_2n) <= 2*g^k(C_n) - 1 for even k, odd n >= k.
    static std::optional<std::int64_t> lift_bounds(std::int64_t n, int k,
                                                   std::int64_t known_gk_cn);

    /// Known values and bounds for the classical case k = exp(G).
    static BoundReport classical_harborth(const Group& g);

   private:
    struct Contribution {
        std::string source;
        BoundKind kind;
        std::int64_t value;
    };
    using FormulaFn = std::function<void(const Group&, int, std::vector<Contribution>&)>;
    struct FormulaEntry {
        std::string id;
        FormulaFn apply;
    };

    static std::vector<Contribution> classical_contributions(const Group& g);
    void collect(const Group& g, int k, std::vector<Contribution>& out) const;

    std::vector<FormulaEntry> entries_;
    std::map<std::pair<std::string, int>, std::int64_t> special_values_;
    std::map<std::pair<std::string, int>, std::pair<std::int64_t, std::optional<ElementSet>>>
        registered_;
};

}  // namespace harborth
