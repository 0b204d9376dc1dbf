#include "harborth/bounds.hpp"

#include <algorithm>
#include <numeric>

#include "harborth/constructions.hpp"
#include "harborth/numeric.hpp"

namespace harborth {

const char* to_string(BoundKind kind) {
    switch (kind) {
        case BoundKind::lower: return "lower";
        case BoundKind::upper: return "upper";
        case BoundKind::exact: return "exact";
    }
    return "?";
}

namespace {

std::int64_t torsion_size(const Group& g) {
    std::int64_t b = 1;
    for (std::int64_t f : g.factors()) b *= std::gcd<std::int64_t>(2, f);
    return b;
}

}  // namespace

BoundReport BoundsRegistry::g1_g2_values(const Group& g, int k) {
    if (k != 1 && k != 2) {
        throw std::domain_error("g1_g2_values requires k in {1, 2}");
    }
    if (k == 1) {
        return BoundReport{g,
                           1,
                           g.order(),
                           g.order(),
                           g.order(),
                           {{"g1_definition", BoundKind::exact, g.order()}},
                           std::nullopt};
    }
    const HalvingDecomposition hd = halving_decomposition(g);
    const std::int64_t value =
        static_cast<std::int64_t>(hd.half.size() + hd.torsion.size()) + 1;
    // B u A is the extremal 2-free set: inverses of A live in -A.
    std::vector<std::uint32_t> witness = hd.torsion.indices();
    witness.insert(witness.end(), hd.half.indices().begin(), hd.half.indices().end());
    return BoundReport{g,
                       2,
                       value,
                       value,
                       value,
                       {{"lemma31_g2", BoundKind::exact, value}},
                       ElementSet(g, std::move(witness))};
}

std::optional<BoundReport> BoundsRegistry::thm311_value(std::int64_t p, int k) {
    if (!is_prime(p) || k < 3 || k >= p) return std::nullopt;
    const std::int64_t m = k / 2;
    const std::int64_t r = p % k;
    if (k % 2 == 0) {
        if (p <= m * m) return std::nullopt;
        // residues 2..m are not covered by the statement
        if (r != 1 && r < m + 1) return std::nullopt;
        const std::int64_t value =
            r == 1 ? (p - 1) / k + k : (p - r) / k + k + 1;
        const Group g = Group::from_moduli({p});
        return BoundReport{
            g, k, value, value, value, {{"thm311", BoundKind::exact, value}}, std::nullopt};
    }
    // odd k = 2m + 1: threshold p > (2m^3 + 5m^2 - 8m - 3) / (2(m + 1))
    if (2 * (m + 1) * p <= 2 * m * m * m + 5 * m * m - 8 * m - 3) return std::nullopt;
    const Group g = Group::from_moduli({p});
    if (r == 1) {
        const std::int64_t value = (p - 1) / k + k;
        return BoundReport{
            g, k, value, value, value, {{"thm311", BoundKind::exact, value}}, std::nullopt};
    }
    const std::int64_t lo = (p - r) / k + k;
    return BoundReport{g,
                       k,
                       lo,
                       lo + 1,
                       std::nullopt,
                       {{"thm311", BoundKind::lower, lo}, {"thm311", BoundKind::upper, lo + 1}},
                       std::nullopt};
}

std::int64_t BoundsRegistry::dsh_upper(std::int64_t p, int k) {
    if (!is_prime(p) || k < 1 || k >= p) {
        throw std::domain_error("dsh_upper requires prime p and 1 <= k < p");
    }
    return ceil_div(p + static_cast<std::int64_t>(k) * k - 1, k);
}

std::optional<BoundReport> BoundsRegistry::small_k_cyclic_bounds(std::int64_t n, int k) {
    if (k != 3 && k != 4) {
        throw std::domain_error("small_k_cyclic_bounds requires k in {3, 4}");
    }
    std::vector<Provenance> sources;
    if (k == 3) {
        static const std::map<std::int64_t, std::int64_t> prop315 = {
            {4, 4}, {5, 5}, {6, 5}, {7, 5}, {8, 6}, {9, 7}, {10, 7}, {11, 7}, {12, 7}};
        if (auto it = prop315.find(n); it != prop315.end()) {
            sources.push_back({"prop315", BoundKind::exact, it->second});
        }
        if (n == 18) {
            sources.push_back({"prop316", BoundKind::exact, 10});
        }
        if (n % 2 == 0 && n >= 4) {
            sources.push_back({"prop314", BoundKind::upper, n / 2 + 3});
        }
    } else {
        if (n % 2 == 1 && n >= 5) {
            sources.push_back({"prop317", BoundKind::lower, ceil_div(n + 15, 4)});
            sources.push_back({"prop317", BoundKind::upper, (n + 6) / 2});
        }
        if (n % 2 == 0 && n >= 6) {
            sources.push_back({"prop318", BoundKind::lower, ceil_div(n + 14, 4)});
            sources.push_back({"prop318", BoundKind::upper, n / 2 + 3});
        }
    }
    if (sources.empty()) return std::nullopt;
    std::int64_t lo = 1, hi = Group::from_moduli({n}).order() + 1;
    for (const auto& s : sources) {
        if (s.kind != BoundKind::upper) lo = std::max(lo, s.value);
        if (s.kind != BoundKind::lower) hi = std::min(hi, s.value);
    }
    return BoundReport{Group::from_moduli({n}),
                       k,
                       lo,
                       hi,
                       lo == hi ? std::optional<std::int64_t>(lo) : std::nullopt,
                       std::move(sources),
                       std::nullopt};
}

std::optional<std::int64_t> BoundsRegistry::lift_bounds(std::int64_t n, int k,
                                                        std::int64_t known_gk_cn) {
    if (k % 2 != 0 || n % 2 != 1 || n < k) return std::nullopt;
    return 2 * known_gk_cn - 1;
}

std::vector<BoundsRegistry::Contribution> BoundsRegistry::classical_contributions(
    const Group& g) {
    std::vector<Contribution> out;
    const std::int64_t order = g.order();
    const bool even_cyclic = g.is_cyclic() && order % 2 == 0;
    if (g.is_elementary_two() || even_cyclic) {
        out.push_back({"g_equals_order_plus_one", BoundKind::exact, order + 1});
    } else {
        // the |G| + 1 value characterizes exactly those groups
        out.push_back({"g_equals_order_plus_one", BoundKind::upper, order});
    }
    if (g.is_homocyclic() && g.exponent() > 2) {
        const std::int64_t n = g.exponent();
        const std::int64_t d = g.rank();
        std::int64_t pow2 = 1, pown = 1;
        for (int i = 1; i < d; ++i) pow2 *= 2;
        for (int i = 1; i < d; ++i) pown *= n;
        out.push_back({"kemnitz_lower", BoundKind::lower, (n - 1) * pow2 + 1});
        if (n % 2 == 0) {
            out.push_back({"kemnitz_even_lower", BoundKind::lower, n * pow2 + 1});
        }
        if (d >= 2 || n % 2 == 1) {
            out.push_back({"kemnitz_upper", BoundKind::upper, (n - 1) * pown + 1});
        }
        if (d == 2 && is_prime(n) && (n == 3 || n == 5 || n == 7)) {
            out.push_back({"kemnitz_p2_small", BoundKind::exact, 2 * n - 1});
        }
        if (d == 2 && is_prime(n) && n >= 47) {
            out.push_back({"gao_thangadurai_p2", BoundKind::exact, 2 * n - 1});
        }
        if (n == 3 && d == 3) out.push_back({"c3_cubed", BoundKind::exact, 10});
        if (n == 3 && d == 4) out.push_back({"c3_fourth", BoundKind::exact, 21});
        if (n == 3 && d == 5) out.push_back({"c3_fifth", BoundKind::exact, 45});
    }
    if (g.rank() == 2 && g.factors()[0] == 2 && g.factors()[1] % 2 == 0) {
        const std::int64_t n = g.factors()[1] / 2;
        out.push_back({"marchan_c2_c2n", BoundKind::exact,
                       n % 2 == 1 ? 2 * n + 3 : 2 * n + 2});
    }
    if (g.rank() == 2 && g.factors()[0] == 3 && g.factors()[1] % 3 == 0 &&
        is_prime(g.factors()[1] / 3)) {
        const std::int64_t p = g.factors()[1] / 3;
        out.push_back({"guillot_c3_c3p", BoundKind::exact, p == 3 ? 13 : 3 * p + 3});
    }
    return out;
}

BoundReport BoundsRegistry::classical_harborth(const Group& g) {
    const int k = static_cast<int>(g.exponent());
    std::vector<Contribution> contributions = classical_contributions(g);
    contributions.push_back({"trivial_lower", BoundKind::lower, k});
    contributions.push_back({"trivial_upper", BoundKind::upper, g.order() + 1});
    std::int64_t lo = 1, hi = g.order() + 1;
    std::vector<Provenance> prov;
    for (const auto& c : contributions) {
        if (c.kind != BoundKind::upper) lo = std::max(lo, c.value);
        if (c.kind != BoundKind::lower) hi = std::min(hi, c.value);
        prov.push_back({c.source, c.kind, c.value});
    }
    return BoundReport{g,
                       k,
                       lo,
                       hi,
                       lo == hi ? std::optional<std::int64_t>(lo) : std::nullopt,
                       std::move(prov),
                       std::nullopt};
}

BoundsRegistry::BoundsRegistry() {
    special_values_ = {
        {{"7", 6}, 7},    // remark313
        {{"11", 8}, 10},  // remark313
        {{"13", 8}, 10},  // remark313
    };

    auto entry = [&](std::string id, FormulaFn fn) {
        entries_.push_back({std::move(id), std::move(fn)});
    };

    entry("g1_definition", [](const Group& g, int k, std::vector<Contribution>& out) {
        if (k == 1) out.push_back({"g1_definition", BoundKind::exact, g.order()});
    });
    entry("lemma31_g2", [](const Group& g, int k, std::vector<Contribution>& out) {
        if (k == 2) {
            const std::int64_t b = torsion_size(g);
            out.push_back({"lemma31_g2", BoundKind::exact, (g.order() - b) / 2 + b + 1});
        }
    });
    entry("thm311", [](const Group& g, int k, std::vector<Contribution>& out) {
        if (!g.is_cyclic()) return;
        if (auto r = thm311_value(g.order(), k)) {
            for (const auto& p : r->provenance) out.push_back({p.source, p.kind, p.value});
        }
    });
    entry("dsh_upper", [](const Group& g, int k, std::vector<Contribution>& out) {
        if (g.is_cyclic() && is_prime(g.order()) && k >= 1 && k < g.order()) {
            out.push_back({"dsh_upper", BoundKind::upper, dsh_upper(g.order(), k)});
        }
    });
    entry("small_k_cyclic", [](const Group& g, int k, std::vector<Contribution>& out) {
        if (!g.is_cyclic() || (k != 3 && k != 4)) return;
        if (auto r = small_k_cyclic_bounds(g.order(), k)) {
            for (const auto& p : r->provenance) out.push_back({p.source, p.kind, p.value});
        }
    });
    entry("prop33_formula", [](const Group& g, int k, std::vector<Contribution>& out) {
        if (k != 3 || g.factors().front() < 4) return;
        std::int64_t value = 0;
        if (g.exponent() % 2 == 1) {
            value = 2;
            for (std::int64_t f : g.factors()) value += ceil_div(f, 3);
        } else {
            value = 1;
            for (std::int64_t f : g.factors()) value += f % 2 == 1 ? ceil_div(f, 3) : f / 2;
        }
        out.push_back({"prop33", BoundKind::lower, value});
    });
    entry("prop34_formula", [](const Group& g, int k, std::vector<Contribution>& out) {
        const std::int64_t nt = g.exponent();
        if (k < 1 || k >= nt) return;
        const std::int64_t range = nt / k - (nt % k == 0 ? 1 : 0);
        if (range < 1) return;
        out.push_back({"prop34", BoundKind::lower, g.order() / nt * range + 1});
    });
    entry("prop319_lift", [this](const Group& g, int k, std::vector<Contribution>& out) {
        if (!g.is_cyclic() || k % 2 != 0 || g.order() % 2 != 0) return;
        const std::int64_t half = g.order() / 2;
        if (half % 2 != 1 || half < k) return;
        const BoundReport inner = best_bounds(Group::from_moduli({half}), k);
        if (auto lifted = lift_bounds(half, k, inner.upper)) {
            out.push_back({"prop319_lift", BoundKind::upper, *lifted});
        }
    });
    entry("cor320", [](const Group& g, int k, std::vector<Contribution>& out) {
        if (!g.is_cyclic() || k != 4 || g.order() % 2 != 0) return;
        const std::int64_t p = g.order() / 2;
        if (!is_prime(p) || p <= 3) return;
        out.push_back({"cor320", BoundKind::lower, (p + 7) / 2});
        out.push_back({"cor320", BoundKind::upper, 2 * ceil_div(p + 15, 4) - 1});
    });
    entry("classical", [](const Group& g, int k, std::vector<Contribution>& out) {
        if (k != g.exponent()) return;
        for (const auto& c : classical_contributions(g)) out.push_back(c);
    });
}

void BoundsRegistry::collect(const Group& g, int k, std::vector<Contribution>& out) const {
    if (auto it = special_values_.find({g.literal(), k}); it != special_values_.end()) {
        out.push_back({"special_value", BoundKind::exact, it->second});
    }
    if (auto it = registered_.find({g.literal(), k}); it != registered_.end()) {
        out.push_back({"exact_solver", BoundKind::exact, it->second.first});
    }
    for (const auto& e : entries_) {
        e.apply(g, k, out);
    }
}

void BoundsRegistry::register_exact(const Group& g, int k, std::int64_t value,
                                    std::optional<ElementSet> witness) {
    if (witness) {
        if (static_cast<std::int64_t>(witness->size()) != value - 1 ||
            !is_k_zero_sum_free(*witness, k)) {
            throw std::invalid_argument("registered witness must be a k-zero-sum-free set of size " +
                                        std::to_string(value - 1));
        }
    }
    registered_[{g.literal(), k}] = {value, std::move(witness)};
}

BoundReport BoundsRegistry::best_bounds(const Group& g, int k) const {
    if (k < 1 || k > g.order()) {
        throw std::domain_error("k must satisfy 1 <= k <= |G|");
    }
    std::vector<Contribution> contributions;
    contributions.push_back({"trivial_lower", BoundKind::lower, static_cast<std::int64_t>(k)});
    contributions.push_back({"trivial_upper", BoundKind::upper, g.order() + 1});
    collect(g, k, contributions);

    std::optional<ElementSet> witness;
    std::int64_t witness_bound = -1;
    for (auto& c : constructions::applicable_for(g, k)) {
        contributions.push_back({c.name, BoundKind::lower, c.implied_lower_bound});
        if (c.implied_lower_bound > witness_bound) {
            witness_bound = c.implied_lower_bound;
            witness = std::move(c.set);
        }
    }

    std::int64_t lo = 0;
    std::string lo_source;
    std::int64_t hi = g.order() + 2;
    std::string hi_source;
    std::vector<Provenance> prov;
    for (const auto& c : contributions) {
        if (c.kind != BoundKind::upper && c.value > lo) {
            lo = c.value;
            lo_source = c.source;
        }
        if (c.kind != BoundKind::lower && c.value < hi) {
            hi = c.value;
            hi_source = c.source;
        }
        prov.push_back({c.source, c.kind, c.value});
    }
    if (lo > hi) {
        throw ConsistencyError("bound inconsistency for " + g.literal() + ", k=" +
                               std::to_string(k) + ": lower " + std::to_string(lo) + " (" +
                               lo_source + ") exceeds upper " + std::to_string(hi) + " (" +
                               hi_source + ")");
    }
    if (witness_bound < lo) {
        witness.reset();  // witness only reported when it attains the aggregate lower bound
    }
    if (auto it = registered_.find({g.literal(), k});
        it != registered_.end() && it->second.second && it->second.first == lo) {
        witness = it->second.second;
    }
    if (k == 2) {
        const BoundReport g2 = g1_g2_values(g, 2);
        if (g2.exact && *g2.exact == lo && g2.witness) witness = g2.witness;
    }
    return BoundReport{g,
                       k,
                       lo,
                       hi,
                       lo == hi ? std::optional<std::int64_t>(lo) : std::nullopt,
                       std::move(prov),
                       std::move(witness)};
}

}  // namespace harborth
