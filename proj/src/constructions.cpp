#include "harborth/constructions.hpp"

#include <algorithm>
#include <stdexcept>

#include "harborth/numeric.hpp"

namespace harborth::constructions {

namespace {

ConstructionResult finish(std::string name, const Group& g, int k,
                          std::vector<std::uint32_t> indices, std::int64_t claimed_size,
                          bool tolerate_unverified = false) {
    ElementSet set(g, std::move(indices));
    if (static_cast<std::int64_t>(set.size()) != claimed_size) {
        throw std::logic_error(name + ": generated size " + std::to_string(set.size()) +
                               " does not match claimed size " + std::to_string(claimed_size));
    }
    const bool verified = is_k_zero_sum_free(set, k);
    if (!verified && !tolerate_unverified) {
        throw VerificationError(name + ": generated set is not " + std::to_string(k) +
                                "-zero-sum free in " + g.literal());
    }
    return ConstructionResult{std::move(name), g,           k, std::move(set),
                              claimed_size,    claimed_size + 1, verified};
}

std::vector<std::uint32_t> interval_indices(std::int64_t lo, std::int64_t hi) {
    std::vector<std::uint32_t> out;
    for (std::int64_t v = lo; v <= hi; ++v) out.push_back(static_cast<std::uint32_t>(v));
    return out;
}

}  // namespace

ConstructionResult c3_interval(std::int64_t n) {
    if (n < 4) throw std::domain_error("c3_interval requires n >= 4");
    const Group g = Group::from_moduli({n});
    const std::int64_t top = ceil_div(n, 3);  // = n - floor(2n/3)
    return finish("c3_interval", g, 3, interval_indices(1, top), top);
}

ConstructionResult c3_odds(std::int64_t n) {
    if (n < 4 || n % 2 != 0) throw std::domain_error("c3_odds requires even n >= 4");
    const Group g = Group::from_moduli({n});
    std::vector<std::uint32_t> odds;
    for (std::int64_t v = 1; v < n; v += 2) odds.push_back(static_cast<std::uint32_t>(v));
    return finish("c3_odds", g, 3, std::move(odds), n / 2);
}

ConstructionResult prop33_assembly(const Group& g) {
    if (g.factors().front() < 4) {
        throw std::domain_error("prop33_assembly requires n_1 >= 4");
    }
    std::vector<std::uint32_t> members;
    std::int64_t claimed = 0;
    bool all_odd = true;
    for (int axis = 0; axis < g.rank(); ++axis) {
        const std::int64_t n = g.factors()[axis];
        std::vector<std::int64_t> coords(g.rank(), 0);
        if (n % 2 == 1) {
            for (std::int64_t j = 1; j <= ceil_div(n, 3); ++j) {
                coords[axis] = j;
                members.push_back(g.index_of(coords));
            }
            claimed += ceil_div(n, 3);
        } else {
            all_odd = false;
            for (std::int64_t j = 1; j < n; j += 2) {
                coords[axis] = j;
                members.push_back(g.index_of(coords));
            }
            claimed += n / 2;
        }
    }
    if (all_odd) {
        members.push_back(0);
        claimed += 1;
    }
    return finish("prop33_assembly", g, 3, std::move(members), claimed);
}

ConstructionResult prop34_slab(const Group& g, int k) {
    const std::int64_t nt = g.exponent();
    if (k < 1 || k >= nt) {
        throw std::domain_error("prop34_slab requires 1 <= k < n_t");
    }
    const std::int64_t eps = (nt % k == 0) ? 1 : 0;
    const std::int64_t range = nt / k - eps;
    if (range < 1) {
        throw std::domain_error("prop34_slab range is empty for k=" + std::to_string(k) +
                                " in " + g.literal());
    }
    const std::int64_t prefix_order = g.order() / nt;
    std::vector<std::uint32_t> members;
    std::vector<std::int64_t> coords(g.rank(), 0);
    for (std::int64_t p = 0; p < prefix_order; ++p) {
        // prefix coordinates in mixed radix over the first rank-1 factors
        std::int64_t rest = p;
        for (int i = g.rank() - 2; i >= 0; --i) {
            coords[i] = rest % g.factors()[i];
            rest /= g.factors()[i];
        }
        for (std::int64_t h = 1; h <= range; ++h) {
            coords[g.rank() - 1] = h;
            members.push_back(g.index_of(coords));
        }
    }
    return finish("prop34_slab", g, k, std::move(members), prefix_order * range);
}

ConstructionResult prop36_c2r(int r) {
    if (r < 2) throw std::domain_error("prop36_c2r requires r >= 2");
    const Group g = Group::from_moduli(std::vector<std::int64_t>(r, 2));
    std::vector<std::uint32_t> members;
    std::vector<std::int64_t> coords(r, 0);
    auto basis = [&](int i) {  // e_i, 1-based
        std::fill(coords.begin(), coords.end(), 0);
        coords[i - 1] = 1;
        return g.index_of(coords);
    };
    for (int i = 1; i <= r; ++i) members.push_back(basis(i));
    for (int i = 1; 2 * i <= r; ++i) {
        members.push_back(g.add(basis(2 * i - 1), basis(2 * i)));
    }
    std::int64_t claimed = r + r / 2;
    if (r >= 7) {
        for (int i = 1; i + 6 <= r; i += 3) {
            std::uint32_t acc = 0;
            for (int j = i; j <= i + 6; ++j) acc = g.add(acc, basis(j));
            members.push_back(acc);
        }
        claimed += (r - 4) / 3;
    }
    return finish("prop36_c2r", g, 4, std::move(members), claimed);
}

ConstructionResult thm311_extremal(std::int64_t p, int k) {
    if (!is_prime(p)) throw std::domain_error("thm311_extremal requires a prime p");
    const bool even = k % 2 == 0;
    if ((even && k < 4) || (!even && k < 3) || k >= p) {
        throw std::domain_error("thm311_extremal requires 4 <= k < p (even) or 3 <= k < p (odd)");
    }
    const std::int64_t m = k / 2;
    const std::int64_t r = p % k;
    const std::int64_t tail = ceil_div(p - 1, k);
    std::vector<std::uint32_t> members;
    std::int64_t claimed;
    if (even) {
        members = interval_indices(0, m - 1);
        const auto upper = interval_indices(p - tail - m + 1, p - 1);
        members.insert(members.end(), upper.begin(), upper.end());
        claimed = tail + k - 1;
    } else if (r != 1) {
        members = interval_indices(1, m);
        const auto upper = interval_indices(p - tail - m + 1, p - 1);
        members.insert(members.end(), upper.begin(), upper.end());
        claimed = tail + k - 2;
    } else {
        members = interval_indices(1, m);
        const auto upper = interval_indices(p - tail - m, p - 1);
        members.insert(members.end(), upper.begin(), upper.end());
        claimed = tail + k - 1;
    }
    return finish("thm311_extremal", Group::from_moduli({p}), k, std::move(members), claimed,
                  /*tolerate_unverified=*/true);
}

ConstructionResult prop317_318_set(std::int64_t n) {
    const bool odd = n % 2 == 1;
    if ((odd && n < 5) || (!odd && n < 6)) {
        throw std::domain_error("prop317_318_set requires odd n >= 5 or even n >= 6");
    }
    std::int64_t top;
    switch (n % 4) {
        case 0: top = (n + 4) / 4; break;
        case 1: top = (n + 3) / 4; break;
        case 2: top = (n + 2) / 4; break;
        default: top = (n + 5) / 4; break;
    }
    std::vector<std::uint32_t> members = interval_indices(0, top);
    members.push_back(static_cast<std::uint32_t>(n - 2));
    return finish("prop317_318_set", Group::from_moduli({n}), 4, std::move(members), top + 2);
}

std::vector<ConstructionResult> fixture_sets() {
    struct Fixture {
        std::string name;
        std::int64_t n;
        int k;
        std::vector<std::int64_t> residues;
    };
    const std::vector<Fixture> fixtures = {
        {"prop315_c8_k3", 8, 3, {1, 2, 4, 6, 7}},
        {"prop315_c9_k3", 9, 3, {1, 2, 4, 5, 7, 8}},
        {"prop315_c10_k3", 10, 3, {2, 3, 4, 6, 7, 8}},
        {"prop315_c11_k3", 11, 3, {3, 4, 5, 6, 7, 8}},
        {"prop315_c12_k3", 12, 3, {1, 2, 5, 7, 10, 11}},
        {"remark313_c7_k6", 7, 6, {0, 1, 2, 4, 5, 6}},
        {"remark313_c11_k8_a", 11, 8, {0, 1, 2, 4, 6, 7, 8, 9, 10}},
        {"remark313_c11_k8_b", 11, 8, {0, 1, 2, 5, 6, 7, 8, 9, 10}},
        {"remark313_c13_k8", 13, 8, {0, 1, 2, 3, 8, 9, 10, 11, 12}},
    };
    std::vector<ConstructionResult> out;
    out.reserve(fixtures.size());
    for (const auto& f : fixtures) {
        const Group g = Group::from_moduli({f.n});
        std::vector<std::uint32_t> indices;
        for (std::int64_t r : f.residues) indices.push_back(static_cast<std::uint32_t>(r));
        out.push_back(finish(f.name, g, f.k, std::move(indices),
                             static_cast<std::int64_t>(f.residues.size())));
    }
    return out;
}

std::vector<ConstructionResult> applicable_for(const Group& g, int k) {
    std::vector<ConstructionResult> out;
    auto keep_if_verified = [&](ConstructionResult r) {
        if (r.verified) out.push_back(std::move(r));
    };
    const std::int64_t n = g.order();
    if (g.is_cyclic()) {
        if (k == 3 && n >= 4) {
            keep_if_verified(c3_interval(n));
            if (n % 2 == 0) keep_if_verified(c3_odds(n));
        }
        if (k == 4 && ((n % 2 == 1 && n >= 5) || (n % 2 == 0 && n >= 6))) {
            keep_if_verified(prop317_318_set(n));
        }
        if (is_prime(n) && k < n && ((k % 2 == 0 && k >= 4) || (k % 2 == 1 && k >= 3))) {
            keep_if_verified(thm311_extremal(n, k));
        }
    }
    if (k == 3 && g.factors().front() >= 4) {
        keep_if_verified(prop33_assembly(g));
    }
    if (k >= 1 && k < g.exponent() && g.exponent() / k - (g.exponent() % k == 0 ? 1 : 0) >= 1) {
        keep_if_verified(prop34_slab(g, k));
    }
    if (k == 4 && g.is_elementary_two()) {
        keep_if_verified(prop36_c2r(g.rank()));
    }
    for (auto& fixture : fixture_sets()) {
        if (fixture.group == g && fixture.k == k) {
            out.push_back(std::move(fixture));
        }
    }
    return out;
}

}  // namespace harborth::constructions
