#include "harborth/group.hpp"

#include <algorithm>
#include <limits>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace harborth {

namespace {

std::int64_t checked_product(const std::vector<std::int64_t>& moduli) {
    __int128 prod = 1;
    for (std::int64_t m : moduli) {
        prod *= m;
        if (prod > std::numeric_limits<std::uint32_t>::max()) {
            throw std::invalid_argument("group order exceeds the supported index range");
        }
    }
    return static_cast<std::int64_t>(prod);
}

}  // namespace

Group::Group(std::vector<std::int64_t> factors) : factors_(std::move(factors)) {
    order_ = checked_product(factors_);
    strides_.assign(factors_.size(), 1);
    for (int i = static_cast<int>(factors_.size()) - 2; i >= 0; --i) {
        strides_[i] = strides_[i + 1] * factors_[i + 1];
    }
}

Group Group::from_moduli(const std::vector<std::int64_t>& moduli) {
    if (moduli.empty()) {
        throw std::invalid_argument("group requires at least one modulus");
    }
    for (std::int64_t m : moduli) {
        if (m < 2) {
            throw std::invalid_argument("modulus must be >= 2, got " + std::to_string(m));
        }
    }
    checked_product(moduli);

    // gcd/lcm exchange until the list is a divisibility chain; the product is
    // invariant under each exchange.
    std::vector<std::int64_t> f = moduli;
    bool changed = true;
    while (changed) {
        changed = false;
        std::sort(f.begin(), f.end());
        for (std::size_t i = 0; i < f.size(); ++i) {
            for (std::size_t j = i + 1; j < f.size(); ++j) {
                if (f[j] % f[i] != 0) {
                    const std::int64_t g = std::gcd(f[i], f[j]);
                    const std::int64_t l = f[i] / g * f[j];
                    f[i] = g;
                    f[j] = l;
                    changed = true;
                }
            }
        }
    }
    std::erase(f, 1);
    if (f.empty()) {
        // Cannot happen for inputs >= 2 (product >= 2), kept as a guard.
        throw std::invalid_argument("trivial group is rejected");
    }
    std::sort(f.begin(), f.end());
    return Group(std::move(f));
}

Group Group::parse(const std::string& literal) {
    std::vector<std::int64_t> moduli;
    std::string token;
    std::istringstream in(literal);
    while (std::getline(in, token, ',')) {
        std::size_t pos = 0;
        std::int64_t value = 0;
        try {
            value = std::stoll(token, &pos);
        } catch (const std::exception&) {
            throw std::invalid_argument("bad group literal component: '" + token + "'");
        }
        while (pos < token.size() && std::isspace(static_cast<unsigned char>(token[pos]))) ++pos;
        if (pos != token.size()) {
            throw std::invalid_argument("bad group literal component: '" + token + "'");
        }
        moduli.push_back(value);
    }
    if (moduli.empty()) {
        throw std::invalid_argument("empty group literal");
    }
    return from_moduli(moduli);
}

std::string Group::literal() const {
    std::string out;
    for (std::size_t i = 0; i < factors_.size(); ++i) {
        if (i) out += ',';
        out += std::to_string(factors_[i]);
    }
    return out;
}

bool Group::is_homocyclic() const noexcept {
    return std::all_of(factors_.begin(), factors_.end(),
                       [&](std::int64_t f) { return f == factors_.front(); });
}

void Group::check_index(std::uint32_t index) const {
    if (static_cast<std::int64_t>(index) >= order_) {
        throw std::out_of_range("element index " + std::to_string(index) +
                                " out of range for group of order " + std::to_string(order_));
    }
}

std::uint32_t Group::add(std::uint32_t a, std::uint32_t b) const {
    std::int64_t out = 0;
    for (std::size_t i = 0; i < factors_.size(); ++i) {
        const std::int64_t n = factors_[i];
        const std::int64_t ca = (a / strides_[i]) % n;
        const std::int64_t cb = (b / strides_[i]) % n;
        std::int64_t c = ca + cb;
        if (c >= n) c -= n;
        out += c * strides_[i];
    }
    return static_cast<std::uint32_t>(out);
}

std::uint32_t Group::negate(std::uint32_t a) const {
    std::int64_t out = 0;
    for (std::size_t i = 0; i < factors_.size(); ++i) {
        const std::int64_t n = factors_[i];
        const std::int64_t ca = (a / strides_[i]) % n;
        out += ((n - ca) % n) * strides_[i];
    }
    return static_cast<std::uint32_t>(out);
}

std::uint32_t Group::scalar_mul(std::int64_t m, std::uint32_t a) const {
    std::int64_t out = 0;
    for (std::size_t i = 0; i < factors_.size(); ++i) {
        const std::int64_t n = factors_[i];
        const std::uint64_t mm = static_cast<std::uint64_t>(((m % n) + n) % n);
        const std::uint64_t ca = static_cast<std::uint64_t>((a / strides_[i]) % n);
        out += static_cast<std::int64_t>((mm * ca) % static_cast<std::uint64_t>(n)) * strides_[i];
    }
    return static_cast<std::uint32_t>(out);
}

std::uint32_t Group::index_of(std::span<const std::int64_t> coords) const {
    if (coords.size() != factors_.size()) {
        throw std::invalid_argument("expected " + std::to_string(factors_.size()) +
                                    " coordinates, got " + std::to_string(coords.size()));
    }
    std::int64_t out = 0;
    for (std::size_t i = 0; i < factors_.size(); ++i) {
        if (coords[i] < 0 || coords[i] >= factors_[i]) {
            throw std::out_of_range("coordinate " + std::to_string(coords[i]) +
                                    " out of range [0, " + std::to_string(factors_[i]) + ")");
        }
        out += coords[i] * strides_[i];
    }
    return static_cast<std::uint32_t>(out);
}

std::vector<std::int64_t> Group::coords_of(std::uint32_t index) const {
    check_index(index);
    std::vector<std::int64_t> coords(factors_.size());
    for (std::size_t i = 0; i < factors_.size(); ++i) {
        coords[i] = (index / strides_[i]) % factors_[i];
    }
    return coords;
}

Element make_element(const Group& g, std::vector<std::int64_t> coords) {
    const std::uint32_t index = g.index_of(coords);
    return Element{g, std::move(coords), index};
}

Element element_at(const Group& g, std::uint32_t index) {
    return Element{g, g.coords_of(index), index};
}

namespace {
void check_same_group(const Element& a, const Element& b) {
    if (a.group != b.group) {
        throw std::domain_error("elements belong to different groups: " + a.group.literal() +
                                " vs " + b.group.literal());
    }
}
}  // namespace

Element add(const Element& a, const Element& b) {
    check_same_group(a, b);
    return element_at(a.group, a.group.add(a.index, b.index));
}

Element negate(const Element& a) {
    return element_at(a.group, a.group.negate(a.index));
}

Element scalar_mul(std::int64_t m, const Element& a) {
    return element_at(a.group, a.group.scalar_mul(m, a.index));
}

}  // namespace harborth
