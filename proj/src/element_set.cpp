#include "harborth/element_set.hpp"

#include <algorithm>
#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace harborth {

namespace {
std::vector<std::uint64_t> build_bits(const Group& g, const std::vector<std::uint32_t>& members) {
    std::vector<std::uint64_t> bits((g.order() + 63) / 64, 0);
    for (std::uint32_t m : members) {
        bits[m >> 6] |= std::uint64_t{1} << (m & 63);
    }
    return bits;
}
}  // namespace

ElementSet::ElementSet(Group g) : group_(std::move(g)) {
    bits_.assign((group_.order() + 63) / 64, 0);
}

ElementSet::ElementSet(Group g, std::vector<std::uint32_t> indices)
    : group_(std::move(g)), members_(std::move(indices)) {
    std::sort(members_.begin(), members_.end());
    for (std::size_t i = 0; i < members_.size(); ++i) {
        group_.check_index(members_[i]);
        if (i > 0 && members_[i] == members_[i - 1]) {
            throw std::invalid_argument("duplicate element index " + std::to_string(members_[i]));
        }
    }
    bits_ = build_bits(group_, members_);
}

ElementSet ElementSet::from_coords(const Group& g,
                                   const std::vector<std::vector<std::int64_t>>& coords) {
    std::vector<std::uint32_t> indices;
    indices.reserve(coords.size());
    for (const auto& c : coords) {
        indices.push_back(g.index_of(c));
    }
    return ElementSet(g, std::move(indices));
}

ElementSet ElementSet::of_residues(const Group& g, const std::vector<std::int64_t>& residues) {
    if (g.rank() != 1) {
        throw std::domain_error("of_residues requires a cyclic group");
    }
    std::vector<std::uint32_t> indices;
    indices.reserve(residues.size());
    const std::int64_t n = g.order();
    for (std::int64_t r : residues) {
        indices.push_back(static_cast<std::uint32_t>(((r % n) + n) % n));
    }
    return ElementSet(g, std::move(indices));
}

bool ElementSet::contains(std::uint32_t index) const {
    group_.check_index(index);
    return (bits_[index >> 6] >> (index & 63)) & 1;
}

std::vector<Element> ElementSet::elements() const {
    std::vector<Element> out;
    out.reserve(members_.size());
    for (std::uint32_t m : members_) {
        out.push_back(element_at(group_, m));
    }
    return out;
}

void ElementSet::write(std::ostream& out) const {
    out << "group: " << group_.literal() << '\n';
    for (std::uint32_t m : members_) {
        const auto coords = group_.coords_of(m);
        for (std::size_t i = 0; i < coords.size(); ++i) {
            if (i) out << ',';
            out << coords[i];
        }
        out << '\n';
    }
}

ElementSet ElementSet::read(std::istream& in) {
    std::string line;
    if (!std::getline(in, line)) {
        throw std::invalid_argument("set file is empty");
    }
    const std::string prefix = "group: ";
    if (line.rfind(prefix, 0) != 0) {
        throw std::invalid_argument("set file must start with 'group: <moduli>'");
    }
    const Group g = Group::parse(line.substr(prefix.size()));
    std::vector<std::uint32_t> indices;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        std::vector<std::int64_t> coords;
        std::istringstream ls(line);
        std::string token;
        while (std::getline(ls, token, ',')) {
            try {
                coords.push_back(std::stoll(token));
            } catch (const std::exception&) {
                throw std::invalid_argument("bad coordinate '" + token + "' in set file");
            }
        }
        indices.push_back(g.index_of(coords));
    }
    return ElementSet(g, std::move(indices));
}

std::string ElementSet::to_string() const {
    std::ostringstream out;
    write(out);
    return out.str();
}

HalvingDecomposition halving_decomposition(const Group& g) {
    std::vector<std::uint32_t> torsion;
    std::vector<std::uint32_t> half;
    for (std::int64_t x = 0; x < g.order(); ++x) {
        const auto xi = static_cast<std::uint32_t>(x);
        if (g.add(xi, xi) == 0) {
            torsion.push_back(xi);
        } else if (xi < g.negate(xi)) {
            half.push_back(xi);
        }
    }
    return HalvingDecomposition{ElementSet(g, std::move(torsion)), ElementSet(g, std::move(half))};
}

}  // namespace harborth
