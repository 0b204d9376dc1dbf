#pragma once

#include <iosfwd>
#include <vector>

#include "harborth/group.hpp"

namespace harborth {

/// Duplicate-free element collection over one group: the "set S" everywhere.
/// Members are kept sorted by canonical index; a bit vector over the whole
/// group gives O(1) membership. Immutable after construction.
///
/// Set file format (canonical, bit-exact round trip):
///   group: n_1,...,n_r
///   c_1,...,c_r        one element per line, members in ascending index order
class ElementSet {
   public:
    explicit ElementSet(Group g);
    ElementSet(Group g, std::vector<std::uint32_t> indices);

    static ElementSet from_coords(const Group& g,
                                  const std::vector<std::vector<std::int64_t>>& coords);
    /// Cyclic-group convenience: residues as single coordinates.
    static ElementSet of_residues(const Group& g, const std::vector<std::int64_t>& residues);

    const Group& group() const noexcept { return group_; }
    std::size_t size() const noexcept { return members_.size(); }
    bool empty() const noexcept { return members_.empty(); }
    bool contains(std::uint32_t index) const;
    const std::vector<std::uint32_t>& indices() const noexcept { return members_; }
    std::vector<Element> elements() const;

    bool operator==(const ElementSet& other) const {
        return group_ == other.group_ && members_ == other.members_;
    }

    void write(std::ostream& out) const;
    static ElementSet read(std::istream& in);
    std::string to_string() const;

   private:
    Group group_;
    std::vector<std::uint32_t> members_;
    std::vector<std::uint64_t> bits_;
};

struct HalvingDecomposition {
    ElementSet torsion;  // B = {x : 2x = 0}
    ElementSet half;     // one representative per {x, -x} pair outside B
};

/// Splits G into B = {x : 2x = 0} and representatives A of the {x, -x} pairs
/// covering G \ B; the smaller canonical index represents each pair.
HalvingDecomposition halving_decomposition(const Group& g);

}  // namespace harborth
