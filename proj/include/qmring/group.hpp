#pragma once

#include "qmring/errors.hpp"
#include "qmring/numeric.hpp"

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

namespace qmr {

enum class GroupKind { Finite, FreeAbelian, InfiniteDihedral };

// One element of a group in canonical form. Which field is active depends on
// the GroupDescription the element belongs to:
//   Finite          -> index into the multiplication table (0 = identity)
//   FreeAbelian     -> exponent vector of length rank
//   InfiniteDihedral-> strictly alternating word over {a, b}; "" = identity.
struct GroupElement {
    std::uint32_t index = 0;
    std::vector<std::int64_t> exponents;
    std::string word;

    bool operator==(const GroupElement&) const = default;
};

// A group from one of the three supported families, together with the
// orientation character omega: G -> {+1, -1}.
class GroupDescription {
public:
    static GroupDescription finite(std::vector<std::vector<std::uint32_t>> table,
                                   std::vector<int> omega);
    static GroupDescription free_abelian(std::size_t rank, std::vector<int> omega);
    static GroupDescription infinite_dihedral(int omega_a, int omega_b);

    GroupKind kind() const { return kind_; }
    std::size_t size() const { return table_.size(); }      // Finite only
    std::size_t rank() const { return rank_; }               // FreeAbelian only
    const std::vector<std::vector<std::uint32_t>>& table() const { return table_; }

    bool is_valid_element(const GroupElement& g) const;
    void require_valid(const GroupElement& g) const;

    GroupElement identity() const;
    GroupElement mul(const GroupElement& g, const GroupElement& h) const;
    GroupElement inverse(const GroupElement& g) const;
    int omega(const GroupElement& g) const;

    // Fixed total order used for canonical forms: Finite by index,
    // FreeAbelian lexicographic on exponents, InfiniteDihedral by word
    // length then lexicographic. Returns <0, 0, >0.
    int compare(const GroupElement& g, const GroupElement& h) const;

    bool operator==(const GroupDescription&) const = default;

private:
    GroupDescription() = default;
    void validate() const;

    GroupKind kind_ = GroupKind::Finite;
    // Finite
    std::vector<std::vector<std::uint32_t>> table_;
    std::vector<std::uint32_t> inverse_;
    std::vector<int> omega_table_;
    // FreeAbelian
    std::size_t rank_ = 0;
    std::vector<int> omega_gens_;
    // InfiniteDihedral
    int omega_a_ = 1;
    int omega_b_ = 1;
};

using GroupPtr = std::shared_ptr<const GroupDescription>;

GroupElement finite_element(std::uint32_t index);
GroupElement abelian_element(std::vector<std::int64_t> exponents);
GroupElement dihedral_element(std::string word);

} // namespace qmr
