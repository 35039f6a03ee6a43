#pragma once

#include <complex>
#include <cstdint>
#include <string>
#include <vector>

#include "gframe/error.hpp"

namespace gframe {

using cd = std::complex<double>;

/// Element of a finite Abelian group, stored as one coordinate per cyclic
/// factor, coords[j] in [0, n_j).
struct GroupElement {
    std::vector<int> coords;

    bool operator==(const GroupElement&) const = default;
};

/// Character of the group, labelled by dual coordinates of the same shape as
/// an element. chi_k(g) = exp(2*pi*i * sum_j k_j g_j / n_j).
struct Character {
    std::vector<int> dual_coords;

    bool operator==(const Character&) const = default;
};

/// Finite Abelian group as an explicit product of cyclic factors Z_{n_1} x
/// ... x Z_{n_k}. Doubles as configuration space and translation group.
/// Enumeration of elements, characters and tuples is mixed-radix with the
/// first factor most significant; every linear index downstream derives from
/// this one convention.
class FiniteAbelianGroup {
public:
    explicit FiniteAbelianGroup(std::vector<int> factors);

    const std::vector<int>& factors() const { return factors_; }
    std::size_t order() const { return order_; }
    std::size_t num_factors() const { return factors_.size(); }
    bool operator==(const FiniteAbelianGroup& o) const { return factors_ == o.factors_; }
    std::string name() const;  // e.g. "Z4", "Z2xZ3"

    bool is_cyclic() const { return factors_.size() == 1; }

    GroupElement identity() const;
    Character trivial_character() const;

    GroupElement mul(const GroupElement& a, const GroupElement& b) const;
    GroupElement inv(const GroupElement& a) const;
    cd char_value(const Character& chi, const GroupElement& g) const;

    /// Element for a bare integer when the group is a single cyclic factor
    /// (value taken mod n; negative values allowed).
    GroupElement cyclic(long long value) const;

    // Mixed-radix linear indexing of elements and characters.
    std::size_t element_index(const GroupElement& a) const;
    GroupElement element_at(std::size_t idx) const;
    std::size_t character_index(const Character& chi) const;
    Character character_at(std::size_t idx) const;

    // Tuples in G^M, row-major with position 0 most significant.
    std::size_t tuple_count(int m) const;  // |G|^M
    std::size_t tuple_index(const std::vector<GroupElement>& t) const;
    std::vector<GroupElement> tuple_at(std::size_t idx, int m) const;

    std::vector<GroupElement> elements() const;
    std::vector<Character> characters() const;
    std::vector<std::vector<GroupElement>> tuples(int m) const;

    void check_element(const GroupElement& a) const;
    void check_character(const Character& chi) const;

private:
    std::vector<int> factors_;
    std::size_t order_ = 0;
};

}  // namespace gframe
