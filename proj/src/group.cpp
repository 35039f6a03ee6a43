#include "gframe/group.hpp"

#include <cmath>
#include <numbers>

namespace gframe {

FiniteAbelianGroup::FiniteAbelianGroup(std::vector<int> factors)
    : factors_(std::move(factors)) {
    if (factors_.empty())
        throw InvalidArgument("group needs at least one cyclic factor");
    order_ = 1;
    for (int n : factors_) {
        if (n < 2) throw InvalidArgument("cyclic factor must be >= 2, got " +
                                         std::to_string(n));
        order_ *= static_cast<std::size_t>(n);
    }
}

std::string FiniteAbelianGroup::name() const {
    std::string s;
    for (std::size_t j = 0; j < factors_.size(); ++j) {
        if (j) s += "x";
        s += "Z" + std::to_string(factors_[j]);
    }
    return s;
}

GroupElement FiniteAbelianGroup::identity() const {
    return GroupElement{std::vector<int>(factors_.size(), 0)};
}

Character FiniteAbelianGroup::trivial_character() const {
    return Character{std::vector<int>(factors_.size(), 0)};
}

void FiniteAbelianGroup::check_element(const GroupElement& a) const {
    if (a.coords.size() != factors_.size())
        throw GroupMismatch("element shape does not match group " + name());
    for (std::size_t j = 0; j < factors_.size(); ++j)
        if (a.coords[j] < 0 || a.coords[j] >= factors_[j])
            throw InvalidArgument("element coordinate out of range in " + name());
}

void FiniteAbelianGroup::check_character(const Character& chi) const {
    if (chi.dual_coords.size() != factors_.size())
        throw GroupMismatch("character shape does not match group " + name());
    for (std::size_t j = 0; j < factors_.size(); ++j)
        if (chi.dual_coords[j] < 0 || chi.dual_coords[j] >= factors_[j])
            throw InvalidArgument("character coordinate out of range in " + name());
}

GroupElement FiniteAbelianGroup::mul(const GroupElement& a, const GroupElement& b) const {
    check_element(a);
    check_element(b);
    GroupElement r;
    r.coords.resize(factors_.size());
    for (std::size_t j = 0; j < factors_.size(); ++j)
        r.coords[j] = (a.coords[j] + b.coords[j]) % factors_[j];
    return r;
}

GroupElement FiniteAbelianGroup::inv(const GroupElement& a) const {
    check_element(a);
    GroupElement r;
    r.coords.resize(factors_.size());
    for (std::size_t j = 0; j < factors_.size(); ++j)
        r.coords[j] = a.coords[j] == 0 ? 0 : factors_[j] - a.coords[j];
    return r;
}

cd FiniteAbelianGroup::char_value(const Character& chi, const GroupElement& g) const {
    check_character(chi);
    check_element(g);
    double phase = 0.0;
    for (std::size_t j = 0; j < factors_.size(); ++j)
        phase += static_cast<double>(chi.dual_coords[j]) * g.coords[j] / factors_[j];
    return std::polar(1.0, 2.0 * std::numbers::pi * phase);
}

GroupElement FiniteAbelianGroup::cyclic(long long value) const {
    if (!is_cyclic())
        throw InvalidArgument("bare-integer element only defined for cyclic groups, group is " +
                              name());
    const long long n = factors_[0];
    return GroupElement{{static_cast<int>(((value % n) + n) % n)}};
}

std::size_t FiniteAbelianGroup::element_index(const GroupElement& a) const {
    check_element(a);
    std::size_t idx = 0;
    for (std::size_t j = 0; j < factors_.size(); ++j)
        idx = idx * static_cast<std::size_t>(factors_[j]) +
              static_cast<std::size_t>(a.coords[j]);
    return idx;
}

GroupElement FiniteAbelianGroup::element_at(std::size_t idx) const {
    if (idx >= order_) throw InvalidArgument("element index out of range");
    GroupElement a;
    a.coords.resize(factors_.size());
    for (std::size_t j = factors_.size(); j-- > 0;) {
        a.coords[j] = static_cast<int>(idx % static_cast<std::size_t>(factors_[j]));
        idx /= static_cast<std::size_t>(factors_[j]);
    }
    return a;
}

std::size_t FiniteAbelianGroup::character_index(const Character& chi) const {
    check_character(chi);
    std::size_t idx = 0;
    for (std::size_t j = 0; j < factors_.size(); ++j)
        idx = idx * static_cast<std::size_t>(factors_[j]) +
              static_cast<std::size_t>(chi.dual_coords[j]);
    return idx;
}

Character FiniteAbelianGroup::character_at(std::size_t idx) const {
    return Character{element_at(idx).coords};
}

std::size_t FiniteAbelianGroup::tuple_count(int m) const {
    if (m < 0) throw InvalidArgument("tuple length must be >= 0");
    std::size_t c = 1;
    for (int i = 0; i < m; ++i) c *= order_;
    return c;
}

std::size_t FiniteAbelianGroup::tuple_index(const std::vector<GroupElement>& t) const {
    std::size_t idx = 0;
    for (const auto& a : t) idx = idx * order_ + element_index(a);
    return idx;
}

std::vector<GroupElement> FiniteAbelianGroup::tuple_at(std::size_t idx, int m) const {
    std::vector<GroupElement> t(static_cast<std::size_t>(m));
    for (int j = m; j-- > 0;) {
        t[static_cast<std::size_t>(j)] = element_at(idx % order_);
        idx /= order_;
    }
    return t;
}

std::vector<GroupElement> FiniteAbelianGroup::elements() const {
    std::vector<GroupElement> out;
    out.reserve(order_);
    for (std::size_t i = 0; i < order_; ++i) out.push_back(element_at(i));
    return out;
}

std::vector<Character> FiniteAbelianGroup::characters() const {
    std::vector<Character> out;
    out.reserve(order_);
    for (std::size_t i = 0; i < order_; ++i) out.push_back(character_at(i));
    return out;
}

std::vector<std::vector<GroupElement>> FiniteAbelianGroup::tuples(int m) const {
    const std::size_t count = tuple_count(m);
    std::vector<std::vector<GroupElement>> out;
    out.reserve(count);
    for (std::size_t i = 0; i < count; ++i) out.push_back(tuple_at(i, m));
    return out;
}

}  // namespace gframe
