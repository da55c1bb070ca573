// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace gcodelab {

/// Index of a group element; the identity is always 0.
using Elem = std::size_t;

/// A finite group given by its Cayley table.
///
/// Element orderings of the builtin constructors:
///  - cyclic:n          powers r^0, r^1, ..., r^(n-1)
///  - dihedral:m        rotations r^i (i < m), then reflections s r^i; r s = s r^-1
///  - symmetric:k       permutations of {0..k-1} in lexicographic one-line order,
///                      composed left to right: (a*b)(i) = b(a(i))
///  - quaternion8       1, i, j, k, -1, -i, -j, -k
///  - elemabelian:p,m   vectors of F_p^m in lexicographic order (first coordinate most significant)
///  - A*B               pairs (a, b) in lexicographic order, index a*|B| + b
class Group {
public:
    static constexpr std::size_t kMaxOrder = 4096;

    /// Validates the table (Latin square, identity, associativity) and relabels so the
    /// identity sits at index 0. Throws std::invalid_argument on an invalid table.
    static Group from_table(std::string name, std::vector<std::vector<Elem>> table, std::vector<std::string> labels = {});

    const std::string& name() const noexcept { return name_; }
    std::size_t order() const noexcept { return order_; }
    Elem mul(Elem a, Elem b) const { return table_[a * order_ + b]; }
    Elem inv(Elem a) const { return inverse_[a]; }
    std::size_t element_order(Elem a) const { return element_orders_[a]; }
    const std::string& label(Elem a) const { return labels_[a]; }
    const std::vector<std::string>& labels() const noexcept { return labels_; }
    /// A deterministic generating set: greedy over the index order.
    const std::vector<Elem>& generators() const noexcept { return generators_; }

    std::vector<std::vector<Elem>> table() const;

private:
    Group() = default;

    std::string name_;
    std::size_t order_ = 0;
    std::vector<Elem> table_;
    std::vector<Elem> inverse_;
    std::vector<std::size_t> element_orders_;
    std::vector<std::string> labels_;
    std::vector<Elem> generators_;
};

using GroupPtr = std::shared_ptr<const Group>;

GroupPtr make_cyclic(std::size_t n);
GroupPtr make_dihedral(std::size_t m);
GroupPtr make_symmetric(std::size_t k);
GroupPtr make_quaternion8();
GroupPtr make_elementary_abelian(std::uint32_t p, std::size_t m);
GroupPtr direct_product(const GroupPtr& a, const GroupPtr& b);

/// Closure of a set of elements under the group law.
class Subgroup {
public:
    /// Throws std::invalid_argument unless `members` is a subgroup of `parent`.
    Subgroup(GroupPtr parent, std::vector<Elem> members);

    static Subgroup trivial(GroupPtr parent);
    static Subgroup whole(GroupPtr parent);

    const GroupPtr& parent() const noexcept { return parent_; }
    const std::vector<Elem>& members() const noexcept { return members_; }
    std::size_t order() const noexcept { return members_.size(); }
    std::size_t index() const noexcept { return parent_->order() / members_.size(); }
    bool contains(Elem g) const { return mask_[g]; }

    friend bool operator==(const Subgroup& a, const Subgroup& b) {
        return a.parent_ == b.parent_ && a.members_ == b.members_;
    }

private:
    GroupPtr parent_;
    std::vector<Elem> members_;
    std::vector<bool> mask_;
};

Subgroup subgroup_generated(const GroupPtr& g, const std::vector<Elem>& seeds);
bool is_subgroup(const Group& g, const std::vector<Elem>& members);
bool is_normal(const Group& g, const std::vector<Elem>& members);

/// Right cosets Hx. The first block is H; each further block is generated by the
/// smallest index not yet covered. Blocks are sorted.
std::vector<std::vector<Elem>> right_cosets(const Subgroup& h);

/// Largest power of p dividing n.
std::uint64_t p_part(std::uint64_t n, std::uint32_t p);
std::uint64_t p_part(const Group& g, std::uint32_t p);
bool is_p_power(std::uint64_t n, std::uint32_t p);
bool is_p_group(const Group& g, std::uint32_t p);

/// The elements of order prime to p, when they form a normal subgroup of index |G|_p.
std::optional<Subgroup> normal_p_complement(const GroupPtr& g, std::uint32_t p);

}  // namespace gcodelab
