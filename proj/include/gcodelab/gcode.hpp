// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "gcodelab/galg.hpp"
#include "gcodelab/group.hpp"
#include "gcodelab/linalg.hpp"

namespace gcodelab {

/// Default cap on p^k for exhaustive codeword enumeration.
inline constexpr std::uint64_t kDefaultGuard = std::uint64_t{1} << 26;

/// A right ideal of F_p G, stored as the canonical RREF basis of its coefficient vectors.
class GCode {
public:
    /// Throws std::invalid_argument unless the row space is closed under right translation.
    GCode(GroupPtr group, RowBasis basis);

    static GCode zero(GroupPtr group, FieldSpec spec);
    static GCode full(GroupPtr group, FieldSpec spec);
    /// ker of the augmentation map.
    static GCode augmentation_ideal(GroupPtr group, FieldSpec spec);

    const GroupPtr& group() const noexcept { return group_; }
    const FieldSpec& spec() const noexcept { return basis_.spec(); }
    const RowBasis& basis() const noexcept { return basis_; }
    std::size_t dim() const noexcept { return basis_.dim(); }
    std::size_t length() const noexcept { return basis_.ambient(); }
    bool is_zero() const noexcept { return basis_.dim() == 0; }

    AlgElem basis_element(std::size_t i) const;
    bool contains(const AlgElem& f) const;

    friend bool operator==(const GCode& a, const GCode& b) { return a.basis_ == b.basis_; }

private:
    GroupPtr group_;
    RowBasis basis_;
};

struct ParamReport {
    std::size_t length = 0;
    std::size_t dimension = 0;
    std::optional<std::size_t> min_distance;  ///< absent for the zero code
    std::optional<std::size_t> product;       ///< d * k
    bool bound_ok = true;                     ///< d * k >= n
    bool equality = false;                    ///< d * k == n
};

/// Span of { f g : f in gens, g in G }.
GCode ideal_from_generators(const GroupPtr& group, FieldSpec spec, const std::vector<AlgElem>& gens);
/// Right ideal spanned by the right coset sums of h.
GCode trivial_induced(const Subgroup& h, FieldSpec spec);
/// True iff the row space is closed under right translation by every group element.
bool is_ideal(const Group& group, const RowBasis& v);

/// Minimum nonzero weight by enumerating all p^k - 1 nonzero messages.
/// Throws std::invalid_argument for the zero code and GuardExceeded when p^k > guard.
std::size_t min_distance(const GCode& c, std::uint64_t guard = kDefaultGuard);
/// The first codeword of minimum weight in message enumeration order (digit 0 fastest).
AlgElem minimum_weight_codeword(const GCode& c, std::uint64_t guard = kDefaultGuard);

GCode dual(const GCode& c);
bool is_self_orthogonal(const GCode& c);
bool is_subcode(const GCode& sub, const GCode& super);

/// Fills the report and enforces d k >= n and 2 sqrt(n) <= d + k <= n + 1 for nonzero codes.
ParamReport params(const GCode& c, std::uint64_t guard = kDefaultGuard);

/// Number of messages p^k, saturating at UINT64_MAX.
std::uint64_t codeword_count(std::uint32_t p, std::size_t k);

}  // namespace gcodelab
