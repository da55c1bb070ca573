// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "gcodelab/gcode.hpp"

namespace gcodelab {

/// Span of the componentwise products of basis rows.
///
/// Checks that the result is an ideal and that
/// dim(a*b) <= min{n, k k' - binom(dim(a cap b), 2)}; a violation throws InvariantViolation.
GCode schur_product(const GCode& a, const GCode& b);

/// C^(1) = C, C^(t+1) = C^(t) * C, iterated until a code repeats.
struct SchurChainReport {
    std::vector<std::size_t> dims;          ///< dim C^(t) for t = 1, 2, ...
    std::size_t regularity = 0;             ///< first t from which dims stay constant
    bool converged = false;                 ///< a repeated code was found within max_t
    std::size_t cycle_start = 0;            ///< first t of the eventual cycle of codes
    std::size_t cycle_length = 0;           ///< 1 when the code itself stabilizes
    std::optional<Subgroup> stabilizer_subgroup;  ///< H with C^(t) = K_H^G, when the limit is Schur-idempotent
    std::optional<GCode> stabilized_code;   ///< C^(cycle_start)
    std::vector<GCode> codes;               ///< C^(1), ..., the last computed power
};

/// Throws std::invalid_argument for the zero code. When max_t is exhausted the report is
/// returned with converged = false.
SchurChainReport schur_power_chain(const GCode& c, std::size_t max_t);

/// For C with C * C = C, recovers H with C = K_H^G following the minimum-weight-support
/// construction. Throws std::invalid_argument when C is zero or not Schur-idempotent.
Subgroup fixed_point_structure(const GCode& c, std::uint64_t guard = kDefaultGuard);

struct MonotoneCheck {
    bool ok = true;
    std::size_t steps = 0;  ///< number of inclusions C^(2^i) <= C^(2^(i+1)) verified
    bool contained_in_square = true;
};

/// Binary only: C <= C * C and C^(2^i) <= C^(2^(i+1)) until the chain stops growing.
MonotoneCheck binary_chain_monotone_check(const GCode& c);

}  // namespace gcodelab
