// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <optional>

#include "gcodelab/gcode.hpp"

namespace gcodelab {

/// Binary Reed-Muller code RM(r, m).
struct RMSpec {
    std::size_t r = 0;
    std::size_t m = 0;
};

inline constexpr std::size_t kMaxReedMullerVariables = 6;

/// RM(r, m) as an ideal of F_2 E, E = elemabelian:2,m. Coordinate x is the evaluation at the
/// point whose binary digits (most significant first) are the coordinates of group element x.
/// `group` may be passed to share an existing elemabelian:2,m instance.
GCode reed_muller(RMSpec spec, GroupPtr group = nullptr);

/// dim RM(r, m) = sum_{i <= r} binom(m, i).
std::size_t reed_muller_dimension(RMSpec spec);

struct RMSquareVerdict {
    std::size_t square_dim = 0;
    std::size_t target_dim = 0;
    bool square_is_rm_2r = false;                   ///< C * C == RM(2r, m)
    std::optional<bool> self_orthogonal;            ///< checked when 2r + 1 <= m
    std::optional<bool> strictly_inside_augmentation;  ///< checked when 2r + 1 < m
    bool ok = false;
};

/// Requires 2r <= m.
RMSquareVerdict rm_schur_square_check(RMSpec spec);

struct GolaySearchResult {
    std::optional<GCode> code;
    std::optional<AlgElem> generator;
    std::uint64_t trial_index = 0;  ///< index of the successful trial
    std::uint64_t trials_run = 0;   ///< trials examined before stopping (budget when nothing found)
    std::uint64_t dimension_hits = 0;  ///< trials with dim fKG = 12 among the examined ones
};

/// Samples f in F_2 S_4 and returns the first f (by trial index) whose ideal fKG is a
/// [24, 12, 8] code, verified self-dual. Trials are grouped in blocks of kGolayBlock, each
/// drawn from std::mt19937_64 seeded with (seed, block), so the outcome does not depend on
/// `threads`.
GolaySearchResult golay_search(std::uint64_t budget, std::uint64_t seed, unsigned threads = 1);

inline constexpr std::uint64_t kGolayBlock = 4096;

}  // namespace gcodelab
