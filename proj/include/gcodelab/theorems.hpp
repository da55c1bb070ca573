// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "gcodelab/gcode.hpp"

namespace gcodelab {

struct SRankResult {
    std::size_t t = 0;
    std::vector<Elem> sequence;
};

/// Greedy right S-rank: walks `order` and keeps g whenever S g leaves the union of the
/// translates kept so far. The sequence covers G and has length >= ceil(|G| / |S|).
SRankResult s_rank_greedy(const Group& g, const std::vector<Elem>& s, const std::vector<Elem>& order);
/// Greedy over the natural index order.
SRankResult s_rank_greedy(const Group& g, const std::vector<Elem>& s);

struct UncertaintyVerdict {
    std::size_t weight = 0;
    std::size_t rank = 0;    ///< rank of T_f = dim fKG
    std::size_t s_rank = 0;  ///< greedy S-rank of supp(f)
};

/// Checks rank(T_f) >= greedy S-rank and wt(f) rank(T_f) >= |G|; throws InvariantViolation
/// if either fails and std::invalid_argument for f = 0. `order` defaults to index order.
UncertaintyVerdict uncertainty_check(const AlgElem& f, const std::vector<Elem>& order = {});

/// Certificate that d(C) dim C = |G|.
struct EqualityWitness {
    Subgroup subgroup;            ///< H = supp(c), |H| = d(C)
    AlgElem generator;            ///< c in KH with C = cKG and dim cKH = 1
    std::optional<AlgElem> idempotent;  ///< e = e^2 with eKG = C, present iff p does not divide d(C)
};

/// Returns a witness iff d(C) dim C = |G|. Any failure of the structure the equality case
/// guarantees throws InvariantViolation.
std::optional<EqualityWitness> equality_analysis(const GCode& c, std::uint64_t guard = kDefaultGuard);

/// e = mu^-1 c where c c = mu c in KH; none when p divides |H|.
std::optional<AlgElem> idempotent_generator(const Subgroup& h, const AlgElem& c);

enum class CoverMethod { semisimple, p_group, p_nilpotent };
std::string to_string(CoverMethod m);

struct ProjectiveCoverResult {
    GCode code;
    CoverMethod method;
};

/// Projective cover of the trivial module when p does not divide |G|, G is a p-group, or G
/// has a normal p-complement. Throws Unsupported otherwise.
ProjectiveCoverResult projective_cover_trivial(const GroupPtr& group, FieldSpec spec);

struct SchurSquareVerdict {
    std::size_t square_dim = 0;
    bool self_orthogonal = false;
    bool p_group = false;
    // Clauses that applied to this code, and whether each held.
    std::optional<bool> dim_at_least_p_part;    ///< not self-orthogonal: dim C*C >= |G|_p
    std::optional<bool> square_is_full;         ///< not self-orthogonal over a p-group: C*C = KG
    std::optional<bool> dim_below_order;        ///< self-orthogonal: dim C*C < |G|
    std::optional<bool> small_implies_orthogonal;  ///< p-group and binom(k+1,2) < |G|: self-orthogonal
    bool ok() const;
    std::vector<std::string> fired() const;
};

/// Requires C nonzero.
SchurSquareVerdict schur_square_theorem_check(const GCode& c);

struct SolvVerdict {
    bool applicable = false;  ///< C is not self-orthogonal
    bool square_is_cover = false;
    bool contained_in_cover = false;
    bool holds = true;  ///< biconditional, or vacuous when not applicable
    CoverMethod method = CoverMethod::p_group;
};

/// Binary codes only: C*C = P_0 iff C <= P_0, for C not self-orthogonal and P_0 = K_H^G.
SolvVerdict solv_check(const GCode& c);

}  // namespace gcodelab
