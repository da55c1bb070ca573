// SPDX-License-Identifier: Apache-2.0
#include "gcodelab/theorems.hpp"

#include <numeric>
#include <stdexcept>

#include "gcodelab/errors.hpp"
#include "gcodelab/schur.hpp"

namespace gcodelab {

SRankResult s_rank_greedy(const Group& g, const std::vector<Elem>& s, const std::vector<Elem>& order) {
    const std::size_t n = g.order();
    if (s.empty()) throw std::invalid_argument("S-rank of the empty set");
    if (order.size() != n) throw std::invalid_argument("visit order must list every group element once");
    std::vector<bool> listed(n, false);
    for (Elem x : order) {
        if (x >= n || listed[x]) throw std::invalid_argument("visit order must list every group element once");
        listed[x] = true;
    }

    std::vector<bool> covered(n, false);
    std::size_t covered_count = 0;
    SRankResult out;
    for (Elem x : order) {
        bool escapes = false;
        for (Elem y : s)
            if (!covered[g.mul(y, x)]) escapes = true;
        if (!escapes) continue;
        out.sequence.push_back(x);
        for (Elem y : s) {
            const Elem z = g.mul(y, x);
            if (!covered[z]) {
                covered[z] = true;
                ++covered_count;
            }
        }
    }
    out.t = out.sequence.size();
    ensure(covered_count == n, "greedy S-rank translates do not cover G");
    ensure(out.t * s.size() >= n, "greedy S-rank below |G|/|S|");
    return out;
}

SRankResult s_rank_greedy(const Group& g, const std::vector<Elem>& s) {
    std::vector<Elem> order(g.order());
    std::iota(order.begin(), order.end(), 0);
    return s_rank_greedy(g, s, order);
}

UncertaintyVerdict uncertainty_check(const AlgElem& f, const std::vector<Elem>& order) {
    if (f.is_zero()) throw std::invalid_argument("uncertainty check needs a nonzero element");
    const Group& g = *f.group();
    UncertaintyVerdict v;
    const auto supp = support(f);
    v.weight = supp.size();
    v.rank = rank(multiplication_matrix(f));
    v.s_rank = (order.empty() ? s_rank_greedy(g, supp) : s_rank_greedy(g, supp, order)).t;
    ensure(v.rank >= v.s_rank, "rank(T_f) below the S-rank of supp(f)");
    ensure(v.weight * v.rank >= g.order(), "|supp f| rank(T_f) < |G|");
    return v;
}

std::optional<AlgElem> idempotent_generator(const Subgroup& h, const AlgElem& c) {
    const FieldSpec& f = c.spec();
    if (h.order() % f.p() == 0) return std::nullopt;
    if (c.is_zero()) throw std::invalid_argument("idempotent generator of the zero element");
    const AlgElem square = convolve(c, c);
    const Elem pivot = support(c).front();
    const Residue mu = f.mul(square[pivot], f.inv(c[pivot]));
    ensure(mu != 0, "c c = 0 although KH is semisimple");
    ensure(square == scale(c, mu), "c c is not a multiple of c");
    AlgElem e = scale(c, f.inv(mu));
    ensure(convolve(e, e) == e, "mu^-1 c is not idempotent");
    return e;
}

std::optional<EqualityWitness> equality_analysis(const GCode& c, std::uint64_t guard) {
    if (c.is_zero()) throw std::invalid_argument("equality analysis of the zero code");
    const GroupPtr& group = c.group();
    const Group& g = *group;
    const FieldSpec& f = c.spec();
    const AlgElem lightest = minimum_weight_codeword(c, guard);
    const std::size_t d = weight(lightest);
    if (d * c.dim() != g.order()) return std::nullopt;

    const AlgElem gen = right_translate(lightest, g.inv(support(lightest).front()));
    std::vector<Elem> h_members = support(gen);
    ensure(is_subgroup(g, h_members), "support of a minimum weight codeword is not a subgroup");
    Subgroup h(group, h_members);
    ensure(ideal_from_generators(group, f, {gen}) == c, "C is not generated by a minimum weight codeword");

    // dim cKH = 1: the columns c h, restricted to the coordinates of H, have rank 1.
    Matrix restricted(f, h.order(), h.order());
    for (std::size_t col = 0; col < h.order(); ++col) {
        const AlgElem moved = right_translate(gen, h_members[col]);
        for (std::size_t row = 0; row < h.order(); ++row) restricted(row, col) = moved[h_members[row]];
    }
    ensure(rank(restricted) == 1, "dim cKH != 1");

    if (is_p_power(h.order(), f.p()))
        ensure(trivial_induced(h, f) == c, "equality code over a p-subgroup is not K_H^G");

    std::optional<AlgElem> e = idempotent_generator(h, gen);
    if (e) ensure(ideal_from_generators(group, f, {*e}) == c, "eKG differs from C");
    ensure(e.has_value() == (d % f.p() != 0), "idempotent generator exists iff p does not divide d(C)");
    return EqualityWitness{std::move(h), gen, std::move(e)};
}

std::string to_string(CoverMethod m) {
    switch (m) {
        case CoverMethod::semisimple: return "semisimple";
        case CoverMethod::p_group: return "p-group";
        case CoverMethod::p_nilpotent: return "p-nilpotent";
    }
    return "unknown";
}

ProjectiveCoverResult projective_cover_trivial(const GroupPtr& group, FieldSpec spec) {
    const std::uint32_t p = spec.p();
    std::optional<ProjectiveCoverResult> result;
    if (group->order() % p != 0) {
        result = ProjectiveCoverResult{trivial_induced(Subgroup::whole(group), spec), CoverMethod::semisimple};
    } else if (is_p_group(*group, p)) {
        result = ProjectiveCoverResult{GCode::full(group, spec), CoverMethod::p_group};
    } else if (auto complement = normal_p_complement(group, p)) {
        result = ProjectiveCoverResult{trivial_induced(*complement, spec), CoverMethod::p_nilpotent};
    } else {
        throw Unsupported("projective cover of the trivial module over F_" + std::to_string(p) + " for " + group->name() +
                          " is not computable here (no normal p-complement)");
    }
    bool augmented = false;
    for (std::size_t i = 0; i < result->code.dim(); ++i)
        augmented = augmented || !augmentation(result->code.basis_element(i)).is_zero();
    ensure(augmented, "projective cover lies in the augmentation ideal");
    return std::move(*result);
}

bool SchurSquareVerdict::ok() const {
    for (const auto& clause : {dim_at_least_p_part, square_is_full, dim_below_order, small_implies_orthogonal})
        if (clause && !*clause) return false;
    return true;
}

std::vector<std::string> SchurSquareVerdict::fired() const {
    std::vector<std::string> out;
    if (dim_at_least_p_part) out.emplace_back("i");
    if (square_is_full) out.emplace_back("ii");
    if (dim_below_order) out.emplace_back("iii");
    if (small_implies_orthogonal) out.emplace_back("iv");
    return out;
}

SchurSquareVerdict schur_square_theorem_check(const GCode& c) {
    if (c.is_zero()) throw std::invalid_argument("Schur square check of the zero code");
    const Group& g = *c.group();
    const std::uint32_t p = c.spec().p();
    const std::size_t n = g.order();
    const GCode square = schur_product(c, c);

    SchurSquareVerdict v;
    v.square_dim = square.dim();
    v.self_orthogonal = is_self_orthogonal(c);
    ensure(v.self_orthogonal == is_subcode(square, GCode::augmentation_ideal(c.group(), c.spec())),
           "self-orthogonality disagrees with C*C <= ker(augmentation)");
    v.p_group = is_p_group(g, p);

    if (!v.self_orthogonal) {
        v.dim_at_least_p_part = v.square_dim >= p_part(g, p);
        if (v.p_group) v.square_is_full = v.square_dim == n;
    } else {
        v.dim_below_order = v.square_dim < n;
    }
    // dim C < (sqrt(8n + 1) - 1) / 2  <=>  k (k + 1) < 2n
    const std::size_t k = c.dim();
    if (v.p_group && k * (k + 1) < 2 * n) v.small_implies_orthogonal = v.self_orthogonal;
    return v;
}

SolvVerdict solv_check(const GCode& c) {
    if (c.spec().p() != 2) throw std::invalid_argument("the projective-cover criterion is checked over F_2 only");
    const ProjectiveCoverResult cover = projective_cover_trivial(c.group(), c.spec());
    SolvVerdict v;
    v.method = cover.method;
    v.applicable = !is_self_orthogonal(c);
    v.square_is_cover = schur_product(c, c) == cover.code;
    v.contained_in_cover = is_subcode(c, cover.code);
    v.holds = !v.applicable || v.square_is_cover == v.contained_in_cover;
    return v;
}

}  // namespace gcodelab
