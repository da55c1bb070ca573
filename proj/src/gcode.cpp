// SPDX-License-Identifier: Apache-2.0
#include "gcodelab/gcode.hpp"

#include <bit>
#include <limits>
#include <stdexcept>
#include <string>

#include "gcodelab/errors.hpp"

namespace gcodelab {

GCode::GCode(GroupPtr group, RowBasis basis) : group_(std::move(group)), basis_(std::move(basis)) {
    if (basis_.ambient() != group_->order())
        throw std::invalid_argument("code length " + std::to_string(basis_.ambient()) + " differs from group order " +
                                    std::to_string(group_->order()));
    if (!is_ideal(*group_, basis_)) throw std::invalid_argument("subspace is not a right ideal of the group algebra");
}

GCode GCode::zero(GroupPtr group, FieldSpec spec) {
    const std::size_t n = group->order();
    return GCode(std::move(group), RowBasis::zero(spec, n));
}

GCode GCode::full(GroupPtr group, FieldSpec spec) {
    const std::size_t n = group->order();
    return GCode(std::move(group), RowBasis::full(spec, n));
}

GCode GCode::augmentation_ideal(GroupPtr group, FieldSpec spec) {
    const std::size_t n = group->order();
    return GCode(std::move(group), kernel(Matrix::from_rows(spec, n, {Vector(n, 1)})));
}

AlgElem GCode::basis_element(std::size_t i) const {
    const auto row = basis_.row(i);
    return AlgElem(group_, spec(), Vector(row.begin(), row.end()));
}

bool GCode::contains(const AlgElem& f) const { return gcodelab::contains(basis_, f.coeffs()); }

GCode ideal_from_generators(const GroupPtr& group, FieldSpec spec, const std::vector<AlgElem>& gens) {
    const std::size_t n = group->order();
    Matrix rows(spec, 0, n);
    for (const auto& f : gens) {
        if (f.size() != n || f.spec() != spec) throw std::invalid_argument("generator does not belong to this group algebra");
        for (Elem g = 0; g < n; ++g) rows.append_row(right_translate(f, g).coeffs());
    }
    return GCode(group, rref(rows));
}

GCode trivial_induced(const Subgroup& h, FieldSpec spec) {
    const GroupPtr& g = h.parent();
    std::vector<Vector> rows;
    for (const auto& block : right_cosets(h)) rows.push_back(AlgElem::indicator(g, spec, block).coeffs());
    return GCode(g, span_of(spec, g->order(), rows));
}

bool is_ideal(const Group& group, const RowBasis& v) {
    if (v.ambient() != group.order()) return false;
    Vector translated(group.order());
    for (std::size_t i = 0; i < v.dim(); ++i) {
        const auto row = v.row(i);
        for (Elem g : group.generators()) {
            for (Elem y = 0; y < group.order(); ++y) translated[group.mul(y, g)] = row[y];
            if (!contains(v, translated)) return false;
        }
    }
    return true;
}

std::uint64_t codeword_count(std::uint32_t p, std::size_t k) {
    std::uint64_t count = 1;
    for (std::size_t i = 0; i < k; ++i) {
        if (count > std::numeric_limits<std::uint64_t>::max() / p) return std::numeric_limits<std::uint64_t>::max();
        count *= p;
    }
    return count;
}

namespace {

void require_enumerable(const GCode& c, std::uint64_t guard) {
    if (c.is_zero()) throw std::invalid_argument("the zero code has no minimum distance");
    const std::uint64_t count = codeword_count(c.spec().p(), c.dim());
    if (count > guard)
        throw GuardExceeded("enumerating " + std::to_string(c.spec().p()) + "^" + std::to_string(c.dim()) +
                            " codewords exceeds the guard of " + std::to_string(guard));
}

struct Minimum {
    std::size_t weight;
    Vector codeword;
};

// Odometer over messages, digit 0 fastest; each step adds one basis row.
Minimum enumerate_binary(const GCode& c) {
    const std::size_t k = c.dim(), n = c.length();
    std::vector<std::uint64_t> rows(k, 0);
    for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = 0; j < n; ++j)
            if (c.basis().row(i)[j]) rows[i] |= std::uint64_t{1} << j;

    std::vector<char> digits(k, 0);
    std::uint64_t word = 0, best_word = 0;
    std::size_t best = n + 1;
    for (;;) {
        std::size_t i = 0;
        while (i < k && digits[i]) {
            digits[i] = 0;
            word ^= rows[i];
            ++i;
        }
        if (i == k) break;
        digits[i] = 1;
        word ^= rows[i];
        const auto w = static_cast<std::size_t>(std::popcount(word));
        if (w < best) {
            best = w;
            best_word = word;
            if (best == 1) break;
        }
    }
    Vector out(n, 0);
    for (std::size_t j = 0; j < n; ++j) out[j] = (best_word >> j) & 1u;
    return {best, out};
}

Minimum enumerate_generic(const GCode& c) {
    const FieldSpec& f = c.spec();
    const std::size_t k = c.dim(), n = c.length();
    std::vector<Residue> digits(k, 0);
    Vector word(n, 0), best_word;
    std::size_t best = n + 1;
    for (;;) {
        std::size_t i = 0;
        // A digit wrapping from p-1 to 0 adds its row once more, which cancels it.
        while (i < k && digits[i] == f.p() - 1) {
            digits[i] = 0;
            const auto row = c.basis().row(i);
            for (std::size_t j = 0; j < n; ++j) word[j] = f.add(word[j], row[j]);
            ++i;
        }
        if (i == k) break;
        ++digits[i];
        const auto row = c.basis().row(i);
        std::size_t w = 0;
        for (std::size_t j = 0; j < n; ++j) {
            word[j] = f.add(word[j], row[j]);
            w += word[j] != 0;
        }
        if (w < best) {
            best = w;
            best_word = word;
            if (best == 1) break;
        }
    }
    return {best, best_word};
}

Minimum enumerate_minimum(const GCode& c, std::uint64_t guard) {
    require_enumerable(c, guard);
    if (c.spec().p() == 2 && c.length() <= 64) return enumerate_binary(c);
    return enumerate_generic(c);
}

}  // namespace

std::size_t min_distance(const GCode& c, std::uint64_t guard) { return enumerate_minimum(c, guard).weight; }

AlgElem minimum_weight_codeword(const GCode& c, std::uint64_t guard) {
    return AlgElem(c.group(), c.spec(), enumerate_minimum(c, guard).codeword);
}

GCode dual(const GCode& c) {
    RowBasis perp = orthogonal_complement(c.basis());
    ensure(is_ideal(*c.group(), perp), "dual of a G-code is not an ideal");
    return GCode(c.group(), std::move(perp));
}

bool is_self_orthogonal(const GCode& c) {
    const auto& b = c.basis();
    for (std::size_t i = 0; i < b.dim(); ++i)
        for (std::size_t j = i; j < b.dim(); ++j)
            if (dot(c.spec(), b.row(i), b.row(j)) != 0) return false;
    return true;
}

bool is_subcode(const GCode& sub, const GCode& super) { return is_subspace(sub.basis(), super.basis()); }

ParamReport params(const GCode& c, std::uint64_t guard) {
    ParamReport r;
    r.length = c.length();
    r.dimension = c.dim();
    if (c.is_zero()) return r;
    const std::size_t d = min_distance(c, guard);
    const std::size_t k = c.dim(), n = c.length();
    r.min_distance = d;
    r.product = d * k;
    r.bound_ok = d * k >= n;
    r.equality = d * k == n;
    ensure(r.bound_ok, "d*k < |G| for a nonzero G-code");
    ensure(4 * n <= (d + k) * (d + k) && d + k <= n + 1, "d + k outside [2 sqrt|G|, |G| + 1]");
    return r;
}

}  // namespace gcodelab
