// SPDX-License-Identifier: Apache-2.0
#include "gcodelab/schur.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

#include "gcodelab/errors.hpp"

namespace gcodelab {

GCode schur_product(const GCode& a, const GCode& b) {
    if (a.length() != b.length() || a.spec() != b.spec())
        throw std::invalid_argument("Schur product of codes over different group algebras");
    const FieldSpec& f = a.spec();
    const std::size_t n = a.length();
    Matrix products(f, 0, n);
    Vector row(n);
    for (std::size_t i = 0; i < a.dim(); ++i) {
        const auto x = a.basis().row(i);
        for (std::size_t j = 0; j < b.dim(); ++j) {
            const auto y = b.basis().row(j);
            for (std::size_t c = 0; c < n; ++c) row[c] = f.mul(x[c], y[c]);
            products.append_row(row);
        }
    }
    RowBasis span = rref(products);
    ensure(is_ideal(*a.group(), span), "Schur product of G-codes is not an ideal");

    const std::size_t shared = subspace_intersect(a.basis(), b.basis()).dim();
    const std::size_t bound = std::min(n, a.dim() * b.dim() - shared * (shared - 1) / 2);
    ensure(span.dim() <= bound, "Schur product dimension exceeds min{n, kk' - binom(dim C cap C', 2)}");
    return GCode(a.group(), std::move(span));
}

SchurChainReport schur_power_chain(const GCode& c, std::size_t max_t) {
    if (c.is_zero()) throw std::invalid_argument("Schur power chain of the zero code");
    if (max_t == 0) throw std::invalid_argument("max_t must be at least 1");

    SchurChainReport report;
    report.codes.push_back(c);
    report.dims.push_back(c.dim());
    for (;;) {
        GCode next = schur_product(report.codes.back(), c);
        const auto hit = std::find(report.codes.begin(), report.codes.end(), next);
        if (hit != report.codes.end()) {
            report.converged = true;
            report.cycle_start = static_cast<std::size_t>(hit - report.codes.begin()) + 1;
            report.cycle_length = report.codes.size() + 1 - report.cycle_start;
            break;
        }
        if (report.codes.size() == max_t) break;
        report.dims.push_back(next.dim());
        report.codes.push_back(std::move(next));
    }

    ensure(std::is_sorted(report.dims.begin(), report.dims.end()), "Schur power dimensions decreased");
    std::size_t first_constant = report.dims.size();
    while (first_constant > 1 && report.dims[first_constant - 2] == report.dims.back()) --first_constant;
    report.regularity = first_constant;
    if (!report.converged) return report;

    ensure(report.cycle_start >= report.regularity, "Schur power dimensions vary inside the eventual cycle");
    const GCode& limit = report.codes[report.cycle_start - 1];
    report.stabilized_code = limit;
    if (c.spec().p() == 2) ensure(report.cycle_length == 1, "binary Schur chain cycles instead of stabilizing");
    if (report.cycle_length != 1) return report;

    const bool idempotent = schur_product(limit, limit) == limit;
    if (c.spec().p() == 2) ensure(idempotent, "binary Schur chain limit is not Schur-idempotent");
    if (idempotent) {
        Subgroup h = fixed_point_structure(limit);
        if (c.spec().p() == 2) ensure(is_subcode(c, limit), "binary code is not contained in its Schur chain limit");
        report.stabilizer_subgroup = std::move(h);
    }
    return report;
}

Subgroup fixed_point_structure(const GCode& c, std::uint64_t guard) {
    if (c.is_zero()) throw std::invalid_argument("fixed point structure of the zero code");
    if (schur_product(c, c) != c) throw std::invalid_argument("code is not equal to its Schur square");

    const AlgElem witness = minimum_weight_codeword(c, guard);
    const Group& g = *c.group();
    const Elem h = support(witness).front();
    const AlgElem normalized = right_translate(witness, g.inv(h));
    ensure(normalized[0] != 0, "translated minimum weight codeword misses the identity");

    std::vector<Elem> members = support(normalized);
    ensure(is_subgroup(g, members), "support of a minimum weight codeword is not a subgroup");
    Subgroup sub(c.group(), std::move(members));
    ensure(trivial_induced(sub, c.spec()) == c, "Schur-idempotent code differs from K_H^G");
    return sub;
}

MonotoneCheck binary_chain_monotone_check(const GCode& c) {
    if (c.spec().p() != 2) throw std::invalid_argument("the Frobenius monotonicity check needs p = 2");
    MonotoneCheck result;
    GCode power = c;
    for (;;) {
        GCode doubled = schur_product(power, power);
        const bool included = is_subcode(power, doubled);
        if (result.steps == 0) result.contained_in_square = included;
        result.ok = result.ok && included;
        ++result.steps;
        if (!included || doubled == power) break;
        power = std::move(doubled);
    }
    return result;
}

}  // namespace gcodelab
