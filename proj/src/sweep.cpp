// SPDX-License-Identifier: Apache-2.0
#include "gcodelab/sweep.hpp"

#include <exception>
#include <map>
#include <numeric>
#include <random>
#include <set>
#include <stdexcept>

#include "gcodelab/errors.hpp"
#include "gcodelab/schur.hpp"
#include "gcodelab/theorems.hpp"

namespace gcodelab {

unsigned default_threads() { return std::max(1u, std::thread::hardware_concurrency()); }

void SweepReport::merge(SweepReport other) {
    checked += other.checked;
    for (auto& f : other.failures) failures.push_back(std::move(f));
}

std::uint64_t source_size(const Group& g, FieldSpec spec, const ElementSource& src) {
    if (!src.exhaustive) return src.samples;
    const std::uint64_t count = codeword_count(spec.p(), g.order());
    if (count > kExhaustiveLimit)
        throw std::invalid_argument("exhaustive sweep over " + std::to_string(spec.p()) + "^" + std::to_string(g.order()) +
                                    " elements is infeasible; sample instead");
    return count;
}

std::vector<AlgElem> source_elements(const GroupPtr& g, FieldSpec spec, const ElementSource& src, std::uint64_t chunk,
                                     std::uint64_t begin, std::uint64_t end) {
    const std::size_t n = g->order();
    std::vector<AlgElem> out;
    out.reserve(end - begin);
    if (src.exhaustive) {
        for (std::uint64_t i = begin; i < end; ++i) {
            Vector coeffs(n);
            std::uint64_t x = i;
            for (std::size_t j = 0; j < n; ++j) {
                coeffs[j] = static_cast<Residue>(x % spec.p());
                x /= spec.p();
            }
            out.emplace_back(g, spec, std::move(coeffs));
        }
        return out;
    }
    std::seed_seq seq{static_cast<std::uint32_t>(src.seed), static_cast<std::uint32_t>(src.seed >> 32),
                      static_cast<std::uint32_t>(chunk), static_cast<std::uint32_t>(chunk >> 32)};
    std::mt19937_64 rng(seq);
    for (std::uint64_t i = begin; i < end; ++i) {
        Vector coeffs(n);
        for (auto& c : coeffs) c = static_cast<Residue>(rng() % spec.p());
        out.emplace_back(g, spec, std::move(coeffs));
    }
    return out;
}

namespace {

RowBasis principal_ideal_basis(const AlgElem& f) {
    const Group& g = *f.group();
    const std::size_t n = g.order();
    Matrix rows(f.spec(), n, n);
    for (Elem t = 0; t < n; ++t)
        for (Elem y = 0; y < n; ++y) rows(t, g.mul(y, t)) = f[y];
    return rref(rows);
}

Vector flatten(const RowBasis& b) {
    Vector key;
    key.reserve(b.dim() * b.ambient() + 1);
    key.push_back(static_cast<Residue>(b.dim()));
    for (std::size_t i = 0; i < b.dim(); ++i) key.insert(key.end(), b.row(i).begin(), b.row(i).end());
    return key;
}

template <typename Body>
void guarded(SweepReport& report, const std::string& check, const std::string& subject, Body&& body) {
    try {
        body();
    } catch (const InvariantViolation& e) {
        report.failures.push_back({check, subject, e.what()});
    } catch (const std::exception& e) {
        report.failures.push_back({check, subject, std::string("error: ") + e.what()});
    }
}

void fail_unless(SweepReport& report, bool ok, const std::string& check, const std::string& subject,
                 const std::string& message) {
    if (!ok) report.failures.push_back({check, subject, message});
}

template <typename PerIdeal>
SweepReport over_ideals(const std::vector<CyclicIdeal>& ideals, const SweepOptions& opt, PerIdeal&& per_ideal) {
    auto parts = run_chunks(ideals.size(), opt.threads, [&](std::uint64_t, std::uint64_t begin, std::uint64_t end) {
        SweepReport r;
        for (std::uint64_t i = begin; i < end; ++i) {
            ++r.checked;
            per_ideal(ideals[i], r);
        }
        return r;
    });
    SweepReport total;
    for (auto& p : parts) total.merge(std::move(p));
    return total;
}

}  // namespace

std::vector<CyclicIdeal> cyclic_ideals(const GroupPtr& g, FieldSpec spec, const ElementSource& src, unsigned threads) {
    const std::uint64_t total = source_size(*g, spec, src);
    auto parts = run_chunks(total, threads, [&](std::uint64_t chunk, std::uint64_t begin, std::uint64_t end) {
        std::vector<std::pair<Vector, CyclicIdeal>> found;
        std::set<Vector> seen;
        for (auto& f : source_elements(g, spec, src, chunk, begin, end)) {
            if (f.is_zero()) continue;
            RowBasis basis = principal_ideal_basis(f);
            Vector key = flatten(basis);
            if (!seen.insert(key).second) continue;
            found.push_back({std::move(key), CyclicIdeal{std::move(f), std::move(basis)}});
        }
        return found;
    });
    std::vector<CyclicIdeal> out;
    std::set<Vector> seen;
    for (auto& part : parts)
        for (auto& [key, ideal] : part)
            if (seen.insert(key).second) out.push_back(std::move(ideal));
    return out;
}

SweepReport verify_uncertainty(const GroupPtr& g, FieldSpec spec, const SweepOptions& opt) {
    const std::uint64_t total = source_size(*g, spec, opt.source);
    std::vector<Elem> shuffled(g->order());
    std::iota(shuffled.begin(), shuffled.end(), 0);
    std::mt19937_64 rng(opt.source.seed);
    std::shuffle(shuffled.begin(), shuffled.end(), rng);

    auto parts = run_chunks(total, opt.threads, [&](std::uint64_t chunk, std::uint64_t begin, std::uint64_t end) {
        SweepReport r;
        for (const auto& f : source_elements(g, spec, opt.source, chunk, begin, end)) {
            if (f.is_zero()) continue;
            ++r.checked;
            guarded(r, "up", f.to_string(), [&] {
                uncertainty_check(f);
                uncertainty_check(f, shuffled);
            });
        }
        return r;
    });
    SweepReport report;
    for (auto& p : parts) report.merge(std::move(p));
    return report;
}

SweepReport verify_bound(const std::vector<CyclicIdeal>& ideals, const SweepOptions& opt) {
    return over_ideals(ideals, opt, [&](const CyclicIdeal& ideal, SweepReport& r) {
        const std::string subject = ideal.generator.to_string();
        guarded(r, "bound", subject, [&] {
            const GCode code(ideal.generator.group(), ideal.basis);
            const ParamReport pr = params(code, opt.guard);
            const Group& g = *code.group();
            fail_unless(r, pr.bound_ok, "bound", subject, "d*k < |G|");
            fail_unless(r, dual(dual(code)) == code, "bound", subject, "dual(dual(C)) != C");
            if (code.spec().p() == 2 && is_p_group(g, 2) && code.dim() < g.order())
                fail_unless(r, *pr.min_distance % 2 == 0, "bound", subject, "proper binary ideal of a 2-group has odd distance");
        });
    });
}

SweepReport verify_equality(const std::vector<CyclicIdeal>& ideals, const SweepOptions& opt) {
    return over_ideals(ideals, opt, [&](const CyclicIdeal& ideal, SweepReport& r) {
        const std::string subject = ideal.generator.to_string();
        guarded(r, "equality", subject, [&] {
            const GCode code(ideal.generator.group(), ideal.basis);
            const std::size_t d = min_distance(code, opt.guard);
            const bool equality = d * code.dim() == code.length();
            const auto witness = equality_analysis(code, opt.guard);
            fail_unless(r, witness.has_value() == equality, "equality", subject, "witness present iff d*k = |G| fails");
            if (!witness) return;
            fail_unless(r, witness->subgroup.order() == d, "equality", subject, "|H| != d(C)");
            fail_unless(r, witness->idempotent.has_value() == (d % code.spec().p() != 0), "equality", subject,
                        "idempotent present iff p does not divide d fails");
            const ParamReport induced = params(trivial_induced(witness->subgroup, code.spec()), opt.guard);
            fail_unless(r, induced.equality, "equality", subject, "K_H^G of the witness subgroup misses equality");
        });
    });
}

SweepReport verify_schur(const std::vector<CyclicIdeal>& ideals, const SweepOptions& opt) {
    SweepReport report = over_ideals(ideals, opt, [&](const CyclicIdeal& ideal, SweepReport& r) {
        const std::string subject = ideal.generator.to_string();
        guarded(r, "schur", subject, [&] {
            const GCode code(ideal.generator.group(), ideal.basis);
            const std::size_t n = code.length();
            const GCode square = schur_product(code, code);
            if (square == code) {
                const Subgroup h = fixed_point_structure(code, opt.guard);
                fail_unless(r, trivial_induced(h, code.spec()) == code, "schur", subject, "C*C = C but C != K_H^G");
                fail_unless(r, params(code, opt.guard).equality, "schur", subject, "C*C = C but d*k != |G|");
            }
            if (code.spec().p() == 2) {
                const SchurChainReport chain = schur_power_chain(code, 2 * n + 2);
                fail_unless(r, chain.converged && chain.cycle_length == 1 && chain.stabilizer_subgroup.has_value(), "schur",
                            subject, "binary Schur chain did not stabilize to some K_H^G");
                if (chain.stabilizer_subgroup) {
                    const GCode induced = trivial_induced(*chain.stabilizer_subgroup, code.spec());
                    fail_unless(r, *chain.stabilized_code == induced && is_subcode(code, induced), "schur", subject,
                                "binary Schur chain limit is not K_H^G containing C");
                }
                fail_unless(r, binary_chain_monotone_check(code).ok, "schur", subject, "C^(2^i) not inside C^(2^(i+1))");
            }
            const SchurSquareVerdict v = schur_square_theorem_check(code);
            fail_unless(r, v.ok(), "schur", subject, "dimension clauses on C*C violated");
        });
    });

    // Products of distinct ideals, for small groups.
    if (!ideals.empty() && ideals.front().basis.ambient() <= 8 && ideals.size() <= 256) {
        SweepReport pairs = over_ideals(ideals, opt, [&](const CyclicIdeal& a, SweepReport& r) {
            const GCode left(a.generator.group(), a.basis);
            for (const auto& b : ideals) {
                guarded(r, "schur-pair", a.generator.to_string() + " * " + b.generator.to_string(), [&] {
                    const GCode right(b.generator.group(), b.basis);
                    schur_product(left, right);
                });
            }
        });
        pairs.checked = 0;
        report.merge(std::move(pairs));
    }
    return report;
}

SweepReport verify_bound(const GroupPtr& g, FieldSpec spec, const SweepOptions& opt) {
    return verify_bound(cyclic_ideals(g, spec, opt.source, opt.threads), opt);
}

SweepReport verify_equality(const GroupPtr& g, FieldSpec spec, const SweepOptions& opt) {
    return verify_equality(cyclic_ideals(g, spec, opt.source, opt.threads), opt);
}

SweepReport verify_schur(const GroupPtr& g, FieldSpec spec, const SweepOptions& opt) {
    return verify_schur(cyclic_ideals(g, spec, opt.source, opt.threads), opt);
}

SweepReport verify_all(const GroupPtr& g, FieldSpec spec, const SweepOptions& opt) {
    SweepReport report = verify_uncertainty(g, spec, opt);
    const auto ideals = cyclic_ideals(g, spec, opt.source, opt.threads);
    report.merge(verify_bound(ideals, opt));
    report.merge(verify_equality(ideals, opt));
    report.merge(verify_schur(ideals, opt));
    return report;
}

std::vector<SweepRow> sweep_report(const GroupPtr& g, FieldSpec spec, const SweepOptions& opt) {
    const auto ideals = cyclic_ideals(g, spec, opt.source, opt.threads);
    auto parts = run_chunks(ideals.size(), opt.threads, [&](std::uint64_t, std::uint64_t begin, std::uint64_t end) {
        std::vector<SweepRow> rows;
        for (std::uint64_t i = begin; i < end; ++i) {
            const GCode code(g, ideals[i].basis);
            const ParamReport pr = params(code, opt.guard);
            SweepRow row;
            row.generator = ideals[i].generator.to_string();
            row.k = pr.dimension;
            row.d = *pr.min_distance;
            row.product = *pr.product;
            row.ratio = static_cast<double>(row.product) / static_cast<double>(code.length());
            row.self_orthogonal = is_self_orthogonal(code);
            row.square_dim = schur_product(code, code).dim();
            rows.push_back(std::move(row));
        }
        return rows;
    });
    std::vector<SweepRow> rows;
    for (auto& p : parts)
        for (auto& r : p) rows.push_back(std::move(r));
    std::stable_sort(rows.begin(), rows.end(), [](const SweepRow& a, const SweepRow& b) {
        if (a.product != b.product) return a.product > b.product;
        return a.k > b.k;
    });
    return rows;
}

}  // namespace gcodelab
