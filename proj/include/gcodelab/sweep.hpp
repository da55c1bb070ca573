// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <algorithm>
#include <cstdint>
#include <string>
#include <thread>
#include <atomic>
#include <vector>

#include "gcodelab/gcode.hpp"

namespace gcodelab {

/// Work is split into fixed-size chunks independent of the thread count; results come back
/// in chunk order, so anything reduced from them is identical for every thread count.
inline constexpr std::uint64_t kSweepChunk = 1024;

template <typename Fn>
auto run_chunks(std::uint64_t total, unsigned threads, Fn&& fn) {
    using Result = decltype(fn(std::uint64_t{}, std::uint64_t{}, std::uint64_t{}));
    const std::uint64_t chunks = (total + kSweepChunk - 1) / kSweepChunk;
    std::vector<Result> results(chunks);
    std::atomic<std::uint64_t> next{0};
    auto worker = [&] {
        for (std::uint64_t c = next.fetch_add(1); c < chunks; c = next.fetch_add(1)) {
            const std::uint64_t begin = c * kSweepChunk;
            results[c] = fn(c, begin, std::min(total, begin + kSweepChunk));
        }
    };
    threads = std::max(1u, threads);
    std::vector<std::thread> pool;
    for (unsigned t = 1; t < threads && t < chunks; ++t) pool.emplace_back(worker);
    worker();
    for (auto& t : pool) t.join();
    return results;
}

unsigned default_threads();

/// Which elements f of F_p G a sweep visits: all of them, or `samples` draws from a
/// generator seeded per chunk with (seed, chunk).
struct ElementSource {
    bool exhaustive = true;
    std::uint64_t samples = 0;
    std::uint64_t seed = 1;
};

/// Largest p^|G| accepted for exhaustive sweeps.
inline constexpr std::uint64_t kExhaustiveLimit = std::uint64_t{1} << 24;

/// Number of elements visited; throws std::invalid_argument when an exhaustive sweep is infeasible.
std::uint64_t source_size(const Group& g, FieldSpec spec, const ElementSource& src);

/// Elements [begin, end) of the source; exhaustive index i has coefficient digits of i in base p,
/// digit 0 (least significant) belonging to the identity.
std::vector<AlgElem> source_elements(const GroupPtr& g, FieldSpec spec, const ElementSource& src, std::uint64_t chunk,
                                     std::uint64_t begin, std::uint64_t end);

/// A distinct nonzero principal right ideal and the first element that generated it.
struct CyclicIdeal {
    AlgElem generator;
    RowBasis basis;
};

/// Distinct nonzero ideals fKG, in order of first appearance.
std::vector<CyclicIdeal> cyclic_ideals(const GroupPtr& g, FieldSpec spec, const ElementSource& src, unsigned threads);

struct SweepFailure {
    std::string check;
    std::string subject;  ///< element text of the generator
    std::string message;
};

struct SweepReport {
    std::uint64_t checked = 0;
    std::vector<SweepFailure> failures;
    void merge(SweepReport other);
    bool ok() const { return failures.empty(); }
};

struct SweepOptions {
    ElementSource source;
    unsigned threads = 1;
    std::uint64_t guard = kDefaultGuard;
};

/// wt(f) rank(T_f) >= |G| and rank(T_f) >= greedy S-rank (natural and one shuffled order), per element.
SweepReport verify_uncertainty(const GroupPtr& g, FieldSpec spec, const SweepOptions& opt);
/// d k >= |G|, the d + k window, dual(dual C) = C, and even distance for proper binary ideals of 2-groups.
SweepReport verify_bound(const GroupPtr& g, FieldSpec spec, const SweepOptions& opt);
/// Witness iff d k = |G|; K_H^G for p-subgroups; idempotent iff p does not divide d.
SweepReport verify_equality(const GroupPtr& g, FieldSpec spec, const SweepOptions& opt);
/// Schur products are ideals, Schur-idempotent codes are K_H^G, binary chains stabilize, and the
/// self-orthogonality clauses on dim C*C.
SweepReport verify_schur(const GroupPtr& g, FieldSpec spec, const SweepOptions& opt);
SweepReport verify_all(const GroupPtr& g, FieldSpec spec, const SweepOptions& opt);

/// Pre-enumerated variants used by verify_all to share one ideal enumeration.
SweepReport verify_bound(const std::vector<CyclicIdeal>& ideals, const SweepOptions& opt);
SweepReport verify_equality(const std::vector<CyclicIdeal>& ideals, const SweepOptions& opt);
SweepReport verify_schur(const std::vector<CyclicIdeal>& ideals, const SweepOptions& opt);

struct SweepRow {
    std::string generator;
    std::size_t k = 0;
    std::size_t d = 0;
    std::size_t product = 0;
    double ratio = 0;  ///< d k / |G|
    bool self_orthogonal = false;
    std::size_t square_dim = 0;
};

/// One row per distinct nonzero cyclic ideal, sorted by d k / |G| descending, then k
/// descending, then by first generator.
std::vector<SweepRow> sweep_report(const GroupPtr& g, FieldSpec spec, const SweepOptions& opt);

}  // namespace gcodelab
