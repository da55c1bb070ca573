// SPDX-License-Identifier: Apache-2.0
#include "gcodelab/constructions.hpp"

#include <algorithm>
#include <array>
#include <atomic>
#include <bit>
#include <random>
#include <stdexcept>
#include <string>
#include <thread>

#include "gcodelab/errors.hpp"
#include "gcodelab/schur.hpp"

namespace gcodelab {

namespace {

void require_rm(RMSpec spec) {
    if (spec.m > kMaxReedMullerVariables) throw std::invalid_argument("Reed-Muller codes supported for m <= 6");
    if (spec.r > spec.m) throw std::invalid_argument("Reed-Muller order r must not exceed m");
}

std::size_t binomial(std::size_t n, std::size_t k) {
    std::size_t b = 1;
    for (std::size_t i = 1; i <= k; ++i) b = b * (n - k + i) / i;
    return b;
}

}  // namespace

std::size_t reed_muller_dimension(RMSpec spec) {
    require_rm(spec);
    std::size_t k = 0;
    for (std::size_t i = 0; i <= spec.r; ++i) k += binomial(spec.m, i);
    return k;
}

GCode reed_muller(RMSpec spec, GroupPtr group) {
    require_rm(spec);
    if (!group) group = make_elementary_abelian(2, spec.m);
    if (group->name() != "elemabelian:2," + std::to_string(spec.m))
        throw std::invalid_argument("Reed-Muller codes live in elemabelian:2," + std::to_string(spec.m));

    const FieldSpec f2(2);
    const std::size_t n = std::size_t{1} << spec.m;
    std::vector<Vector> rows;
    // Monomial x_S for each variable set S of size <= r. Variable i is digit i of the point,
    // digit 0 being the most significant bit of the element index.
    for (std::uint32_t vars = 0; vars < (1u << spec.m); ++vars) {
        if (static_cast<std::size_t>(std::popcount(vars)) > spec.r) continue;
        Vector eval(n, 0);
        for (std::size_t x = 0; x < n; ++x) {
            bool value = true;
            for (std::size_t i = 0; i < spec.m && value; ++i)
                if (vars >> i & 1u) value = (x >> (spec.m - 1 - i)) & 1u;
            eval[x] = value ? 1 : 0;
        }
        rows.push_back(std::move(eval));
    }
    GCode code(group, span_of(f2, n, rows));
    ensure(code.dim() == reed_muller_dimension(spec), "Reed-Muller dimension mismatch");
    return code;
}

RMSquareVerdict rm_schur_square_check(RMSpec spec) {
    require_rm(spec);
    if (2 * spec.r > spec.m) throw std::invalid_argument("RM square check needs 2r <= m");
    const GroupPtr group = make_elementary_abelian(2, spec.m);
    const GCode code = reed_muller(spec, group);
    const GCode square = schur_product(code, code);
    const GCode target = reed_muller({2 * spec.r, spec.m}, group);

    RMSquareVerdict v;
    v.square_dim = square.dim();
    v.target_dim = target.dim();
    v.square_is_rm_2r = square == target;
    v.ok = v.square_is_rm_2r;
    if (2 * spec.r + 1 <= spec.m) {
        v.self_orthogonal = is_self_orthogonal(code);
        v.ok = v.ok && *v.self_orthogonal;
    }
    if (2 * spec.r + 1 < spec.m) {
        const GCode aug = GCode::augmentation_ideal(group, FieldSpec(2));
        v.strictly_inside_augmentation = is_subcode(square, aug) && square.dim() < aug.dim();
        v.ok = v.ok && *v.strictly_inside_augmentation;
    }
    return v;
}

namespace {

constexpr std::size_t kS4 = 24;

struct BlockOutcome {
    std::uint64_t hits = 0;
    std::optional<std::uint64_t> success;  // trial index
    std::uint32_t generator = 0;
};

class GolayFilter {
public:
    explicit GolayFilter(const Group& s4) {
        for (Elem g = 0; g < kS4; ++g)
            for (Elem y = 0; y < kS4; ++y) shift_[g][y] = static_cast<std::uint8_t>(s4.mul(y, g));
    }

    // Returns the reduced basis of fKG; bit y is the coefficient of element y.
    std::vector<std::uint32_t> ideal_basis(std::uint32_t f) const {
        std::array<std::uint32_t, kS4> rows{};
        for (Elem g = 0; g < kS4; ++g) {
            std::uint32_t r = 0;
            for (std::uint32_t w = f; w; w &= w - 1) r |= 1u << shift_[g][std::countr_zero(w)];
            rows[g] = r;
        }
        std::vector<std::uint32_t> basis;
        for (std::uint32_t r : rows) {
            for (std::uint32_t b : basis) r = std::min(r, r ^ b);
            if (r) {
                basis.push_back(r);
                std::sort(basis.begin(), basis.end(), std::greater<>());
            }
        }
        return basis;
    }

    static std::size_t min_weight(const std::vector<std::uint32_t>& basis) {
        std::size_t best = kS4 + 1;
        std::uint32_t word = 0;
        const std::uint32_t total = 1u << basis.size();
        for (std::uint32_t i = 1; i < total; ++i) {
            word ^= basis[static_cast<std::size_t>(std::countr_zero(i))];  // Gray code step
            best = std::min<std::size_t>(best, static_cast<std::size_t>(std::popcount(word)));
        }
        return best;
    }

private:
    std::array<std::array<std::uint8_t, kS4>, kS4> shift_{};
};

BlockOutcome run_block(const GolayFilter& filter, std::uint64_t seed, std::uint64_t block, std::uint64_t begin,
                       std::uint64_t end) {
    std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                      static_cast<std::uint32_t>(block), static_cast<std::uint32_t>(block >> 32)};
    std::mt19937_64 rng(seq);
    BlockOutcome out;
    for (std::uint64_t trial = begin; trial < end; ++trial) {
        const auto f = static_cast<std::uint32_t>(rng() & ((1u << kS4) - 1));
        const auto basis = filter.ideal_basis(f);
        if (basis.size() != 12) continue;
        ++out.hits;
        if (GolayFilter::min_weight(basis) == 8) {
            out.success = trial;
            out.generator = f;
            break;
        }
    }
    return out;
}

}  // namespace

GolaySearchResult golay_search(std::uint64_t budget, std::uint64_t seed, unsigned threads) {
    GolaySearchResult result;
    if (budget == 0) return result;
    const GroupPtr s4 = make_symmetric(4);
    const GolayFilter filter(*s4);
    const std::uint64_t blocks = (budget + kGolayBlock - 1) / kGolayBlock;

    std::vector<BlockOutcome> outcomes(blocks);
    std::atomic<std::uint64_t> next{0};
    std::atomic<std::uint64_t> first_success{blocks};
    auto worker = [&] {
        for (;;) {
            const std::uint64_t b = next.fetch_add(1);
            if (b >= blocks || b > first_success.load()) return;
            const std::uint64_t begin = b * kGolayBlock;
            outcomes[b] = run_block(filter, seed, b, begin, std::min(budget, begin + kGolayBlock));
            if (outcomes[b].success) {
                std::uint64_t cur = first_success.load();
                while (b < cur && !first_success.compare_exchange_weak(cur, b)) {
                }
            }
        }
    };
    threads = std::max(1u, threads);
    std::vector<std::thread> pool;
    for (unsigned t = 1; t < threads; ++t) pool.emplace_back(worker);
    worker();
    for (auto& t : pool) t.join();

    const std::uint64_t last = first_success.load();
    for (std::uint64_t b = 0; b < std::min(last + 1, blocks); ++b) result.dimension_hits += outcomes[b].hits;
    if (last == blocks) {
        result.trials_run = budget;
        return result;
    }

    const BlockOutcome& hit = outcomes[last];
    result.trial_index = *hit.success;
    result.trials_run = *hit.success + 1;
    const FieldSpec f2(2);
    Vector coeffs(kS4);
    for (std::size_t y = 0; y < kS4; ++y) coeffs[y] = (hit.generator >> y) & 1u;
    AlgElem generator(s4, f2, std::move(coeffs));
    GCode code = ideal_from_generators(s4, f2, {generator});

    const ParamReport report = params(code);
    ensure(report.length == 24 && report.dimension == 12 && report.min_distance == 8u,
           "Golay candidate failed the [24,12,8] verification");
    ensure(*report.product == 96, "Golay candidate has d*k != 96");
    ensure(dual(code) == code, "Golay candidate is not self-dual");
    result.generator = std::move(generator);
    result.code = std::move(code);
    return result;
}

}  // namespace gcodelab
