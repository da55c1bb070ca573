// SPDX-License-Identifier: Apache-2.0
#include <gtest/gtest.h>

#include <random>

#include "gcodelab/errors.hpp"
#include "gcodelab/gcode.hpp"
#include "oracles.hpp"

using namespace gcodelab;

namespace {

GCode principal(const GroupPtr& g, FieldSpec f, const Vector& v) {
    return ideal_from_generators(g, f, {AlgElem(g, f, v)});
}

}  // namespace

TEST(GCodeTest, F3C2Example) {
    const auto g = make_cyclic(2);
    const FieldSpec f(3);
    const GCode c = principal(g, f, {1, 2});
    EXPECT_EQ(c.dim(), 1u);
    EXPECT_EQ(c.basis().matrix().to_rows(), (std::vector<Vector>{{1, 2}}));
    const ParamReport r = params(c);
    EXPECT_EQ(r.length, 2u);
    EXPECT_EQ(r.min_distance, 2u);
    EXPECT_EQ(r.product, 2u);
    EXPECT_TRUE(r.bound_ok);
    EXPECT_TRUE(r.equality);
    EXPECT_FALSE(is_self_orthogonal(c));
}

TEST(GCodeTest, GeneratorEdgeCases) {
    const auto g = make_symmetric(3);
    const FieldSpec f(2);
    EXPECT_EQ(ideal_from_generators(g, f, {AlgElem::one(g, f)}), GCode::full(g, f));
    EXPECT_EQ(ideal_from_generators(g, f, {}).dim(), 0u);
    const Subgroup a3 = subgroup_generated(g, {3});
    const AlgElem sum = AlgElem::indicator(g, f, a3.members());
    EXPECT_EQ(ideal_from_generators(g, f, {sum}), trivial_induced(a3, f));
    EXPECT_EQ(trivial_induced(a3, f).dim(), 2u);
}

TEST(GCodeTest, TrivialInducedC4) {
    const auto g = make_cyclic(4);
    const FieldSpec f(2);
    const GCode c = trivial_induced(subgroup_generated(g, {2}), f);
    EXPECT_EQ(c.basis().matrix().to_rows(), (std::vector<Vector>{{1, 0, 1, 0}, {0, 1, 0, 1}}));
    EXPECT_EQ(min_distance(c), 2u);
    EXPECT_EQ(trivial_induced(Subgroup::whole(g), f).dim(), 1u);
    EXPECT_EQ(min_distance(trivial_induced(Subgroup::whole(g), f)), 4u);
    EXPECT_EQ(trivial_induced(Subgroup::trivial(g), f), GCode::full(g, f));
}

TEST(GCodeTest, TrivialInducedAttainsEqualityForEverySubgroup) {
    for (const auto& g : {make_dihedral(4), make_symmetric(3), make_cyclic(8)}) {
        for (std::uint32_t p : {2u, 3u}) {
            const FieldSpec f(p);
            for (Elem x = 0; x < g->order(); ++x)
                for (Elem y = x; y < g->order(); ++y) {
                    const Subgroup h = subgroup_generated(g, {x, y});
                    const ParamReport r = params(trivial_induced(h, f));
                    EXPECT_EQ(r.dimension, h.index());
                    EXPECT_EQ(r.min_distance, h.order());
                    EXPECT_TRUE(r.equality);
                }
        }
    }
}

TEST(GCodeTest, IsIdeal) {
    const auto g = make_cyclic(2);
    const FieldSpec f(2);
    EXPECT_FALSE(is_ideal(*g, span_of(f, 2, {{1, 0}})));
    EXPECT_TRUE(is_ideal(*g, span_of(f, 2, {{1, 1}})));
    EXPECT_THROW(GCode(g, span_of(f, 2, {{1, 0}})), std::invalid_argument);
    const auto s3 = make_symmetric(3);
    EXPECT_TRUE(is_ideal(*s3, GCode::augmentation_ideal(s3, FieldSpec(3)).basis()));
    EXPECT_EQ(GCode::augmentation_ideal(s3, FieldSpec(3)).dim(), 5u);
}

TEST(GCodeTest, MinDistanceEdgeCases) {
    const auto g = make_cyclic(4);
    const FieldSpec f(2);
    EXPECT_EQ(min_distance(GCode::full(g, f)), 1u);
    EXPECT_THROW(min_distance(GCode::zero(g, f)), std::invalid_argument);
    const ParamReport z = params(GCode::zero(g, f));
    EXPECT_FALSE(z.min_distance.has_value());
    EXPECT_FALSE(z.product.has_value());
    EXPECT_THROW(min_distance(GCode::full(g, f), 15), GuardExceeded);
    EXPECT_EQ(min_distance(GCode::full(g, f), 16), 1u);
}

TEST(GCodeTest, FullGroupAlgebraParams) {
    const ParamReport r = params(GCode::full(make_cyclic(8), FieldSpec(2)));
    EXPECT_EQ(r.product, 8u);
    EXPECT_TRUE(r.equality);
}

TEST(GCodeTest, MinimumWeightCodewordIsFirstInEnumeration) {
    const auto g = make_cyclic(4);
    const FieldSpec f(3);
    const GCode c = principal(g, f, {1, 1, 0, 0});
    const AlgElem w = minimum_weight_codeword(c);
    EXPECT_EQ(weight(w), min_distance(c));
    EXPECT_TRUE(c.contains(w));
}

TEST(GCodeTest, DualEdgeCases) {
    const auto g = make_cyclic(2);
    const FieldSpec f(2);
    EXPECT_EQ(dual(GCode::full(g, f)), GCode::zero(g, f));
    EXPECT_EQ(dual(GCode::zero(g, f)), GCode::full(g, f));
    const GCode rep = principal(g, f, {1, 1});
    EXPECT_EQ(dual(rep), rep);
    EXPECT_TRUE(is_self_orthogonal(rep));
    EXPECT_TRUE(is_self_orthogonal(GCode::zero(g, f)));
    EXPECT_FALSE(is_self_orthogonal(GCode::full(g, f)));
    EXPECT_TRUE(is_subcode(rep, GCode::full(g, f)));
    EXPECT_FALSE(is_subcode(GCode::full(g, f), rep));
}

TEST(GCodeTest, CodewordCountSaturates) {
    EXPECT_EQ(codeword_count(2, 10), 1024u);
    EXPECT_EQ(codeword_count(3, 4), 81u);
    EXPECT_EQ(codeword_count(2, 64), UINT64_MAX);
    EXPECT_EQ(codeword_count(65521, 10), UINT64_MAX);
}

// Every principal ideal of several small group algebras against the brute-force oracles:
// the ideal itself, its minimum distance and its dual.
struct OracleCase {
    GroupPtr group;
    std::uint32_t p;
};

class GCodeOracle : public ::testing::TestWithParam<int> {};

TEST_P(GCodeOracle, PrincipalIdealsMatchBruteForce) {
    const std::vector<OracleCase> cases{{make_cyclic(4), 2}, {make_elementary_abelian(2, 2), 2}, {make_symmetric(3), 2},
                                        {make_cyclic(3), 3},  {make_cyclic(2), 5},                {make_dihedral(4), 2}};
    const OracleCase& oc = cases.at(GetParam());
    const FieldSpec f(oc.p);
    const std::size_t n = oc.group->order();
    std::mt19937_64 rng(GetParam());
    std::vector<oracle::Vec> gens;
    if (codeword_count(oc.p, n) <= 4096)
        oracle::for_each_vec(oc.p, n, [&](const oracle::Vec& v) { gens.push_back(v); });
    else
        for (int i = 0; i < 300; ++i) gens.push_back(oracle::random_vec(rng, oc.p, n));
    for (const auto& v : gens) {
        const GCode c = principal(oc.group, f, Vector(v.begin(), v.end()));
        const auto brute = oracle::right_ideal(*oc.group, oc.p, {v});
        ASSERT_EQ(oracle::rows_of(c.basis()), brute);
        EXPECT_TRUE(is_ideal(*oc.group, c.basis()));
        if (c.is_zero()) continue;
        EXPECT_EQ(min_distance(c), oracle::min_weight(brute));
        EXPECT_EQ(oracle::rows_of(dual(c).basis()), oracle::dual(oc.p, n, brute));
        EXPECT_EQ(dual(dual(c)), c);
        EXPECT_GE(min_distance(c) * c.dim(), n);
    }
}

INSTANTIATE_TEST_SUITE_P(SmallAlgebras, GCodeOracle, ::testing::Range(0, 6));

// Two-generator ideals against the oracle.
TEST(GCodeProperty, TwoGeneratorIdeals) {
    const auto g = make_quaternion8();
    const FieldSpec f(2);
    std::mt19937_64 rng(77);
    for (int trial = 0; trial < 60; ++trial) {
        const auto a = oracle::random_vec(rng, 2, 8), b = oracle::random_vec(rng, 2, 8);
        const GCode c = ideal_from_generators(g, f, {AlgElem(g, f, a), AlgElem(g, f, b)});
        EXPECT_EQ(oracle::rows_of(c.basis()), oracle::right_ideal(*g, 2, {a, b}));
    }
}
