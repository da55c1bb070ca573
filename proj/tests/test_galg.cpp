// SPDX-License-Identifier: Apache-2.0
#include <gtest/gtest.h>

#include <random>

#include "gcodelab/galg.hpp"
#include "oracles.hpp"

using namespace gcodelab;

namespace {

AlgElem elem(const GroupPtr& g, FieldSpec f, const oracle::Vec& v) { return AlgElem(g, f, Vector(v.begin(), v.end())); }

AlgElem random_elem(std::mt19937_64& rng, const GroupPtr& g, FieldSpec f) {
    return elem(g, f, oracle::random_vec(rng, f.p(), g->order()));
}

std::vector<GroupPtr> small_groups() {
    return {make_cyclic(1), make_cyclic(2), make_cyclic(3), make_cyclic(4), make_elementary_abelian(2, 2),
            make_symmetric(3), make_cyclic(6)};
}

}  // namespace

class GalgF3C2 : public ::testing::Test {
protected:
    GroupPtr g = make_cyclic(2);
    FieldSpec f{3};
    AlgElem c = AlgElem::parse(g, f, "1,2");
};

TEST_F(GalgF3C2, WeightAndSupport) {
    EXPECT_EQ(support(c), (std::vector<Elem>{0, 1}));
    EXPECT_EQ(weight(c), 2u);
    EXPECT_EQ(weight(AlgElem(g, f)), 0u);
    EXPECT_EQ(hamming_distance(AlgElem::parse(g, f, "1,1"), c), 1u);
    EXPECT_EQ(hamming_distance(c, c), 0u);
}

TEST_F(GalgF3C2, ConvolveSquare) {
    EXPECT_EQ(convolve(c, c).to_string(), "2,1");
    EXPECT_EQ(convolve(c, AlgElem::one(g, f)), c);
}

TEST_F(GalgF3C2, SchurAndInner) {
    EXPECT_EQ(schur(c, c).to_string(), "1,1");
    EXPECT_EQ(inner(c, c).value(), 2u);
    EXPECT_EQ(augmentation(c).value(), 0u);
}

TEST_F(GalgF3C2, MultiplicationMatrix) {
    const Matrix t = multiplication_matrix(c);
    EXPECT_EQ(t.to_rows(), (std::vector<Vector>{{1, 2}, {2, 1}}));
    EXPECT_EQ(rank(t), 1u);
}

TEST_F(GalgF3C2, TranslateFixesTrivialModule) {
    const AlgElem t = AlgElem::parse(g, f, "1,1");
    EXPECT_EQ(right_translate(t, 1), t);
    EXPECT_EQ(right_translate(c, 1).to_string(), "2,1");
}

TEST(GalgTest, ParseAndPrint) {
    const auto g = make_cyclic(3);
    const FieldSpec f(5);
    EXPECT_EQ(AlgElem::parse(g, f, "1, -1, 7").to_string(), "1,4,2");
    EXPECT_THROW(AlgElem::parse(g, f, "1,2"), std::invalid_argument);
    EXPECT_THROW(AlgElem::parse(g, f, "1,x,2"), std::invalid_argument);
    EXPECT_THROW(AlgElem::basis(g, f, 3), std::invalid_argument);
    EXPECT_EQ(AlgElem::indicator(g, f, {0, 2}).to_string(), "1,0,1");
    EXPECT_EQ(AlgElem::all_ones(g, f).to_string(), "1,1,1");
}

TEST(GalgTest, MismatchedOperandsThrow) {
    const auto g = make_cyclic(2);
    const AlgElem a = AlgElem::one(g, FieldSpec(2));
    const AlgElem b = AlgElem::one(g, FieldSpec(3));
    EXPECT_THROW(add(a, b), std::invalid_argument);
    EXPECT_THROW(convolve(AlgElem::one(make_cyclic(3), FieldSpec(2)), a), std::invalid_argument);
}

TEST(GalgTest, AllOnesAbsorbs) {
    for (const auto& g : small_groups()) {
        const FieldSpec f(3);
        std::mt19937_64 rng(g->order());
        const AlgElem s = AlgElem::all_ones(g, f);
        EXPECT_EQ(rank(multiplication_matrix(s)), 1u);
        EXPECT_EQ(augmentation(s).value(), g->order() % 3);
        for (int i = 0; i < 20; ++i) {
            const AlgElem h = random_elem(rng, g, f);
            EXPECT_EQ(convolve(s, h), scale(s, augmentation(h).value()));
            EXPECT_EQ(schur(h, s), h);
        }
    }
}

// Convolution against the table oracle, plus ring axioms on random triples.
TEST(GalgProperty, ConvolutionRing) {
    for (std::uint32_t p : {2u, 3u}) {
        const FieldSpec f(p);
        for (const auto& g : small_groups()) {
            std::mt19937_64 rng(p * 100 + g->order());
            const AlgElem one = AlgElem::one(g, f);
            for (int trial = 0; trial < 60; ++trial) {
                const AlgElem a = random_elem(rng, g, f), b = random_elem(rng, g, f), c = random_elem(rng, g, f);
                EXPECT_EQ(convolve(a, b).coeffs(), Vector(oracle::convolve(*g, p, a.coeffs(), b.coeffs())));
                EXPECT_EQ(convolve(convolve(a, b), c), convolve(a, convolve(b, c)));
                EXPECT_EQ(convolve(a, add(b, c)), add(convolve(a, b), convolve(a, c)));
                EXPECT_EQ(convolve(one, a), a);
                EXPECT_EQ(convolve(a, one), a);
            }
        }
    }
}

TEST(GalgProperty, ConvolutionAssociativeExhaustiveC3OverF2) {
    const auto g = make_cyclic(3);
    const FieldSpec f(2);
    std::vector<AlgElem> all;
    oracle::for_each_vec(2, 3, [&](const oracle::Vec& v) { all.push_back(elem(g, f, v)); });
    for (const auto& a : all)
        for (const auto& b : all)
            for (const auto& c : all) ASSERT_EQ(convolve(convolve(a, b), c), convolve(a, convolve(b, c)));
}

TEST(GalgProperty, SchurIsCommutativeBilinear) {
    const FieldSpec f(5);
    const auto g = make_dihedral(3);
    std::mt19937_64 rng(9);
    const AlgElem ones = AlgElem::all_ones(g, f);
    for (int trial = 0; trial < 100; ++trial) {
        const AlgElem a = random_elem(rng, g, f), b = random_elem(rng, g, f), c = random_elem(rng, g, f);
        EXPECT_EQ(schur(a, b), schur(b, a));
        EXPECT_EQ(schur(schur(a, b), c), schur(a, schur(b, c)));
        EXPECT_EQ(schur(a, add(b, scale(c, 3))), add(schur(a, b), scale(schur(a, c), 3)));
        EXPECT_EQ(schur(a, ones), a);
        EXPECT_EQ(inner(a, b), augmentation(schur(a, b)));
    }
}

TEST(GalgProperty, TranslationIsIsometry) {
    const FieldSpec f(3);
    for (const auto& g : {make_symmetric(3), make_quaternion8(), make_cyclic(5)}) {
        std::mt19937_64 rng(g->order() + 1);
        for (int trial = 0; trial < 30; ++trial) {
            const AlgElem a = random_elem(rng, g, f), b = random_elem(rng, g, f);
            for (Elem x = 0; x < g->order(); ++x) {
                const AlgElem ax = right_translate(a, x);
                EXPECT_EQ(ax, convolve(a, AlgElem::basis(g, f, x)));
                EXPECT_EQ(weight(ax), weight(a));
                EXPECT_EQ(inner(ax, right_translate(b, x)), inner(a, b));
            }
        }
    }
}

// rank T_f against the size of the span of the translates f g.
TEST(GalgProperty, MultiplicationMatrixRankIsIdealDimension) {
    for (std::uint32_t p : {2u, 3u}) {
        const FieldSpec f(p);
        for (const auto& g : {make_cyclic(4), make_symmetric(3), make_elementary_abelian(2, 2)}) {
            std::mt19937_64 rng(p + g->order());
            for (int trial = 0; trial < 40; ++trial) {
                const AlgElem a = random_elem(rng, g, f);
                const auto ideal = oracle::right_ideal(*g, p, {a.coeffs()});
                EXPECT_EQ(rank(multiplication_matrix(a)), oracle::log_p(p, ideal.size()));
            }
        }
    }
}
