// SPDX-License-Identifier: Apache-2.0
#include <gtest/gtest.h>

#include <algorithm>
#include <map>
#include <numeric>

#include "gcodelab/group.hpp"
#include "catalog.hpp"
#include "oracles.hpp"

using namespace gcodelab;

namespace {

using Table = std::vector<std::vector<Elem>>;

Table build(std::size_t n, const std::function<Elem(Elem, Elem)>& mul) {
    Table t(n, std::vector<Elem>(n));
    for (Elem a = 0; a < n; ++a)
        for (Elem b = 0; b < n; ++b) t[a][b] = mul(a, b);
    return t;
}

// s^e r^a as the map x -> (-1)^e x + a on Z_m, applied left to right.
Table dihedral_oracle(std::size_t m) {
    return build(2 * m, [m](Elem x, Elem y) {
        const std::size_t e1 = x / m, a1 = x % m, e2 = y / m, a2 = y % m;
        const std::size_t a = ((e2 ? m - a1 : a1) + a2) % m;
        return ((e1 ^ e2) * m) + a;
    });
}

Table symmetric_oracle(std::size_t k) {
    std::vector<std::vector<int>> perms;
    std::vector<int> p(k);
    std::iota(p.begin(), p.end(), 0);
    do perms.push_back(p);
    while (std::next_permutation(p.begin(), p.end()));
    return build(perms.size(), [&](Elem a, Elem b) {
        std::vector<int> c(k);
        for (std::size_t i = 0; i < k; ++i) c[i] = perms[b][perms[a][i]];
        return static_cast<Elem>(std::find(perms.begin(), perms.end(), c) - perms.begin());
    });
}

// Units of the quaternions as (sign, axis) with axis 0..3 = 1, i, j, k; index sign*4 + axis.
Table quaternion_oracle() {
    // unit[a][b] = (sign flip, axis) of axis_a * axis_b
    const int axis[4][4] = {{0, 1, 2, 3}, {1, 0, 3, 2}, {2, 3, 0, 1}, {3, 2, 1, 0}};
    const int flip[4][4] = {{0, 0, 0, 0}, {0, 1, 0, 1}, {0, 1, 1, 0}, {0, 0, 1, 1}};
    return build(8, [&](Elem x, Elem y) {
        const std::size_t s = (x / 4) ^ (y / 4) ^ flip[x % 4][y % 4];
        return s * 4 + axis[x % 4][y % 4];
    });
}

std::map<std::size_t, std::size_t> order_histogram(const Group& g) {
    std::map<std::size_t, std::size_t> h;
    for (Elem x = 0; x < g.order(); ++x) ++h[g.element_order(x)];
    return h;
}

}  // namespace

TEST(GroupTest, CyclicTable) {
    for (std::size_t n : {1u, 2u, 5u, 12u}) {
        const auto g = make_cyclic(n);
        EXPECT_EQ(g->table(), build(n, [n](Elem a, Elem b) { return (a + b) % n; }));
        EXPECT_EQ(g->name(), "cyclic:" + std::to_string(n));
    }
}

TEST(GroupTest, DihedralMatchesAffineMaps) {
    for (std::size_t m : {2u, 3u, 4u, 8u}) EXPECT_EQ(make_dihedral(m)->table(), dihedral_oracle(m)) << m;
    const auto d4 = make_dihedral(4);
    // r s = s r^-1
    EXPECT_EQ(d4->mul(1, 4), 4u + 3u);
    EXPECT_EQ(d4->label(4), "s");
}

TEST(GroupTest, SymmetricMatchesPermutations) {
    for (std::size_t k : {1u, 2u, 3u, 4u}) EXPECT_EQ(make_symmetric(k)->table(), symmetric_oracle(k)) << k;
    EXPECT_EQ(make_symmetric(5)->order(), 120u);
    EXPECT_THROW(make_symmetric(6), std::invalid_argument);
}

TEST(GroupTest, QuaternionMatchesUnitQuaternions) {
    const auto q = make_quaternion8();
    EXPECT_EQ(q->table(), quaternion_oracle());
    EXPECT_EQ(order_histogram(*q), (std::map<std::size_t, std::size_t>{{1, 1}, {2, 1}, {4, 6}}));
}

TEST(GroupTest, ElementaryAbelianOrdering) {
    const auto e = make_elementary_abelian(3, 2);
    // index = 3 * first + second
    EXPECT_EQ(e->mul(1, 3), 4u);
    EXPECT_EQ(e->mul(5, 5), 3u * ((1 + 1) % 3) + (2 + 2) % 3);
    EXPECT_EQ(e->name(), "elemabelian:3,2");
    EXPECT_THROW(make_elementary_abelian(4, 2), std::invalid_argument);
}

TEST(GroupTest, DirectProductPairs) {
    const auto a = make_cyclic(4), b = make_cyclic(2);
    const auto g = direct_product(a, b);
    EXPECT_EQ(g->name(), "cyclic:4*cyclic:2");
    for (Elem x = 0; x < 8; ++x)
        for (Elem y = 0; y < 8; ++y) EXPECT_EQ(g->mul(x, y), a->mul(x / 2, y / 2) * 2 + b->mul(x % 2, y % 2));
}

TEST(GroupProperty, BuiltinsAreGroups) {
    for (const auto& g : {make_cyclic(7), make_dihedral(5), make_symmetric(4), make_quaternion8(),
                          make_elementary_abelian(2, 3), direct_product(make_quaternion8(), make_cyclic(2))}) {
        EXPECT_TRUE(oracle::is_group_table(g->table())) << g->name();
        for (Elem x = 0; x < g->order(); ++x) {
            EXPECT_EQ(g->mul(x, g->inv(x)), 0u);
            EXPECT_EQ(g->mul(0, x), x);
        }
        EXPECT_EQ(subgroup_generated(g, g->generators()).order(), g->order());
    }
}

TEST(GroupTest, FromTableRelabelsIdentity) {
    // Z_3 written with the identity at index 2.
    const Table t{{1, 2, 0}, {2, 0, 1}, {0, 1, 2}};
    const Group g = Group::from_table("z3", t, {"a", "b", "e"});
    EXPECT_EQ(g.label(0), "e");
    EXPECT_EQ(g.mul(0, 1), 1u);
    EXPECT_EQ(g.element_order(1), 3u);
}

TEST(GroupTest, FromTableRejectsBadTables) {
    EXPECT_THROW(Group::from_table("x", {}), std::invalid_argument);
    EXPECT_THROW(Group::from_table("x", {{0, 1}, {1, 1}}), std::invalid_argument);
    EXPECT_THROW(Group::from_table("x", {{0, 1}, {1, 2}}), std::invalid_argument);
    // A Latin square with identity that is not associative (order 5 loop).
    const Table loop{{0, 1, 2, 3, 4}, {1, 0, 3, 4, 2}, {2, 4, 0, 1, 3}, {3, 2, 4, 0, 1}, {4, 3, 1, 2, 0}};
    EXPECT_THROW(Group::from_table("loop", loop), std::invalid_argument);
}

TEST(SubgroupTest, Basics) {
    const auto s3 = make_symmetric(3);
    const Subgroup a3 = subgroup_generated(s3, {3});
    EXPECT_EQ(a3.order(), 3u);
    EXPECT_EQ(a3.index(), 2u);
    EXPECT_TRUE(is_normal(*s3, a3.members()));
    const Subgroup t = subgroup_generated(s3, {1});
    EXPECT_EQ(t.order(), 2u);
    EXPECT_FALSE(is_normal(*s3, t.members()));
    EXPECT_THROW(Subgroup(s3, {0, 1, 2}), std::invalid_argument);
    EXPECT_EQ(Subgroup::trivial(s3).order(), 1u);
    EXPECT_EQ(Subgroup::whole(s3).order(), 6u);
}

TEST(SubgroupTest, RightCosetsPartition) {
    const auto d4 = make_dihedral(4);
    for (const auto& seeds : std::vector<std::vector<Elem>>{{2}, {4}, {1}, {4, 2}}) {
        const Subgroup h = subgroup_generated(d4, seeds);
        const auto blocks = right_cosets(h);
        EXPECT_EQ(blocks.size(), h.index());
        EXPECT_EQ(blocks.front(), h.members());
        std::vector<int> hits(d4->order(), 0);
        for (const auto& b : blocks) {
            for (Elem x : b) ++hits[x];
            // H x = H y iff x y^-1 in H
            for (Elem x : b)
                for (Elem y : b) EXPECT_TRUE(h.contains(d4->mul(x, d4->inv(y))));
        }
        EXPECT_TRUE(std::all_of(hits.begin(), hits.end(), [](int c) { return c == 1; }));
    }
}

TEST(GroupTest, PParts) {
    EXPECT_EQ(p_part(24, 2), 8u);
    EXPECT_EQ(p_part(24, 3), 3u);
    EXPECT_EQ(p_part(24, 5), 1u);
    EXPECT_TRUE(is_p_group(*make_quaternion8(), 2));
    EXPECT_FALSE(is_p_group(*make_symmetric(3), 2));
    EXPECT_TRUE(is_p_group(*make_cyclic(1), 3));
    EXPECT_THROW(p_part(8, 4), std::invalid_argument);
}

TEST(GroupTest, NormalPComplement) {
    const auto s3 = make_symmetric(3);
    const auto c2 = normal_p_complement(s3, 2);
    ASSERT_TRUE(c2.has_value());
    EXPECT_EQ(c2->order(), 3u);
    EXPECT_FALSE(normal_p_complement(s3, 3).has_value());
    EXPECT_FALSE(normal_p_complement(make_symmetric(4), 2).has_value());
    const auto c6 = normal_p_complement(make_cyclic(6), 2);
    ASSERT_TRUE(c6.has_value());
    EXPECT_EQ(c6->members(), (std::vector<Elem>{0, 2, 4}));
}

TEST(CatalogTest, OrderSixteenClassesAreDistinct) {
    std::set<catalog::Fingerprint> seen;
    std::map<std::size_t, std::size_t> per_order;
    for (const auto& e : catalog::two_groups()) {
        const auto& g = *e.group;
        EXPECT_TRUE(oracle::is_group_table(g.table())) << g.name();
        ++per_order[g.order()];
        EXPECT_TRUE(seen.insert(catalog::fingerprint(g)).second) << g.name();
    }
    EXPECT_EQ(per_order, (std::map<std::size_t, std::size_t>{{1, 1}, {2, 1}, {4, 2}, {8, 5}, {16, 14}}));
}
