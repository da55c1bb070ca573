// SPDX-License-Identifier: Apache-2.0
#include <gtest/gtest.h>

#include <sstream>
#include <stdexcept>

#include "gcodelab/ffield.hpp"

using namespace gcodelab;

namespace {

bool trial_division_prime(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t d = 2; d < n; ++d)
        if (n % d == 0) return false;
    return true;
}

}  // namespace

TEST(FieldTest, IsPrimeMatchesTrialDivision) {
    for (std::uint64_t n = 0; n < 2000; ++n) EXPECT_EQ(is_prime(n), trial_division_prime(n)) << n;
    EXPECT_TRUE(is_prime(65521));
    EXPECT_FALSE(is_prime(65535));
}

TEST(FieldTest, RejectsBadModuli) {
    EXPECT_THROW(FieldSpec(0), std::invalid_argument);
    EXPECT_THROW(FieldSpec(1), std::invalid_argument);
    EXPECT_THROW(FieldSpec(4), std::invalid_argument);
    EXPECT_THROW(FieldSpec(65537), std::invalid_argument);  // prime, but above 2^16
    EXPECT_NO_THROW(FieldSpec(65521));
}

// Field axioms by exhaustion for the small primes the sweeps use.
class FieldAxioms : public ::testing::TestWithParam<std::uint32_t> {};

TEST_P(FieldAxioms, Exhaustive) {
    const FieldSpec f(GetParam());
    const std::uint32_t p = f.p();
    for (Residue a = 0; a < p; ++a) {
        EXPECT_EQ(f.add(a, 0), a);
        EXPECT_EQ(f.mul(a, 1), a);
        EXPECT_EQ(f.add(a, f.neg(a)), 0u);
        EXPECT_EQ(f.sub(a, a), 0u);
        if (a != 0) EXPECT_EQ(f.mul(a, f.inv(a)), 1u);
        for (Residue b = 0; b < p; ++b) {
            EXPECT_EQ(f.add(a, b), (a + b) % p);
            EXPECT_EQ(f.mul(a, b), a * b % p);
            EXPECT_EQ(f.add(f.sub(a, b), b), a);
            for (Residue c = 0; c < p; ++c) {
                EXPECT_EQ(f.mul(a, f.add(b, c)), f.add(f.mul(a, b), f.mul(a, c)));
                EXPECT_EQ(f.mul(f.mul(a, b), c), f.mul(a, f.mul(b, c)));
            }
        }
    }
}

INSTANTIATE_TEST_SUITE_P(SmallPrimes, FieldAxioms, ::testing::Values(2u, 3u, 5u, 7u));

TEST(FieldTest, InverseOfZeroThrows) {
    EXPECT_THROW(FieldSpec(5).inv(0), std::domain_error);
    EXPECT_THROW(inv(FieldElem(FieldSpec(3), 3)), std::domain_error);
}

TEST(FieldTest, LargePrimeInverses) {
    const FieldSpec f(65521);
    for (Residue a : {1u, 2u, 3u, 12345u, 65520u}) EXPECT_EQ(f.mul(a, f.inv(a)), 1u);
    EXPECT_EQ(f.mul(65520, 65520), 1u);
}

TEST(FieldElemTest, ReducesAndCombines) {
    const FieldSpec f3(3);
    const FieldElem a(f3, 5);
    EXPECT_EQ(a.value(), 2u);
    EXPECT_EQ((a + FieldElem(f3, 1)).value(), 0u);
    EXPECT_TRUE((a + FieldElem(f3, 1)).is_zero());
    EXPECT_EQ((a * a).value(), 1u);
    EXPECT_EQ((FieldElem(f3, 0) - a).value(), 1u);
    EXPECT_EQ(inv(a), a);
    std::ostringstream s;
    s << a;
    EXPECT_EQ(s.str(), "2");
}

TEST(FieldElemTest, MixedModuliThrow) {
    const FieldElem a(FieldSpec(3), 1);
    const FieldElem b(FieldSpec(5), 1);
    EXPECT_THROW(add(a, b), std::invalid_argument);
    EXPECT_THROW(sub(a, b), std::invalid_argument);
    EXPECT_THROW(mul(a, b), std::invalid_argument);
}
