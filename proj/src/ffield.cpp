// SPDX-License-Identifier: Apache-2.0
#include "gcodelab/ffield.hpp"

#include <ostream>
#include <stdexcept>
#include <string>

namespace gcodelab {

bool is_prime(std::uint64_t n) {
    if (n < 2) return false;
    if (n % 2 == 0) return n == 2;
    for (std::uint64_t d = 3; d * d <= n; d += 2)
        if (n % d == 0) return false;
    return true;
}

FieldSpec::FieldSpec(std::uint32_t p) : p_(p) {
    if (p > kMaxModulus || !is_prime(p))
        throw std::invalid_argument("field modulus must be a prime <= 65536, got " + std::to_string(p));
}

Residue FieldSpec::inv(Residue a) const {
    a %= p_;
    if (a == 0) throw std::domain_error("inverse of zero in F_" + std::to_string(p_));
    std::int64_t r0 = p_, r1 = a, t0 = 0, t1 = 1;
    while (r1 != 0) {
        std::int64_t q = r0 / r1;
        std::int64_t r2 = r0 - q * r1;
        r0 = r1;
        r1 = r2;
        std::int64_t t2 = t0 - q * t1;
        t0 = t1;
        t1 = t2;
    }
    if (t0 < 0) t0 += p_;
    return static_cast<Residue>(t0);
}

namespace {

void require_same(const FieldElem& a, const FieldElem& b) {
    if (a.spec() != b.spec())
        throw std::invalid_argument("field modulus mismatch: F_" + std::to_string(a.spec().p()) + " vs F_" +
                                    std::to_string(b.spec().p()));
}

}  // namespace

FieldElem add(const FieldElem& a, const FieldElem& b) {
    require_same(a, b);
    return {a.spec(), a.spec().add(a.value(), b.value())};
}

FieldElem sub(const FieldElem& a, const FieldElem& b) {
    require_same(a, b);
    return {a.spec(), a.spec().sub(a.value(), b.value())};
}

FieldElem mul(const FieldElem& a, const FieldElem& b) {
    require_same(a, b);
    return {a.spec(), a.spec().mul(a.value(), b.value())};
}

FieldElem inv(const FieldElem& a) { return {a.spec(), a.spec().inv(a.value())}; }

std::ostream& operator<<(std::ostream& os, const FieldElem& a) { return os << a.value(); }

}  // namespace gcodelab
