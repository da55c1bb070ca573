// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <iosfwd>

namespace gcodelab {

/// Residue of a prime field, always kept in [0, p).
using Residue = std::uint32_t;

bool is_prime(std::uint64_t n);

/// The prime field F_p. Cheap to copy; comparisons are by modulus.
class FieldSpec {
public:
    static constexpr std::uint32_t kMaxModulus = 1u << 16;

    /// Throws std::invalid_argument unless p is a prime with 2 <= p <= 2^16.
    explicit FieldSpec(std::uint32_t p);

    std::uint32_t p() const noexcept { return p_; }

    Residue reduce(std::uint64_t v) const noexcept { return static_cast<Residue>(v % p_); }
    Residue add(Residue a, Residue b) const noexcept {
        Residue s = a + b;
        return s >= p_ ? s - p_ : s;
    }
    Residue sub(Residue a, Residue b) const noexcept { return a >= b ? a - b : a + p_ - b; }
    Residue neg(Residue a) const noexcept { return a == 0 ? 0 : p_ - a; }
    Residue mul(Residue a, Residue b) const noexcept {
        return static_cast<Residue>(static_cast<std::uint64_t>(a) * b % p_);
    }
    /// Extended Euclid. Throws std::domain_error on zero.
    Residue inv(Residue a) const;

    friend bool operator==(const FieldSpec&, const FieldSpec&) = default;

private:
    std::uint32_t p_;
};

class FieldElem {
public:
    /// The value is reduced mod p.
    FieldElem(FieldSpec spec, std::uint64_t value) : spec_(spec), value_(spec.reduce(value)) {}

    Residue value() const noexcept { return value_; }
    const FieldSpec& spec() const noexcept { return spec_; }
    bool is_zero() const noexcept { return value_ == 0; }

    friend bool operator==(const FieldElem&, const FieldElem&) = default;

private:
    FieldSpec spec_;
    Residue value_;
};

// Mixed-modulus arguments throw std::invalid_argument.
FieldElem add(const FieldElem& a, const FieldElem& b);
FieldElem sub(const FieldElem& a, const FieldElem& b);
FieldElem mul(const FieldElem& a, const FieldElem& b);
FieldElem inv(const FieldElem& a);

inline FieldElem operator+(const FieldElem& a, const FieldElem& b) { return add(a, b); }
inline FieldElem operator-(const FieldElem& a, const FieldElem& b) { return sub(a, b); }
inline FieldElem operator*(const FieldElem& a, const FieldElem& b) { return mul(a, b); }

std::ostream& operator<<(std::ostream& os, const FieldElem& a);

}  // namespace gcodelab
