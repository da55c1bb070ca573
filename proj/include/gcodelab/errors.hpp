// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <stdexcept>
#include <string>

namespace gcodelab {

/// A structural guarantee failed to hold; always a bug in this library, never bad input.
class InvariantViolation : public std::logic_error {
public:
    explicit InvariantViolation(const std::string& what) : std::logic_error(what) {}
};

/// Exhaustive codeword enumeration would exceed the configured guard.
class GuardExceeded : public std::runtime_error {
public:
    explicit GuardExceeded(const std::string& what) : std::runtime_error(what) {}
};

/// The requested computation is outside the cases this library can decide.
class Unsupported : public std::runtime_error {
public:
    explicit Unsupported(const std::string& what) : std::runtime_error(what) {}
};

inline void ensure(bool condition, const std::string& what) {
    if (!condition) throw InvariantViolation(what);
}

}  // namespace gcodelab
