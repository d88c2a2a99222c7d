#pragma once

#include <cstdint>
#include <vector>

namespace innerdist {

/// An integer residue held in the 1-based range [1, modulus].
struct Residue1N {
  std::int64_t value = 1;
  std::int64_t modulus = 1;

  friend bool operator==(const Residue1N&, const Residue1N&) = default;
};

/// The representative of a (mod n) in [1, n]; 0 maps to n.
/// Throws DomainError when n < 1.
Residue1N mod1n(std::int64_t a, std::int64_t n);

/// Same as mod1n but returns the bare value.
std::int64_t wrap1(std::int64_t a, std::int64_t n);

/// Non-negative gcd; gcd(0, 0) == 0.
std::int64_t gcd(std::int64_t a, std::int64_t b);

/// [mod1n(start + m*step, n) for m = 0..n-1].
std::vector<Residue1N> residue_orbit(std::int64_t start, std::int64_t step,
                                     std::int64_t n);

}  // namespace innerdist
