#include "innerdist/modmath.hpp"

#include <numeric>
#include <string>

#include "innerdist/errors.hpp"

namespace innerdist {

std::int64_t wrap1(std::int64_t a, std::int64_t n) {
  if (n < 1) {
    throw DomainError("modulus must be positive, got " + std::to_string(n));
  }
  std::int64_t r = a % n;
  if (r <= 0) r += n;
  return r;
}

Residue1N mod1n(std::int64_t a, std::int64_t n) {
  return Residue1N{wrap1(a, n), n};
}

std::int64_t gcd(std::int64_t a, std::int64_t b) {
  return std::gcd(a, b);
}

std::vector<Residue1N> residue_orbit(std::int64_t start, std::int64_t step,
                                     std::int64_t n) {
  std::vector<Residue1N> orbit;
  orbit.reserve(static_cast<std::size_t>(n > 0 ? n : 0));
  std::int64_t current = wrap1(start, n);
  const std::int64_t delta = wrap1(step, n);
  for (std::int64_t m = 0; m < n; ++m) {
    orbit.push_back(Residue1N{current, n});
    current = wrap1(current + delta, n);
  }
  return orbit;
}

}  // namespace innerdist
