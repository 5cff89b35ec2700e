#ifndef SKEWRING_TESTS_SUPPORT_HPP
#define SKEWRING_TESTS_SUPPORT_HPP

#include <cstdint>
#include <random>
#include <vector>

#include "skewring/skew_poly.hpp"

namespace skewring::testing {

inline RingElement random_element(const PrimeModulus& p, std::mt19937_64& rng) {
  std::uniform_int_distribution<std::int64_t> d(0, p.value() - 1);
  return {p, d(rng), d(rng), d(rng)};
}

inline SkewPolynomial random_poly(const PrimeModulus& p, AutomorphismId theta, std::size_t max_degree,
                                  std::mt19937_64& rng) {
  std::uniform_int_distribution<std::size_t> len(0, max_degree + 1);
  std::vector<RingElement> coeffs;
  const auto n = len(rng);
  for (std::size_t i = 0; i < n; ++i) coeffs.push_back(random_element(p, rng));
  return {p, theta, std::move(coeffs)};
}

/// Random polynomial of exact degree `degree` with leading coefficient 1.
inline SkewPolynomial random_monic(const PrimeModulus& p, AutomorphismId theta, std::size_t degree,
                                   std::mt19937_64& rng) {
  std::vector<RingElement> coeffs;
  for (std::size_t i = 0; i < degree; ++i) coeffs.push_back(random_element(p, rng));
  coeffs.push_back(RingElement::one(p));
  return {p, theta, std::move(coeffs)};
}

/// Product in F_p[v]/(v^3 - v) by schoolbook multiplication of the raw
/// coefficient vectors and repeated replacement v^k -> v^(k-2) for k >= 3.
/// Independent of skewring::mul.
inline RingElement naive_ring_product(const RingElement& x, const RingElement& y) {
  const std::int64_t p = x.modulus().value();
  const std::int64_t xs[3] = {x.a(), x.b(), x.c()};
  const std::int64_t ys[3] = {y.a(), y.b(), y.c()};
  std::int64_t full[5] = {0, 0, 0, 0, 0};
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) full[i + j] = (full[i + j] + xs[i] * ys[j]) % p;
  for (int k = 4; k >= 3; --k) {
    full[k - 2] = (full[k - 2] + full[k]) % p;
    full[k] = 0;
  }
  return {x.modulus(), full[0], full[1], full[2]};
}

/// Exhaustive annihilator search: does some nonzero w satisfy z w = 0?
inline bool has_nonzero_annihilator(const RingElement& z, const std::vector<RingElement>& elements) {
  for (const auto& w : elements) {
    if (!w.is_zero() && naive_ring_product(z, w).is_zero()) return true;
  }
  return false;
}

}  // namespace skewring::testing

#endif  // SKEWRING_TESTS_SUPPORT_HPP
