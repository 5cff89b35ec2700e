#ifndef SKEWRING_SKEW_CYCLIC_HPP
#define SKEWRING_SKEW_CYCLIC_HPP

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "skewring/skew_poly.hpp"

namespace skewring {

struct Codeword {
  std::vector<RingElement> entries;

  std::size_t length() const noexcept { return entries.size(); }
  /// Number of nonzero entries.
  std::size_t weight() const noexcept;

  friend bool operator==(const Codeword&, const Codeword&) = default;
};

/// (c_0, ..., c_{n-1}) -> (theta(c_{n-1}), theta(c_0), ..., theta(c_{n-2})).
Codeword theta_shift(const Codeword& c, AutomorphismId theta);

/// Polynomial c_0 + c_1 x + ... + c_{n-1} x^{n-1} in S[x; theta].
SkewPolynomial to_polynomial(const Codeword& c, const PrimeModulus& p, AutomorphismId theta);

/**
 * Skew cyclic code of length n over S: the left S[x; theta]-submodule
 * generated by a monic right divisor g of x^n - 1, i.e. { m * g : deg m < k }
 * with k = n - deg g.
 */
class SkewCyclicCode {
 public:
  const PrimeModulus& modulus() const noexcept { return generator_.modulus(); }
  AutomorphismId theta() const noexcept { return generator_.theta(); }
  std::size_t length() const noexcept { return n_; }
  std::size_t rank() const noexcept { return n_ - static_cast<std::size_t>(generator_.degree()); }
  const SkewPolynomial& generator() const noexcept { return generator_; }

  /// Exponent e with |C| = p^e (e = 3k).
  std::size_t cardinality_exponent() const noexcept { return 3 * rank(); }
  /// p^(3k) if it fits in 64 bits.
  std::optional<std::uint64_t> cardinality() const noexcept;

 private:
  friend SkewCyclicCode build_code(const PrimeModulus&, AutomorphismId, std::size_t, const SkewPolynomial&);
  SkewCyclicCode(std::size_t n, SkewPolynomial g) : n_(n), generator_(std::move(g)) {}

  std::size_t n_;
  SkewPolynomial generator_;
};

/// Validates, in order: context, monic g (NonMonicGenerator), deg g < n
/// (GeneratorDegreeTooLarge), theta_order | n (OrderMismatch), and
/// x^n - 1 = q * g exactly (NotRightDivisor).
SkewCyclicCode build_code(const PrimeModulus& p, AutomorphismId theta, std::size_t n, const SkewPolynomial& g);

/// Coefficients of m * g padded to length n. MessageTooLong if deg m >= k.
Codeword encode(const SkewCyclicCode& code, const SkewPolynomial& message);

/// True iff c has zero remainder under right division by the generator.
bool is_member(const SkewCyclicCode& code, const Codeword& c);

inline constexpr std::uint64_t kDefaultDistanceBudget = std::uint64_t{1} << 24;

/// Minimum weight over all nonzero codewords, by encoding every message.
/// BudgetExceeded if p^(3k) > budget.
std::size_t min_hamming_distance(const SkewCyclicCode& code, std::uint64_t budget = kDefaultDistanceBudget);

}  // namespace skewring

#endif  // SKEWRING_SKEW_CYCLIC_HPP
