#ifndef SKEWRING_SKEW_POLY_HPP
#define SKEWRING_SKEW_POLY_HPP

#include <cstddef>
#include <span>
#include <vector>

#include "skewring/automorphisms.hpp"
#include "skewring/ring.hpp"

namespace skewring {

/// Order of theta_id in the automorphism group.
int theta_order(AutomorphismId id);

/// theta^k(z), with k reduced modulo theta_order(id).
RingElement theta_power_apply(AutomorphismId id, std::size_t k, const RingElement& z);

/**
 * Element of the skew polynomial ring S[x; theta]: usual addition, product
 * determined by  a x^i * b x^j = a theta^i(b) x^(i+j).
 *
 * Coefficients are dense and ascending; trailing zeros are stripped so the
 * zero polynomial has no coefficients and degree -1.
 */
class SkewPolynomial {
 public:
  SkewPolynomial(const PrimeModulus& p, AutomorphismId theta, std::vector<RingElement> coeffs = {});

  static SkewPolynomial zero(const PrimeModulus& p, AutomorphismId theta) { return {p, theta}; }
  static SkewPolynomial one(const PrimeModulus& p, AutomorphismId theta);
  /// c x^k.
  static SkewPolynomial monomial(const RingElement& c, std::size_t k, AutomorphismId theta);
  /// x^n - 1.
  static SkewPolynomial x_pow_minus_one(const PrimeModulus& p, AutomorphismId theta, std::size_t n);

  const PrimeModulus& modulus() const noexcept { return modulus_; }
  AutomorphismId theta() const noexcept { return theta_; }
  std::span<const RingElement> coeffs() const noexcept { return coeffs_; }

  bool is_zero() const noexcept { return coeffs_.empty(); }
  /// -1 for the zero polynomial.
  std::ptrdiff_t degree() const noexcept { return static_cast<std::ptrdiff_t>(coeffs_.size()) - 1; }
  /// Coefficient of x^i; zero beyond the degree.
  RingElement coeff(std::size_t i) const;
  /// Throws std::logic_error on the zero polynomial.
  const RingElement& leading() const;
  bool is_monic() const;

  friend bool operator==(const SkewPolynomial&, const SkewPolynomial&) = default;

 private:
  PrimeModulus modulus_;
  AutomorphismId theta_;
  std::vector<RingElement> coeffs_;
};

SkewPolynomial skew_add(const SkewPolynomial& f, const SkewPolynomial& g);
SkewPolynomial skew_sub(const SkewPolynomial& f, const SkewPolynomial& g);
SkewPolynomial skew_neg(const SkewPolynomial& f);
SkewPolynomial skew_mul(const SkewPolynomial& f, const SkewPolynomial& g);

inline SkewPolynomial operator+(const SkewPolynomial& f, const SkewPolynomial& g) { return skew_add(f, g); }
inline SkewPolynomial operator-(const SkewPolynomial& f, const SkewPolynomial& g) { return skew_sub(f, g); }
inline SkewPolynomial operator-(const SkewPolynomial& f) { return skew_neg(f); }
inline SkewPolynomial operator*(const SkewPolynomial& f, const SkewPolynomial& g) { return skew_mul(f, g); }

struct DivMod {
  SkewPolynomial quotient;
  SkewPolynomial remainder;
};

/// Right division: f = quotient * g + remainder with deg remainder < deg g.
/// g must be nonzero with a unit leading coefficient, else NotDivisible.
DivMod skew_right_divmod(const SkewPolynomial& f, const SkewPolynomial& g);

}  // namespace skewring

#endif  // SKEWRING_SKEW_POLY_HPP
