#ifndef SKEWRING_RING_HPP
#define SKEWRING_RING_HPP

#include <compare>
#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "skewring/errors.hpp"

/**
 * Exact arithmetic in the finite commutative ring
 *
 *     S = F_p + v F_p + v^2 F_p,   v^3 = v,   p an odd prime,
 *
 * i.e. F_p[v]/(v^3 - v). Elements are stored as canonical residue triples
 * (a, b, c) meaning a + b v + c v^2.
 *
 * Evaluation at v = 0, 1, -1 gives a ring isomorphism S -> F_p^3 (the CRT
 * decomposition); it is used for unit inversion and is exposed as CrtTriple.
 */
namespace skewring {

using Residue = std::uint32_t;

/// An odd prime p. Construction rejects p < 3, even p, composite p, and
/// p >= 2^31 (so residue products fit in 64 bits).
class PrimeModulus {
 public:
  explicit PrimeModulus(std::uint64_t p);

  Residue value() const noexcept { return p_; }
  /// (p + 1) / 2, the inverse of 2.
  Residue half() const noexcept { return half_; }

  Residue reduce(std::int64_t x) const noexcept;
  Residue add(Residue x, Residue y) const noexcept;
  Residue sub(Residue x, Residue y) const noexcept;
  Residue neg(Residue x) const noexcept;
  Residue mul(Residue x, Residue y) const noexcept;

  friend bool operator==(const PrimeModulus&, const PrimeModulus&) = default;
  friend auto operator<=>(const PrimeModulus&, const PrimeModulus&) = default;

 private:
  Residue p_;
  Residue half_;
};

/// Trial-division primality test.
bool is_prime(std::uint64_t n) noexcept;

/// Inverse of x modulo p. Throws NotInvertible when x = 0 (mod p).
Residue fp_inv(Residue x, const PrimeModulus& p);

class RingElement {
 public:
  /// Coefficients are reduced into [0, p), so negative values are accepted.
  RingElement(const PrimeModulus& p, std::int64_t a, std::int64_t b, std::int64_t c);

  static RingElement zero(const PrimeModulus& p) { return {p, 0, 0, 0}; }
  static RingElement one(const PrimeModulus& p) { return {p, 1, 0, 0}; }
  /// The ring generator v.
  static RingElement v(const PrimeModulus& p) { return {p, 0, 1, 0}; }
  static RingElement scalar(const PrimeModulus& p, std::int64_t a) { return {p, a, 0, 0}; }

  Residue a() const noexcept { return a_; }
  Residue b() const noexcept { return b_; }
  Residue c() const noexcept { return c_; }
  const PrimeModulus& modulus() const noexcept { return modulus_; }

  bool is_zero() const noexcept { return a_ == 0 && b_ == 0 && c_ == 0; }

  /// Position of this element in the lexicographic enumeration of S,
  /// (a p + b) p + c.
  std::size_t index() const noexcept;
  static RingElement from_index(const PrimeModulus& p, std::size_t index);

  // Lexicographic in (a, b, c), then modulus.
  friend bool operator==(const RingElement&, const RingElement&) = default;
  friend auto operator<=>(const RingElement&, const RingElement&) = default;

 private:
  Residue a_;
  Residue b_;
  Residue c_;
  PrimeModulus modulus_;
};

RingElement add(const RingElement& x, const RingElement& y);
RingElement sub(const RingElement& x, const RingElement& y);
RingElement neg(const RingElement& x);
/// Product reduced by v^3 = v and v^4 = v^2.
RingElement mul(const RingElement& x, const RingElement& y);
RingElement scale(Residue s, const RingElement& x);

inline RingElement operator+(const RingElement& x, const RingElement& y) { return add(x, y); }
inline RingElement operator-(const RingElement& x, const RingElement& y) { return sub(x, y); }
inline RingElement operator-(const RingElement& x) { return neg(x); }
inline RingElement operator*(const RingElement& x, const RingElement& y) { return mul(x, y); }

/// Which of the three zero-divisor conditions hold for a + b v + c v^2.
struct Classification {
  enum class Kind { zero, zero_divisor, unit };

  Kind kind;
  bool a_vanishes;             // a = 0
  bool alternating_vanishes;   // a - b + c = 0
  bool sum_vanishes;           // a + b + c = 0

  /// "zero", "unit", or "zero divisor (a=0, a+b+c=0)" style text.
  std::string describe() const;
};

Classification classify(const RingElement& z);

/// True iff a = 0 or a - b + c = 0 or a + b + c = 0. Zero counts as a zero
/// divisor here (it annihilates any nonzero element); classify() tells it apart.
bool is_zero_divisor(const RingElement& z);
bool is_unit(const RingElement& z);

/// Multiplicative inverse of a unit. Throws NotInvertible naming the
/// condition that fired.
RingElement inv(const RingElement& z);

/// Values of an element at v = 0, 1, -1.
struct CrtTriple {
  Residue s0;
  Residue s1;
  Residue s2;
  PrimeModulus modulus;

  friend bool operator==(const CrtTriple&, const CrtTriple&) = default;
};

CrtTriple to_crt(const RingElement& z);
RingElement from_crt(const CrtTriple& t);

/// All p^3 elements in lexicographic (index) order.
std::vector<RingElement> all_elements(const PrimeModulus& p);

/// p^3.
std::size_t ring_size(const PrimeModulus& p) noexcept;

}  // namespace skewring

#endif  // SKEWRING_RING_HPP
