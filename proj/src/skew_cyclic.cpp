#include "skewring/skew_cyclic.hpp"

#include <algorithm>
#include <string>

namespace skewring {

std::size_t Codeword::weight() const noexcept {
  return static_cast<std::size_t>(
      std::count_if(entries.begin(), entries.end(), [](const RingElement& e) { return !e.is_zero(); }));
}

Codeword theta_shift(const Codeword& c, AutomorphismId theta) {
  Codeword out;
  out.entries.reserve(c.length());
  if (c.entries.empty()) return out;
  out.entries.push_back(theta_apply(theta, c.entries.back()));
  for (std::size_t i = 0; i + 1 < c.length(); ++i) out.entries.push_back(theta_apply(theta, c.entries[i]));
  return out;
}

SkewPolynomial to_polynomial(const Codeword& c, const PrimeModulus& p, AutomorphismId theta) {
  return {p, theta, c.entries};
}

namespace {

// p^e, or nullopt on overflow.
std::optional<std::uint64_t> checked_power(std::uint64_t p, std::size_t e) {
  std::uint64_t result = 1;
  for (std::size_t i = 0; i < e; ++i) {
    if (result > UINT64_MAX / p) return std::nullopt;
    result *= p;
  }
  return result;
}

}  // namespace

std::optional<std::uint64_t> SkewCyclicCode::cardinality() const noexcept {
  return checked_power(modulus().value(), cardinality_exponent());
}

SkewCyclicCode build_code(const PrimeModulus& p, AutomorphismId theta, std::size_t n, const SkewPolynomial& g) {
  if (g.modulus() != p || g.theta() != theta) {
    throw ContextMismatch("generator context (p = " + std::to_string(g.modulus().value()) + ", theta_" +
                          std::to_string(g.theta().value()) + ") differs from the code context");
  }
  if (!g.is_monic()) {
    throw NonMonicGenerator(g.is_zero() ? std::string("generator is the zero polynomial")
                                        : "generator leading coefficient is " + std::to_string(g.leading().a()) +
                                              ',' + std::to_string(g.leading().b()) + ',' +
                                              std::to_string(g.leading().c()) + ", expected 1,0,0");
  }
  if (static_cast<std::size_t>(g.degree()) >= n) {
    throw GeneratorDegreeTooLarge("generator degree " + std::to_string(g.degree()) + " must be below n = " +
                                  std::to_string(n));
  }
  const auto order = static_cast<std::size_t>(theta_order(theta));
  if (n % order != 0) {
    throw OrderMismatch("theta_" + std::to_string(theta.value()) + " has order " + std::to_string(order) +
                        ", which does not divide n = " + std::to_string(n));
  }
  const auto division = skew_right_divmod(SkewPolynomial::x_pow_minus_one(p, theta, n), g);
  if (!division.remainder.is_zero()) {
    throw NotRightDivisor("generator is not a right divisor of x^" + std::to_string(n) +
                          " - 1 (nonzero remainder of degree " + std::to_string(division.remainder.degree()) + ")");
  }
  return SkewCyclicCode(n, g);
}

Codeword encode(const SkewCyclicCode& code, const SkewPolynomial& message) {
  if (message.degree() >= static_cast<std::ptrdiff_t>(code.rank())) {
    throw MessageTooLong("message degree " + std::to_string(message.degree()) + " must be below k = " +
                         std::to_string(code.rank()));
  }
  const auto product = skew_mul(message, code.generator());
  Codeword out;
  out.entries.reserve(code.length());
  for (std::size_t i = 0; i < code.length(); ++i) out.entries.push_back(product.coeff(i));
  return out;
}

bool is_member(const SkewCyclicCode& code, const Codeword& c) {
  if (c.length() != code.length()) {
    throw LengthMismatch("codeword length " + std::to_string(c.length()) + " differs from n = " +
                         std::to_string(code.length()));
  }
  const auto poly = to_polynomial(c, code.modulus(), code.theta());
  return skew_right_divmod(poly, code.generator()).remainder.is_zero();
}

std::size_t min_hamming_distance(const SkewCyclicCode& code, std::uint64_t budget) {
  const auto size = code.cardinality();
  if (!size || *size > budget) {
    throw BudgetExceeded("exhaustive distance needs " + std::to_string(code.modulus().value()) + "^" +
                         std::to_string(code.cardinality_exponent()) + " codewords, budget is " +
                         std::to_string(budget));
  }
  const auto& p = code.modulus();
  const auto k = code.rank();
  const auto ring_elements = ring_size(p);
  // Mixed-radix counter over message coefficients, each an element index.
  std::vector<std::size_t> digits(k, 0);
  std::size_t best = code.length();
  for (;;) {
    std::size_t i = 0;
    while (i < k && ++digits[i] == ring_elements) digits[i++] = 0;
    if (i == k) break;
    std::vector<RingElement> coeffs;
    coeffs.reserve(k);
    for (auto d : digits) coeffs.push_back(RingElement::from_index(p, d));
    const auto word = encode(code, SkewPolynomial(p, code.theta(), std::move(coeffs)));
    best = std::min(best, word.weight());
    if (best == 1) break;
  }
  return best;
}

}  // namespace skewring
