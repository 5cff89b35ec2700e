#include "skewring/skew_poly.hpp"

#include <stdexcept>
#include <string>

namespace skewring {

int theta_order(AutomorphismId id) { return reference_group_table().order(id); }

RingElement theta_power_apply(AutomorphismId id, std::size_t k, const RingElement& z) {
  k %= static_cast<std::size_t>(theta_order(id));
  auto result = z;
  for (std::size_t i = 0; i < k; ++i) result = theta_apply(id, result);
  return result;
}

SkewPolynomial::SkewPolynomial(const PrimeModulus& p, AutomorphismId theta, std::vector<RingElement> coeffs)
    : modulus_(p), theta_(theta), coeffs_(std::move(coeffs)) {
  for (const auto& c : coeffs_) {
    if (c.modulus() != p) {
      throw ModulusMismatch("coefficient over p = " + std::to_string(c.modulus().value()) +
                            " in a polynomial over p = " + std::to_string(p.value()));
    }
  }
  while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
}

SkewPolynomial SkewPolynomial::one(const PrimeModulus& p, AutomorphismId theta) {
  return {p, theta, {RingElement::one(p)}};
}

SkewPolynomial SkewPolynomial::monomial(const RingElement& c, std::size_t k, AutomorphismId theta) {
  const auto& p = c.modulus();
  std::vector<RingElement> coeffs(k + 1, RingElement::zero(p));
  coeffs[k] = c;
  return {p, theta, std::move(coeffs)};
}

SkewPolynomial SkewPolynomial::x_pow_minus_one(const PrimeModulus& p, AutomorphismId theta, std::size_t n) {
  std::vector<RingElement> coeffs(n + 1, RingElement::zero(p));
  coeffs[0] = -RingElement::one(p);
  coeffs[n] = coeffs[n] + RingElement::one(p);
  return {p, theta, std::move(coeffs)};
}

RingElement SkewPolynomial::coeff(std::size_t i) const {
  return i < coeffs_.size() ? coeffs_[i] : RingElement::zero(modulus_);
}

const RingElement& SkewPolynomial::leading() const {
  if (coeffs_.empty()) throw std::logic_error("zero polynomial has no leading coefficient");
  return coeffs_.back();
}

bool SkewPolynomial::is_monic() const { return !is_zero() && leading() == RingElement::one(modulus_); }

namespace {

void check_context(const SkewPolynomial& f, const SkewPolynomial& g) {
  if (f.modulus() != g.modulus() || f.theta() != g.theta()) {
    throw ContextMismatch("skew polynomials over (p = " + std::to_string(f.modulus().value()) +
                          ", theta_" + std::to_string(f.theta().value()) + ") and (p = " +
                          std::to_string(g.modulus().value()) + ", theta_" + std::to_string(g.theta().value()) +
                          ")");
  }
}

}  // namespace

SkewPolynomial skew_add(const SkewPolynomial& f, const SkewPolynomial& g) {
  check_context(f, g);
  const auto n = std::max(f.coeffs().size(), g.coeffs().size());
  std::vector<RingElement> sum;
  sum.reserve(n);
  for (std::size_t i = 0; i < n; ++i) sum.push_back(f.coeff(i) + g.coeff(i));
  return {f.modulus(), f.theta(), std::move(sum)};
}

SkewPolynomial skew_neg(const SkewPolynomial& f) {
  std::vector<RingElement> out;
  out.reserve(f.coeffs().size());
  for (const auto& c : f.coeffs()) out.push_back(-c);
  return {f.modulus(), f.theta(), std::move(out)};
}

SkewPolynomial skew_sub(const SkewPolynomial& f, const SkewPolynomial& g) { return skew_add(f, skew_neg(g)); }

SkewPolynomial skew_mul(const SkewPolynomial& f, const SkewPolynomial& g) {
  check_context(f, g);
  if (f.is_zero() || g.is_zero()) return SkewPolynomial::zero(f.modulus(), f.theta());
  const auto fc = f.coeffs();
  const auto gc = g.coeffs();
  std::vector<RingElement> product(fc.size() + gc.size() - 1, RingElement::zero(f.modulus()));
  std::vector<RingElement> twisted(gc.begin(), gc.end());  // theta^i(g_j)
  for (std::size_t i = 0; i < fc.size(); ++i) {
    if (i > 0) {
      for (auto& c : twisted) c = theta_apply(f.theta(), c);
    }
    if (fc[i].is_zero()) continue;
    for (std::size_t j = 0; j < gc.size(); ++j) product[i + j] = product[i + j] + fc[i] * twisted[j];
  }
  return {f.modulus(), f.theta(), std::move(product)};
}

DivMod skew_right_divmod(const SkewPolynomial& f, const SkewPolynomial& g) {
  check_context(f, g);
  if (g.is_zero()) throw NotDivisible("division by the zero polynomial");
  if (!is_unit(g.leading())) {
    const auto& lc = g.leading();
    throw NotDivisible("divisor leading coefficient " + std::to_string(lc.a()) + ',' + std::to_string(lc.b()) +
                       ',' + std::to_string(lc.c()) + " is not a unit: " + classify(lc).describe());
  }
  const auto& p = f.modulus();
  const auto theta = f.theta();
  const auto dg = static_cast<std::size_t>(g.degree());
  auto quotient = SkewPolynomial::zero(p, theta);
  auto remainder = f;
  while (remainder.degree() >= g.degree()) {
    // Kill the leading term of the remainder with c x^k * g, whose leading
    // coefficient is c * theta^k(lc(g)).
    const auto k = static_cast<std::size_t>(remainder.degree()) - dg;
    const auto c = remainder.leading() * inv(theta_power_apply(theta, k, g.leading()));
    const auto step = SkewPolynomial::monomial(c, k, theta);
    quotient = quotient + step;
    remainder = remainder - step * g;
  }
  return {std::move(quotient), std::move(remainder)};
}

}  // namespace skewring
