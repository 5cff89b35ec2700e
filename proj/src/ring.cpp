#include "skewring/ring.hpp"

#include <sstream>

namespace skewring {

bool is_prime(std::uint64_t n) noexcept {
  if (n < 2) return false;
  if (n % 2 == 0) return n == 2;
  for (std::uint64_t d = 3; d * d <= n; d += 2) {
    if (n % d == 0) return false;
  }
  return true;
}

PrimeModulus::PrimeModulus(std::uint64_t p) {
  if (p == 2) {
    throw InvalidModulus("p = 2 is not allowed: p must be an odd prime (v and -v coincide, 2 is not invertible)");
  }
  if (!is_prime(p)) {
    throw InvalidModulus("p = " + std::to_string(p) + " is not an odd prime");
  }
  if (p >= (std::uint64_t{1} << 31)) {
    throw InvalidModulus("p = " + std::to_string(p) + " is too large (must be below 2^31)");
  }
  p_ = static_cast<Residue>(p);
  half_ = static_cast<Residue>((p + 1) / 2);
}

Residue PrimeModulus::reduce(std::int64_t x) const noexcept {
  auto r = x % static_cast<std::int64_t>(p_);
  if (r < 0) r += p_;
  return static_cast<Residue>(r);
}

Residue PrimeModulus::add(Residue x, Residue y) const noexcept {
  auto s = static_cast<std::uint64_t>(x) + y;
  return static_cast<Residue>(s >= p_ ? s - p_ : s);
}

Residue PrimeModulus::sub(Residue x, Residue y) const noexcept {
  return x >= y ? x - y : static_cast<Residue>(static_cast<std::uint64_t>(x) + p_ - y);
}

Residue PrimeModulus::neg(Residue x) const noexcept { return x == 0 ? 0 : p_ - x; }

Residue PrimeModulus::mul(Residue x, Residue y) const noexcept {
  return static_cast<Residue>(static_cast<std::uint64_t>(x) * y % p_);
}

Residue fp_inv(Residue x, const PrimeModulus& p) {
  x %= p.value();
  if (x == 0) throw NotInvertible("0 has no inverse modulo " + std::to_string(p.value()));
  // Extended Euclid on (x, p).
  std::int64_t r0 = p.value(), r1 = x;
  std::int64_t t0 = 0, t1 = 1;
  while (r1 != 0) {
    auto q = r0 / r1;
    auto r2 = r0 - q * r1;
    r0 = r1;
    r1 = r2;
    auto t2 = t0 - q * t1;
    t0 = t1;
    t1 = t2;
  }
  return p.reduce(t0);
}

RingElement::RingElement(const PrimeModulus& p, std::int64_t a, std::int64_t b, std::int64_t c)
    : a_(p.reduce(a)), b_(p.reduce(b)), c_(p.reduce(c)), modulus_(p) {}

std::size_t RingElement::index() const noexcept {
  std::size_t p = modulus_.value();
  return (a_ * p + b_) * p + c_;
}

RingElement RingElement::from_index(const PrimeModulus& p, std::size_t index) {
  std::size_t n = p.value();
  return RingElement(p, static_cast<std::int64_t>(index / (n * n)),
                     static_cast<std::int64_t>(index / n % n), static_cast<std::int64_t>(index % n));
}

namespace {

const PrimeModulus& common_modulus(const RingElement& x, const RingElement& y) {
  if (x.modulus() != y.modulus()) {
    throw ModulusMismatch("ring elements over p = " + std::to_string(x.modulus().value()) + " and p = " +
                          std::to_string(y.modulus().value()));
  }
  return x.modulus();
}

}  // namespace

RingElement add(const RingElement& x, const RingElement& y) {
  const auto& m = common_modulus(x, y);
  return {m, m.add(x.a(), y.a()), m.add(x.b(), y.b()), m.add(x.c(), y.c())};
}

RingElement sub(const RingElement& x, const RingElement& y) {
  const auto& m = common_modulus(x, y);
  return {m, m.sub(x.a(), y.a()), m.sub(x.b(), y.b()), m.sub(x.c(), y.c())};
}

RingElement neg(const RingElement& x) {
  const auto& m = x.modulus();
  return {m, m.neg(x.a()), m.neg(x.b()), m.neg(x.c())};
}

RingElement scale(Residue s, const RingElement& x) {
  const auto& m = x.modulus();
  return {m, m.mul(s, x.a()), m.mul(s, x.b()), m.mul(s, x.c())};
}

RingElement mul(const RingElement& x, const RingElement& y) {
  const auto& m = common_modulus(x, y);
  // Full product in v, degrees 0..4.
  const std::uint64_t p = m.value();
  const std::uint64_t xa = x.a(), xb = x.b(), xc = x.c();
  const std::uint64_t ya = y.a(), yb = y.b(), yc = y.c();
  const std::uint64_t d0 = xa * ya % p;
  const std::uint64_t d1 = (xa * yb + xb * ya) % p;
  const std::uint64_t d2 = (xa * yc + xb * yb % p + xc * ya) % p;
  const std::uint64_t d3 = (xb * yc + xc * yb) % p;
  const std::uint64_t d4 = xc * yc % p;
  // v^3 -> v, v^4 -> v^2.
  return {m, static_cast<std::int64_t>(d0), static_cast<std::int64_t>((d1 + d3) % p),
          static_cast<std::int64_t>((d2 + d4) % p)};
}

std::string Classification::describe() const {
  switch (kind) {
    case Kind::zero:
      return "zero";
    case Kind::unit:
      return "unit";
    case Kind::zero_divisor:
      break;
  }
  std::string conditions;
  auto append = [&](const char* text) {
    if (!conditions.empty()) conditions += ", ";
    conditions += text;
  };
  if (a_vanishes) append("a=0");
  if (alternating_vanishes) append("a-b+c=0");
  if (sum_vanishes) append("a+b+c=0");
  return "zero divisor (" + conditions + ")";
}

Classification classify(const RingElement& z) {
  const auto t = to_crt(z);
  Classification result{};
  result.a_vanishes = t.s0 == 0;
  result.sum_vanishes = t.s1 == 0;
  result.alternating_vanishes = t.s2 == 0;
  if (z.is_zero()) {
    result.kind = Classification::Kind::zero;
  } else if (result.a_vanishes || result.sum_vanishes || result.alternating_vanishes) {
    result.kind = Classification::Kind::zero_divisor;
  } else {
    result.kind = Classification::Kind::unit;
  }
  return result;
}

bool is_zero_divisor(const RingElement& z) { return classify(z).kind != Classification::Kind::unit; }

bool is_unit(const RingElement& z) { return classify(z).kind == Classification::Kind::unit; }

RingElement inv(const RingElement& z) {
  const auto cls = classify(z);
  if (cls.kind != Classification::Kind::unit) {
    std::ostringstream msg;
    msg << z.a() << ',' << z.b() << ',' << z.c() << " is not invertible: " << cls.describe();
    throw NotInvertible(msg.str());
  }
  const auto t = to_crt(z);
  const auto& m = z.modulus();
  return from_crt({fp_inv(t.s0, m), fp_inv(t.s1, m), fp_inv(t.s2, m), m});
}

CrtTriple to_crt(const RingElement& z) {
  const auto& m = z.modulus();
  const auto a = z.a(), b = z.b(), c = z.c();
  return {a, m.add(m.add(a, b), c), m.add(m.sub(a, b), c), m};
}

RingElement from_crt(const CrtTriple& t) {
  const auto& m = t.modulus;
  const auto h = m.half();
  const auto b = m.mul(m.sub(t.s1, t.s2), h);
  const auto c = m.sub(m.mul(m.add(t.s1, t.s2), h), t.s0);
  return {m, t.s0, b, c};
}

std::size_t ring_size(const PrimeModulus& p) noexcept {
  std::size_t n = p.value();
  return n * n * n;
}

std::vector<RingElement> all_elements(const PrimeModulus& p) {
  std::vector<RingElement> out;
  const auto n = ring_size(p);
  out.reserve(n);
  for (std::size_t i = 0; i < n; ++i) out.push_back(RingElement::from_index(p, i));
  return out;
}

}  // namespace skewring
