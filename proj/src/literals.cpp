#include "skewring/literals.hpp"

#include <charconv>
#include <vector>

namespace skewring {

namespace {

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t");
  return s.substr(first, last - first + 1);
}

std::vector<std::string_view> split(std::string_view s, char sep) {
  std::vector<std::string_view> parts;
  for (;;) {
    const auto pos = s.find(sep);
    parts.push_back(s.substr(0, pos));
    if (pos == std::string_view::npos) break;
    s.remove_prefix(pos + 1);
  }
  return parts;
}

Residue parse_residue(std::string_view field, std::string_view whole, const PrimeModulus& p) {
  field = trim(field);
  std::uint64_t value = 0;
  const auto* end = field.data() + field.size();
  const auto [ptr, ec] = std::from_chars(field.data(), end, value);
  if (field.empty() || ec != std::errc{} || ptr != end) {
    throw ParseError("bad residue '" + std::string(field) + "' in element literal '" + std::string(whole) + "'");
  }
  if (value >= p.value()) {
    throw ParseError("residue " + std::string(field) + " in '" + std::string(whole) + "' is not in [0, " +
                     std::to_string(p.value()) + ")");
  }
  return static_cast<Residue>(value);
}

std::vector<RingElement> parse_sequence(std::string_view text, const PrimeModulus& p) {
  std::vector<RingElement> out;
  for (auto part : split(text, ';')) out.push_back(parse_element(part, p));
  return out;
}

}  // namespace

RingElement parse_element(std::string_view text, const PrimeModulus& p) {
  const auto fields = split(trim(text), ',');
  if (fields.size() != 3) {
    throw ParseError("element literal '" + std::string(text) + "' must have the form a,b,c");
  }
  return {p, parse_residue(fields[0], text, p), parse_residue(fields[1], text, p),
          parse_residue(fields[2], text, p)};
}

SkewPolynomial parse_polynomial(std::string_view text, const PrimeModulus& p, AutomorphismId theta) {
  text = trim(text);
  if (text.empty() || text == "0") return SkewPolynomial::zero(p, theta);
  return {p, theta, parse_sequence(text, p)};
}

Codeword parse_codeword(std::string_view text, const PrimeModulus& p) {
  text = trim(text);
  if (text.empty()) throw ParseError("empty codeword literal");
  return {parse_sequence(text, p)};
}

std::string format_element(const RingElement& z) {
  return std::to_string(z.a()) + ',' + std::to_string(z.b()) + ',' + std::to_string(z.c());
}

std::string format_polynomial(const SkewPolynomial& f) {
  if (f.is_zero()) return "0";
  std::string out;
  for (const auto& c : f.coeffs()) {
    if (!out.empty()) out += ';';
    out += format_element(c);
  }
  return out;
}

std::string format_codeword(const Codeword& c) {
  std::string out;
  for (const auto& e : c.entries) {
    if (!out.empty()) out += ';';
    out += format_element(e);
  }
  return out;
}

std::string pretty(const RingElement& z) {
  if (z.is_zero()) return "0";
  std::string out;
  auto term = [&](Residue coeff, const char* unit) {
    if (coeff == 0) return;
    if (!out.empty()) out += " + ";
    if (coeff != 1 || *unit == '\0') out += std::to_string(coeff);
    out += unit;
  };
  term(z.a(), "");
  term(z.b(), "v");
  term(z.c(), "v^2");
  return out;
}

}  // namespace skewring
