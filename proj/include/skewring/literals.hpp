#ifndef SKEWRING_LITERALS_HPP
#define SKEWRING_LITERALS_HPP

#include <string>
#include <string_view>

#include "skewring/skew_cyclic.hpp"

// Text forms used on the command line:
//   element     "a,b,c"            canonical decimal residues, a + b v + c v^2
//   polynomial  "e0;e1;...;ed"     ascending degree; "" or "0" is zero
//   codeword    "e0;e1;...;e(n-1)" exactly n elements, zeros kept
namespace skewring {

RingElement parse_element(std::string_view text, const PrimeModulus& p);
SkewPolynomial parse_polynomial(std::string_view text, const PrimeModulus& p, AutomorphismId theta);
Codeword parse_codeword(std::string_view text, const PrimeModulus& p);

std::string format_element(const RingElement& z);
/// "0" for the zero polynomial.
std::string format_polynomial(const SkewPolynomial& f);
std::string format_codeword(const Codeword& c);

/// Human-readable form such as "1 + 2v + v^2" using canonical residues.
std::string pretty(const RingElement& z);

}  // namespace skewring

#endif  // SKEWRING_LITERALS_HPP
