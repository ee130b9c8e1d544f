#include "clusterkit/rational.hpp"

#include <cctype>
#include <stdexcept>

namespace clusterkit {

namespace {

BigInt parse_big(const std::string& s) {
  if (s.empty()) throw std::invalid_argument("rational: empty component");
  std::size_t start = (s[0] == '-' || s[0] == '+') ? 1 : 0;
  if (start == s.size())
    throw std::invalid_argument("rational: missing digits in '" + s + "'");
  for (std::size_t i = start; i < s.size(); ++i)
    if (!std::isdigit(static_cast<unsigned char>(s[i])))
      throw std::invalid_argument("rational: invalid character in '" + s +
                                  "' (decimals are not accepted, use a/b)");
  return BigInt(s);
}

}  // namespace

Rational parse_rational(const std::string& text) {
  auto slash = text.find('/');
  if (slash == std::string::npos) return Rational(parse_big(text));
  BigInt num = parse_big(text.substr(0, slash));
  BigInt den = parse_big(text.substr(slash + 1));
  if (den == 0) throw std::invalid_argument("rational: zero denominator");
  return Rational(num, den);
}

std::string format_rational(const Rational& q) {
  return numerator(q).str() + "/" + denominator(q).str();
}

BigInt ceil_rational(const Rational& q) {
  BigInt num = numerator(q);
  BigInt den = denominator(q);
  BigInt d = num / den;  // truncation; exact already for negatives
  if (num > 0 && num % den != 0) d += 1;
  return d;
}

Rational rational_pow(const Rational& q, std::uint64_t e) {
  Rational result(1);
  Rational base = q;
  while (e > 0) {
    if (e & 1) result *= base;
    base *= base;
    e >>= 1;
  }
  return result;
}

}  // namespace clusterkit
