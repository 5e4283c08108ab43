#include "transtat/rational.hpp"

#include <cctype>

#include "transtat/errors.hpp"

namespace transtat {

namespace {

bool looks_like_integer(const std::string& s) {
  if (s.empty()) return false;
  std::size_t start = (s[0] == '-' || s[0] == '+') ? 1 : 0;
  if (start == s.size()) return false;
  for (std::size_t i = start; i < s.size(); ++i) {
    if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
  }
  return true;
}

}  // namespace

Rational parse_rational(const std::string& text) {
  const auto slash = text.find('/');
  const std::string num_part = text.substr(0, slash);
  const std::string den_part =
      slash == std::string::npos ? std::string("1") : text.substr(slash + 1);
  if (!looks_like_integer(num_part) || !looks_like_integer(den_part)) {
    throw ParseError("invalid rational literal '" + text + "'");
  }
  const Integer num(num_part);
  const Integer den(den_part);
  if (den == 0) {
    throw ParseError("zero denominator in rational literal '" + text + "'");
  }
  // Division canonicalizes (lowest terms, positive denominator); the GMP
  // string constructor would not.
  return Rational(num) / Rational(den);
}

std::string rational_to_string(const Rational& value) { return value.str(); }

}  // namespace transtat
