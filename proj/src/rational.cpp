#include "bgeom/rational.hpp"

#include "bgeom/error.hpp"

#include <cctype>

namespace bgeom {

namespace {

Integer parse_integer(std::string_view digits, std::string_view whole) {
  std::string_view body = digits;
  if (!body.empty() && (body.front() == '-' || body.front() == '+')) body.remove_prefix(1);
  if (body.empty()) throw Error(ErrorCode::ParseError, "malformed rational '" + std::string(whole) + "'");
  for (char c : body) {
    if (!std::isdigit(static_cast<unsigned char>(c))) {
      throw Error(ErrorCode::ParseError, "malformed rational '" + std::string(whole) + "'");
    }
  }
  std::string text(digits.front() == '+' ? digits.substr(1) : digits);
  return Integer(text);
}

}  // namespace

Rational parse_rational(std::string_view text) {
  const auto slash = text.find('/');
  if (slash == std::string_view::npos) return Rational(parse_integer(text, text));
  const Integer num = parse_integer(text.substr(0, slash), text);
  const std::string_view den_text = text.substr(slash + 1);
  if (!den_text.empty() && (den_text.front() == '-' || den_text.front() == '+')) {
    throw Error(ErrorCode::ParseError, "denominator must be unsigned in '" + std::string(text) + "'");
  }
  const Integer den = parse_integer(den_text, text);
  if (den == 0) throw Error(ErrorCode::ParseError, "zero denominator in '" + std::string(text) + "'");
  return Rational(num, den);
}

std::string to_string(const Rational& value) {
  return numerator(value).str() + "/" + denominator(value).str();
}

Rational floor(const Rational& value) {
  Integer q = numerator(value) / denominator(value);  // truncates toward zero
  if (value < 0 && Rational(q) != value) q -= 1;
  return Rational(q);
}

}  // namespace bgeom
