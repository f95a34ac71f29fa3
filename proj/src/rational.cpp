#include "flowshop/rational.hpp"

#include <charconv>
#include <numeric>
#include <system_error>

#include "flowshop/errors.hpp"

namespace flowshop {

namespace {

std::int64_t parse_int(std::string_view text, const std::string& whole) {
  std::int64_t value = 0;
  const auto [end, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc{} || end != text.data() + text.size() || value < 0)
    throw ParseError("'" + whole + "' is not a nonnegative fraction");
  return value;
}

}  // namespace

Rational parse_rational(const std::string& text) {
  const auto slash = text.find('/');
  if (slash == std::string::npos) return {parse_int(text, text), 1};
  const Rational value{parse_int(std::string_view(text).substr(0, slash), text),
                       parse_int(std::string_view(text).substr(slash + 1), text)};
  if (value.den == 0) throw ParseError("'" + text + "' has a zero denominator");
  return value;
}

Rational reduced(Rational value) {
  const std::int64_t divisor = std::gcd(value.num, value.den);
  if (divisor > 1) {
    value.num /= divisor;
    value.den /= divisor;
  }
  return value;
}

std::string to_string(const Rational& value) {
  const Rational r = reduced(value);
  return std::to_string(r.num) + "/" + std::to_string(r.den);
}

}  // namespace flowshop
