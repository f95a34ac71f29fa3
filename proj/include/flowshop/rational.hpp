#pragma once

#include <cstdint>
#include <string>

namespace flowshop {

// Nonnegative fraction; den >= 1.
struct Rational {
  std::int64_t num = 0;
  std::int64_t den = 1;

  friend bool operator==(const Rational&, const Rational&) = default;
};

// Accepts "p" or "p/q" with nonnegative p and q >= 1.
Rational parse_rational(const std::string& text);

Rational reduced(Rational value);

// Always "p/q", reduced.
std::string to_string(const Rational& value);

}  // namespace flowshop
