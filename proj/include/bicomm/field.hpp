#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <stdexcept>
#include <string>

namespace bicomm {

using Rational = mpq_class;
using Integer = mpz_class;

// Error raised for mathematically invalid inputs (bad signatures, malformed
// expressions, out-of-range truncations, ...).  The CLI maps it to exit 1.
class DomainError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Parse failure with a byte offset into the offending input.
class ParseError : public DomainError {
 public:
  ParseError(const std::string& what, std::size_t position)
      : DomainError(what + " (at offset " + std::to_string(position) + ")"),
        position_(position) {}

  std::size_t position() const { return position_; }

 private:
  std::size_t position_ = 0;
};

// Coefficient field: the rationals (characteristic 0) or a prime field F_c
// with c an odd prime.  Characteristic 2 is rejected; every sign in the
// algebra would collapse and the structure constants degenerate.
//
// Elements are carried as Rational values.  Invariant: prime-field elements
// are kept reduced, i.e. integers in [0, c).
class Field {
 public:
  Field() = default;  // rationals

  static Field rationals() { return Field(); }
  static Field prime(unsigned c);

  unsigned characteristic() const { return char_; }

  // Brings an arbitrary rational into canonical form for this field.
  // In F_c a denominator divisible by c is a DomainError.
  Rational reduce(const Rational& a) const;

  Rational add(const Rational& a, const Rational& b) const;
  Rational sub(const Rational& a, const Rational& b) const;
  Rational mul(const Rational& a, const Rational& b) const;
  Rational neg(const Rational& a) const;
  Rational inv(const Rational& a) const;

  bool is_zero(const Rational& a) const { return sgn(a) == 0; }

  bool operator==(const Field& o) const { return char_ == o.char_; }
  bool operator!=(const Field& o) const { return char_ != o.char_; }

 private:
  unsigned char_ = 0;
};

// Parses "a" or "a/b" with optional leading minus.  Throws ParseError.
Rational parse_rational(const std::string& text);

std::string to_string(const Rational& a);

}  // namespace bicomm
