#include "bicomm/field.hpp"

#include <cctype>

namespace bicomm {

namespace {

bool is_prime(unsigned n) {
  if (n < 2) return false;
  for (unsigned d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

}  // namespace

Field Field::prime(unsigned c) {
  if (c == 2) throw DomainError("characteristic 2 is not supported");
  if (!is_prime(c)) throw DomainError("characteristic must be 0 or an odd prime");
  Field f;
  f.char_ = c;
  return f;
}

Rational Field::reduce(const Rational& a) const {
  if (char_ == 0) {
    Rational r = a;
    r.canonicalize();
    return r;
  }
  Integer den = a.get_den() % char_;
  if (den == 0) throw DomainError("denominator vanishes in characteristic " + std::to_string(char_));
  Integer num = a.get_num() % char_;
  if (num < 0) num += char_;
  // num * den^{-1} mod c
  Integer inv_den;
  Integer c(char_);
  if (mpz_invert(inv_den.get_mpz_t(), den.get_mpz_t(), c.get_mpz_t()) == 0)
    throw DomainError("denominator vanishes in characteristic " + std::to_string(char_));
  if (inv_den < 0) inv_den += char_;
  return Rational((num * inv_den) % char_);
}

Rational Field::add(const Rational& a, const Rational& b) const { return reduce(a + b); }
Rational Field::sub(const Rational& a, const Rational& b) const { return reduce(a - b); }
Rational Field::mul(const Rational& a, const Rational& b) const { return reduce(a * b); }
Rational Field::neg(const Rational& a) const { return reduce(-a); }

Rational Field::inv(const Rational& a) const {
  if (is_zero(a)) throw DomainError("division by zero");
  return reduce(Rational(a.get_den(), a.get_num()));
}

Rational parse_rational(const std::string& text) {
  std::size_t i = 0;
  auto fail = [&](const std::string& m) -> void { throw ParseError(m, i); };
  bool negative = false;
  if (i < text.size() && (text[i] == '-' || text[i] == '+')) {
    negative = text[i] == '-';
    ++i;
  }
  auto digits = [&]() -> std::string {
    std::size_t start = i;
    while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
    if (i == start) fail("expected digits");
    return text.substr(start, i - start);
  };
  std::string num = digits();
  std::string den = "1";
  if (i < text.size() && text[i] == '/') {
    ++i;
    den = digits();
  }
  if (i != text.size()) fail("trailing characters in rational");
  Integer d(den);
  if (d == 0) throw ParseError("zero denominator", text.find('/'));
  Rational r{Integer(num), d};
  r.canonicalize();
  if (negative) r = -r;
  return r;
}

std::string to_string(const Rational& a) {
  return a.get_str();
}

}  // namespace bicomm
