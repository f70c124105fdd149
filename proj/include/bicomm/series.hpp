#pragma once

#include <map>
#include <string>
#include <vector>

#include "bicomm/algebra.hpp"

namespace bicomm {

// Sparse polynomial with integer coefficients in a fixed list of variables;
// keys are exponent vectors.
class MultiPoly {
 public:
  using TermMap = std::map<std::vector<unsigned>, Integer>;

  explicit MultiPoly(unsigned nvars) : nvars_(nvars) {}

  static MultiPoly constant(unsigned nvars, const Integer& c);
  static MultiPoly variable(unsigned nvars, unsigned i);

  unsigned nvars() const { return nvars_; }
  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  void add_term(std::vector<unsigned> exp, const Integer& c);
  Integer coefficient(const std::vector<unsigned>& exp) const;
  unsigned total_degree() const;

  friend MultiPoly add(const MultiPoly& a, const MultiPoly& b);
  friend MultiPoly sub(const MultiPoly& a, const MultiPoly& b);
  friend MultiPoly mul(const MultiPoly& a, const MultiPoly& b);

  friend bool operator==(const MultiPoly& a, const MultiPoly& b) {
    return a.nvars_ == b.nvars_ && a.terms_ == b.terms_;
  }

 private:
  unsigned nvars_;
  TermMap terms_;
};

// Drops every term of total degree above cap.
MultiPoly mul_capped(const MultiPoly& a, const MultiPoly& b, unsigned cap);
MultiPoly pow(const MultiPoly& a, unsigned e);

// One factor (1 - x^exponents)^power of a series denominator.
struct DenomFactor {
  std::vector<unsigned> exponents;
  unsigned power = 1;
};

// numerator / prod (1 - x^e)^power, with the coefficient expansion up to
// total degree `trunc` cached eagerly at construction.
class RationalSeries {
 public:
  RationalSeries(std::vector<std::string> variables, MultiPoly numerator,
                 std::vector<DenomFactor> denominator, unsigned trunc);

  const std::vector<std::string>& variables() const { return vars_; }
  const MultiPoly& numerator() const { return numer_; }
  const std::vector<DenomFactor>& denominator() const { return denom_; }
  unsigned truncation() const { return trunc_; }

  // Nonzero coefficients of total degree <= trunc.
  const MultiPoly::TermMap& coefficients() const { return cache_; }
  // Throws DomainError beyond the truncation bound.
  Integer coefficient(const std::vector<unsigned>& exp) const;

 private:
  std::vector<std::string> vars_;
  MultiPoly numer_;
  std::vector<DenomFactor> denom_;
  unsigned trunc_;
  MultiPoly::TermMap cache_;
};

enum class Grading { total, bi, multi };

// Hilbert series of the free algebra over sig.  Variables: "t" (total),
// "u"/"v" (bi: even/odd degree), or u1..up, v1..vq (multi).  Truncation is
// capped at 64 (total, bi) and 16 (multi).
RationalSeries hilbert_free(const Signature& sig, Grading grading, unsigned trunc = 12);

// Dimension of the multigraded component; k counts each y_i, l each z_j.
Integer dim_component(const Signature& sig, const std::vector<unsigned>& k,
                      const std::vector<unsigned>& l);
// Dimension of the component of even degree k, odd degree l.
Integer dim_component_bi(const Signature& sig, unsigned k, unsigned l);
// Dimension of the component of total degree n.
Integer dim_component_total(const Signature& sig, unsigned n);

// Dimension of the multilinear part in p even and q odd variables.
Integer codimension_super(unsigned p, unsigned q);
// Ordinary n-th codimension (sum over the super ones against binomials).
Integer codimension_ordinary(unsigned n);

// Order of the pole at t = 1 of a univariate series, after cancelling the
// (1 - t)-content of the numerator.
unsigned pole_order_at_one(const RationalSeries& s);

// Gelfand-Kirillov dimension of the free algebra: the pole order of its
// total-degree Hilbert series at t = 1.
unsigned gk_dimension_free(const Signature& sig);

}  // namespace bicomm
