#include "bicomm/series.hpp"

#include <algorithm>
#include <numeric>

namespace bicomm {

namespace {

unsigned exp_degree(const std::vector<unsigned>& e) {
  return std::accumulate(e.begin(), e.end(), 0u);
}

}  // namespace

MultiPoly MultiPoly::constant(unsigned nvars, const Integer& c) {
  MultiPoly f(nvars);
  f.add_term(std::vector<unsigned>(nvars, 0), c);
  return f;
}

MultiPoly MultiPoly::variable(unsigned nvars, unsigned i) {
  if (i >= nvars) throw DomainError("variable index out of range");
  MultiPoly f(nvars);
  std::vector<unsigned> e(nvars, 0);
  e[i] = 1;
  f.add_term(std::move(e), 1);
  return f;
}

void MultiPoly::add_term(std::vector<unsigned> exp, const Integer& c) {
  if (exp.size() != nvars_) throw DomainError("exponent arity mismatch");
  if (c == 0) return;
  auto [it, fresh] = terms_.emplace(std::move(exp), c);
  if (!fresh) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

Integer MultiPoly::coefficient(const std::vector<unsigned>& exp) const {
  auto it = terms_.find(exp);
  return it == terms_.end() ? Integer(0) : it->second;
}

unsigned MultiPoly::total_degree() const {
  unsigned d = 0;
  for (const auto& [e, c] : terms_) d = std::max(d, exp_degree(e));
  return d;
}

MultiPoly add(const MultiPoly& a, const MultiPoly& b) {
  if (a.nvars_ != b.nvars_) throw DomainError("variable arity mismatch");
  MultiPoly r = a;
  for (const auto& [e, c] : b.terms_) r.add_term(e, c);
  return r;
}

MultiPoly sub(const MultiPoly& a, const MultiPoly& b) {
  if (a.nvars_ != b.nvars_) throw DomainError("variable arity mismatch");
  MultiPoly r = a;
  for (const auto& [e, c] : b.terms_) r.add_term(e, -c);
  return r;
}

MultiPoly mul(const MultiPoly& a, const MultiPoly& b) {
  if (a.nvars_ != b.nvars_) throw DomainError("variable arity mismatch");
  MultiPoly r(a.nvars_);
  for (const auto& [ea, ca] : a.terms_) {
    for (const auto& [eb, cb] : b.terms_) {
      std::vector<unsigned> e(a.nvars_);
      for (unsigned i = 0; i < a.nvars_; ++i) e[i] = ea[i] + eb[i];
      r.add_term(std::move(e), ca * cb);
    }
  }
  return r;
}

MultiPoly mul_capped(const MultiPoly& a, const MultiPoly& b, unsigned cap) {
  if (a.nvars() != b.nvars()) throw DomainError("variable arity mismatch");
  MultiPoly r(a.nvars());
  for (const auto& [ea, ca] : a.terms()) {
    unsigned da = exp_degree(ea);
    if (da > cap) continue;
    for (const auto& [eb, cb] : b.terms()) {
      if (da + exp_degree(eb) > cap) continue;
      std::vector<unsigned> e(a.nvars());
      for (unsigned i = 0; i < a.nvars(); ++i) e[i] = ea[i] + eb[i];
      r.add_term(std::move(e), ca * cb);
    }
  }
  return r;
}

MultiPoly pow(const MultiPoly& a, unsigned e) {
  MultiPoly r = MultiPoly::constant(a.nvars(), 1);
  for (unsigned i = 0; i < e; ++i) r = mul(r, a);
  return r;
}

RationalSeries::RationalSeries(std::vector<std::string> variables, MultiPoly numerator,
                               std::vector<DenomFactor> denominator, unsigned trunc)
    : vars_(std::move(variables)),
      numer_(std::move(numerator)),
      denom_(std::move(denominator)),
      trunc_(trunc) {
  unsigned n = static_cast<unsigned>(vars_.size());
  if (numer_.nvars() != n) throw DomainError("numerator arity mismatch");
  for (const DenomFactor& f : denom_) {
    if (f.exponents.size() != n) throw DomainError("denominator arity mismatch");
    if (exp_degree(f.exponents) == 0)
      throw DomainError("denominator factor must have positive degree");
    if (f.power == 0) throw DomainError("denominator factor power must be >= 1");
  }
  // Guard the cache size: C(trunc + n, n) entries at most.
  Integer bound;
  mpz_bin_uiui(bound.get_mpz_t(), trunc_ + n, n);
  if (bound > 4000000) throw DomainError("truncation too large for this arity");

  // Expand: numerator times the geometric expansion of each factor.
  MultiPoly acc(n);
  for (const auto& [e, c] : numer_.terms())
    if (exp_degree(e) <= trunc_) acc.add_term(e, c);
  for (const DenomFactor& f : denom_) {
    unsigned step = exp_degree(f.exponents);
    MultiPoly geo(n);
    for (unsigned j = 0; j * step <= trunc_; ++j) {
      // 1/(1-m)^r = sum_j C(j+r-1, r-1) m^j
      Integer c;
      mpz_bin_uiui(c.get_mpz_t(), j + f.power - 1, f.power - 1);
      std::vector<unsigned> e(n);
      for (unsigned i = 0; i < n; ++i) e[i] = f.exponents[i] * j;
      geo.add_term(std::move(e), c);
    }
    acc = mul_capped(acc, geo, trunc_);
  }
  cache_ = acc.terms();
}

Integer RationalSeries::coefficient(const std::vector<unsigned>& exp) const {
  if (exp.size() != vars_.size()) throw DomainError("exponent arity mismatch");
  if (exp_degree(exp) > trunc_)
    throw DomainError("coefficient requested beyond truncation");
  auto it = cache_.find(exp);
  return it == cache_.end() ? Integer(0) : it->second;
}

namespace {

// C(k + m - 1, k): monomials of degree k in m commuting variables.
Integer multichoose(unsigned m, unsigned k) {
  if (m == 0) return k == 0 ? 1 : 0;
  Integer r;
  mpz_bin_uiui(r.get_mpz_t(), k + m - 1, k);
  return r;
}

Integer binom(unsigned n, unsigned k) {
  Integer r;
  mpz_bin_uiui(r.get_mpz_t(), n, k);
  return r;
}

}  // namespace

RationalSeries hilbert_free(const Signature& sig, Grading grading, unsigned trunc) {
  unsigned p = sig.p, q = sig.q;
  switch (grading) {
    case Grading::total: {
      if (trunc > 64) throw DomainError("truncation above 64 is not supported");
      MultiPoly t = MultiPoly::variable(1, 0);
      MultiPoly one = MultiPoly::constant(1, 1);
      MultiPoly n = add(mul(MultiPoly::constant(1, p + q),
                            mul(t, pow(sub(one, t), 2 * p))),
                        pow(sub(pow(add(one, t), q), pow(sub(one, t), p)), 2));
      std::vector<DenomFactor> d;
      if (p > 0) d.push_back({{1}, 2 * p});
      return RationalSeries({"t"}, std::move(n), std::move(d), trunc);
    }
    case Grading::bi: {
      if (trunc > 64) throw DomainError("truncation above 64 is not supported");
      MultiPoly u = MultiPoly::variable(2, 0);
      MultiPoly v = MultiPoly::variable(2, 1);
      MultiPoly one = MultiPoly::constant(2, 1);
      MultiPoly lin = add(mul(MultiPoly::constant(2, p), u),
                          mul(MultiPoly::constant(2, q), v));
      MultiPoly n = add(mul(lin, pow(sub(one, u), 2 * p)),
                        pow(sub(pow(add(one, v), q), pow(sub(one, u), p)), 2));
      std::vector<DenomFactor> d;
      if (p > 0) d.push_back({{1, 0}, 2 * p});
      return RationalSeries({"u", "v"}, std::move(n), std::move(d), trunc);
    }
    case Grading::multi: {
      if (trunc > 16) throw DomainError("truncation above 16 is not supported for the multigrading");
      unsigned nv = p + q;
      std::vector<std::string> names;
      for (unsigned i = 1; i <= p; ++i) names.push_back("u" + std::to_string(i));
      for (unsigned j = 1; j <= q; ++j) names.push_back("v" + std::to_string(j));
      MultiPoly one = MultiPoly::constant(nv, 1);
      MultiPoly lin(nv);
      MultiPoly even_prod = one, odd_prod = one, even_sq = one;
      for (unsigned i = 0; i < p; ++i) {
        MultiPoly ui = MultiPoly::variable(nv, i);
        lin = add(lin, ui);
        even_prod = mul(even_prod, sub(one, ui));
        even_sq = mul(even_sq, pow(sub(one, ui), 2));
      }
      for (unsigned j = 0; j < q; ++j) {
        MultiPoly vj = MultiPoly::variable(nv, p + j);
        lin = add(lin, vj);
        odd_prod = mul(odd_prod, add(one, vj));
      }
      MultiPoly n = add(mul(lin, even_sq), pow(sub(odd_prod, even_prod), 2));
      std::vector<DenomFactor> d;
      for (unsigned i = 0; i < p; ++i) {
        std::vector<unsigned> e(nv, 0);
        e[i] = 1;
        d.push_back({std::move(e), 2});
      }
      return RationalSeries(std::move(names), std::move(n), std::move(d), trunc);
    }
  }
  throw DomainError("unknown grading");
}

Integer dim_component(const Signature& sig, const std::vector<unsigned>& k,
                      const std::vector<unsigned>& l) {
  if (k.size() != sig.p || l.size() != sig.q)
    throw DomainError("multidegree length does not match signature");
  unsigned total = 0;
  for (unsigned e : k) total += e;
  bool odd_small = true;
  for (unsigned e : l) {
    if (e > 2) odd_small = false;
    total += e;
  }
  if (total == 0) throw DomainError("multidegree must have total degree >= 1");
  if (!odd_small) return 0;
  if (total == 1) return 1;
  Integer p1 = 1;
  bool all_le1 = true;
  for (unsigned e : k) p1 *= e + 1;
  for (unsigned e : l) {
    p1 *= e == 1 ? 2 : 1;
    if (e > 1) all_le1 = false;
  }
  return all_le1 ? Integer(p1 - 2) : p1;
}

Integer dim_component_bi(const Signature& sig, unsigned k, unsigned l) {
  if (k + l == 0) throw DomainError("degree must be >= 1");
  if (k + l == 1) return k == 1 ? sig.p : sig.q;
  return multichoose(2 * sig.p, k) * binom(2 * sig.q, l) -
         2 * multichoose(sig.p, k) * binom(sig.q, l);
}

Integer dim_component_total(const Signature& sig, unsigned n) {
  if (n == 0) throw DomainError("degree must be >= 1");
  Integer sum = 0;
  for (unsigned k = 0; k <= n; ++k) sum += dim_component_bi(sig, k, n - k);
  return sum;
}

Integer codimension_super(unsigned p, unsigned q) {
  if (p + q == 0) throw DomainError("codimension needs p + q >= 1");
  if (p + q == 1) return 1;
  Integer r;
  mpz_ui_pow_ui(r.get_mpz_t(), 2, p + q);
  return r - 2;
}

Integer codimension_ordinary(unsigned n) {
  if (n == 0) throw DomainError("codimension needs n >= 1");
  if (n == 1) return 2;
  Integer a, b;
  mpz_ui_pow_ui(a.get_mpz_t(), 2, 2 * n);
  mpz_ui_pow_ui(b.get_mpz_t(), 2, n + 1);
  return a - b;
}

unsigned pole_order_at_one(const RationalSeries& s) {
  if (s.variables().size() != 1)
    throw DomainError("pole order is defined for univariate series");
  unsigned denom_order = 0;
  for (const DenomFactor& f : s.denominator()) denom_order += f.power;

  // Multiplicity of (1 - t) in the numerator.
  if (s.numerator().is_zero()) return 0;
  std::vector<Integer> f(s.numerator().total_degree() + 1, 0);
  for (const auto& [e, c] : s.numerator().terms()) f[e[0]] = c;
  unsigned mult = 0;
  while (mult < denom_order && f.size() > 1) {
    Integer at_one = std::accumulate(f.begin(), f.end(), Integer(0));
    if (at_one != 0) break;
    // f = (1 - t) g with g_i = f_i + g_{i-1}
    std::vector<Integer> g(f.size() - 1);
    Integer prev = 0;
    for (std::size_t i = 0; i < g.size(); ++i) {
      prev += f[i];
      g[i] = prev;
    }
    f = std::move(g);
    ++mult;
  }
  return denom_order - mult;
}

unsigned gk_dimension_free(const Signature& sig) {
  return pole_order_at_one(hilbert_free(sig, Grading::total, 2));
}

}  // namespace bicomm
