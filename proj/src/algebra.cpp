// Core arithmetic for the free bicommutative superalgebra on p even and q odd
// generators.  The basis consists of the generators themselves together with
// tensors u (x) v of nonempty supercommutative words; multiplication only
// ever produces tensors:
//
//   x * x'              = x (x) x'
//   x * (u (x) v)       = (xu) (x) v
//   (u (x) v) * x       = u (x) (vx)
//   (u1(x)v1)*(u2(x)v2) = (-1)^{|v1|(|u2|+|v2|)} (u1 u2) (x) (v2 v1)
//
// Words are commutative up to Koszul signs: swapping two odd generators
// flips the sign, odd generators square to zero.  Signs are computed by
// counting inversions among odd indices.

#include "bicomm/algebra.hpp"

#include <algorithm>

namespace bicomm {

Signature::Signature(unsigned p_, unsigned q_, Field f)
    : p(p_), q(q_), field(std::move(f)) {
  if (p + q == 0) throw DomainError("signature requires at least one generator");
  if (q > 64) throw DomainError("at most 64 odd generators are supported");
}

std::vector<unsigned> odd_indices(OddSet s) {
  std::vector<unsigned> out;
  while (s) {
    unsigned j = static_cast<unsigned>(std::countr_zero(s)) + 1;
    out.push_back(j);
    s &= s - 1;
  }
  return out;
}

unsigned merge_inversions(OddSet first, OddSet second) {
  unsigned inv = 0;
  OddSet s = second;
  while (s) {
    unsigned j = static_cast<unsigned>(std::countr_zero(s)) + 1;
    inv += odd_count(first & odd_above(j));
    s &= s - 1;
  }
  return inv;
}

int compare_oddset_lex(OddSet a, OddSet b) {
  if (a == b) return 0;
  OddSet diff = a ^ b;
  OddSet low = diff & (~diff + 1);
  bool in_a = (a & low) != 0;
  OddSet other_rest = (in_a ? b : a) & ~(low - 1);
  if (other_rest == 0) return in_a ? 1 : -1;  // the other word is a proper prefix
  return in_a ? -1 : 1;
}

namespace {

// Dictionary order on factor words spelled out as generator sequences with
// y_1 < ... < y_p < z_1 < ... < z_q.
int compare_factor_dict(const std::vector<unsigned>& ya, OddSet za,
                        const std::vector<unsigned>& yb, OddSet zb) {
  for (std::size_t i = 0; i < ya.size(); ++i) {
    if (ya[i] == yb[i]) continue;
    bool a_more = ya[i] > yb[i];
    const std::vector<unsigned>& rest_y = a_more ? yb : ya;
    OddSet rest_z = a_more ? zb : za;
    bool shorter_continues = rest_z != 0;
    for (std::size_t j = i + 1; j < ya.size() && !shorter_continues; ++j)
      if (rest_y[j] > 0) shorter_continues = true;
    // If the side with fewer copies of y_{i+1} continues, it continues with a
    // later letter, so the other side is smaller; if it ends, it is a prefix.
    if (shorter_continues) return a_more ? -1 : 1;
    return a_more ? 1 : -1;
  }
  return compare_oddset_lex(za, zb);
}

unsigned word_degree(const std::vector<unsigned>& y, OddSet z) {
  unsigned d = odd_count(z);
  for (unsigned e : y) d += e;
  return d;
}

}  // namespace

unsigned total_degree(const BasisMonomial& m) {
  if (m.is_generator()) return 1;
  const TensorMonomial& t = m.tensor();
  return word_degree(t.yu, t.zu) + word_degree(t.yv, t.zv);
}

Parity parity_of(const BasisMonomial& m) {
  if (m.is_generator()) return m.gen().parity;
  const TensorMonomial& t = m.tensor();
  return (odd_count(t.zu) + odd_count(t.zv)) % 2 == 0 ? Parity::even : Parity::odd;
}

Multidegree multidegree(const BasisMonomial& m, const Signature& sig) {
  Multidegree d;
  d.k.assign(sig.p, 0);
  d.l.assign(sig.q, 0);
  if (m.is_generator()) {
    const Generator& g = m.gen();
    if (g.parity == Parity::even)
      d.k[g.index - 1] = 1;
    else
      d.l[g.index - 1] = 1;
    return d;
  }
  const TensorMonomial& t = m.tensor();
  for (unsigned i = 0; i < sig.p; ++i) d.k[i] = t.yu[i] + t.yv[i];
  for (unsigned j : odd_indices(t.zu)) d.l[j - 1] += 1;
  for (unsigned j : odd_indices(t.zv)) d.l[j - 1] += 1;
  return d;
}

void validate_monomial(const BasisMonomial& m, const Signature& sig) {
  if (m.is_generator()) {
    const Generator& g = m.gen();
    unsigned limit = g.parity == Parity::even ? sig.p : sig.q;
    if (g.index < 1 || g.index > limit)
      throw DomainError("generator index out of range for signature");
    return;
  }
  const TensorMonomial& t = m.tensor();
  if (t.yu.size() != sig.p || t.yv.size() != sig.p)
    throw DomainError("even exponent vector does not match signature");
  OddSet allowed = sig.q >= 64 ? ~OddSet{0} : odd_below(sig.q + 1);
  if ((t.zu & ~allowed) || (t.zv & ~allowed))
    throw DomainError("odd generator index out of range for signature");
  if (word_degree(t.yu, t.zu) == 0 || word_degree(t.yv, t.zv) == 0)
    throw DomainError("tensor factor must be a nonempty word");
}

int compare_monomials(const BasisMonomial& a, const BasisMonomial& b) {
  if (a.is_generator() != b.is_generator()) return a.is_generator() ? -1 : 1;
  if (a.is_generator()) {
    const Generator &g = a.gen(), &h = b.gen();
    if (g.parity != h.parity) return g.parity == Parity::even ? -1 : 1;
    if (g.index != h.index) return g.index < h.index ? -1 : 1;
    return 0;
  }
  const TensorMonomial &s = a.tensor(), &t = b.tensor();
  if (int c = compare_factor_dict(s.yu, s.zu, t.yu, t.zu)) return c;
  return compare_factor_dict(s.yv, s.zv, t.yv, t.zv);
}

MonomialProduct mul_monomials(const BasisMonomial& a, const BasisMonomial& b,
                              const Signature& sig) {
  validate_monomial(a, sig);
  validate_monomial(b, sig);

  unsigned sign = 0;  // exponent of -1
  TensorMonomial r;

  if (a.is_generator() && b.is_generator()) {
    r.yu.assign(sig.p, 0);
    r.yv.assign(sig.p, 0);
    const Generator &g = a.gen(), &h = b.gen();
    if (g.parity == Parity::even)
      r.yu[g.index - 1] = 1;
    else
      r.zu = odd_bit(g.index);
    if (h.parity == Parity::even)
      r.yv[h.index - 1] = 1;
    else
      r.zv = odd_bit(h.index);
  } else if (a.is_generator()) {
    // x * (u (x) v) = (xu) (x) v; x moves past the odd letters of u below it.
    r = b.tensor();
    const Generator& g = a.gen();
    if (g.parity == Parity::even) {
      r.yu[g.index - 1] += 1;
    } else {
      if (r.zu & odd_bit(g.index)) return {Rational(0), std::nullopt};
      sign += odd_count(r.zu & odd_below(g.index));
      r.zu |= odd_bit(g.index);
    }
  } else if (b.is_generator()) {
    // (u (x) v) * x = u (x) (vx); x moves past the odd letters of v above it.
    r = a.tensor();
    const Generator& h = b.gen();
    if (h.parity == Parity::even) {
      r.yv[h.index - 1] += 1;
    } else {
      if (r.zv & odd_bit(h.index)) return {Rational(0), std::nullopt};
      sign += odd_count(r.zv & odd_above(h.index));
      r.zv |= odd_bit(h.index);
    }
  } else {
    const TensorMonomial &s = a.tensor(), &t = b.tensor();
    if ((s.zu & t.zu) || (s.zv & t.zv)) return {Rational(0), std::nullopt};
    sign += odd_count(s.zv) * (odd_count(t.zu) + odd_count(t.zv));
    sign += merge_inversions(s.zu, t.zu);  // sort the word u1 u2
    sign += merge_inversions(t.zv, s.zv);  // right factor is v2 v1
    r.yu.resize(sig.p);
    r.yv.resize(sig.p);
    for (unsigned i = 0; i < sig.p; ++i) {
      r.yu[i] = s.yu[i] + t.yu[i];
      r.yv[i] = s.yv[i] + t.yv[i];
    }
    r.zu = s.zu | t.zu;
    r.zv = s.zv | t.zv;
  }

  Rational c = sig.field.reduce(Rational(sign % 2 == 0 ? 1 : -1));
  return {c, BasisMonomial(std::move(r))};
}

SuperPolynomial SuperPolynomial::monomial(const Signature& sig, const BasisMonomial& m,
                                          const Rational& coeff) {
  validate_monomial(m, sig);
  SuperPolynomial f(sig);
  f.add_term(m, coeff);
  return f;
}

void SuperPolynomial::add_term(const BasisMonomial& m, const Rational& coeff) {
  Rational c = sig_.field.reduce(coeff);
  if (sig_.field.is_zero(c)) return;
  auto [it, fresh] = terms_.emplace(m, c);
  if (!fresh) {
    it->second = sig_.field.add(it->second, c);
    if (sig_.field.is_zero(it->second)) terms_.erase(it);
  }
}

Rational SuperPolynomial::coefficient(const BasisMonomial& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? Rational(0) : it->second;
}

unsigned SuperPolynomial::degree() const {
  unsigned d = 0;
  for (const auto& [m, c] : terms_) d = std::max(d, total_degree(m));
  return d;
}

namespace {

void require_same_signature(const SuperPolynomial& a, const SuperPolynomial& b) {
  if (a.signature() != b.signature())
    throw DomainError("signature mismatch between operands");
}

}  // namespace

SuperPolynomial add(const SuperPolynomial& a, const SuperPolynomial& b) {
  require_same_signature(a, b);
  SuperPolynomial r = a;
  for (const auto& [m, c] : b.terms()) r.add_term(m, c);
  return r;
}

SuperPolynomial sub(const SuperPolynomial& a, const SuperPolynomial& b) {
  require_same_signature(a, b);
  SuperPolynomial r = a;
  const Field& F = a.signature().field;
  for (const auto& [m, c] : b.terms()) r.add_term(m, F.neg(c));
  return r;
}

SuperPolynomial negate(const SuperPolynomial& a) {
  return scale(Rational(-1), a);
}

SuperPolynomial scale(const Rational& c, const SuperPolynomial& a) {
  SuperPolynomial r(a.signature());
  const Field& F = a.signature().field;
  for (const auto& [m, cm] : a.terms()) r.add_term(m, F.mul(c, cm));
  return r;
}

SuperPolynomial mul(const SuperPolynomial& a, const SuperPolynomial& b) {
  require_same_signature(a, b);
  const Signature& sig = a.signature();
  SuperPolynomial r(sig);
  for (const auto& [ma, ca] : a.terms()) {
    for (const auto& [mb, cb] : b.terms()) {
      MonomialProduct p = mul_monomials(ma, mb, sig);
      if (!p.monomial) continue;
      r.add_term(*p.monomial, sig.field.mul(sig.field.mul(ca, cb), p.coeff));
    }
  }
  return r;
}

PolyParity parity(const SuperPolynomial& f) {
  bool even = false, odd = false;
  for (const auto& [m, c] : f.terms())
    (parity_of(m) == Parity::even ? even : odd) = true;
  if (even && odd) return PolyParity::mixed;
  return odd ? PolyParity::odd : PolyParity::even;
}

std::vector<BasisMonomial> enumerate_basis(const Signature& sig,
                                           const std::vector<unsigned>& k,
                                           const std::vector<unsigned>& l) {
  if (k.size() != sig.p || l.size() != sig.q)
    throw DomainError("multidegree length does not match signature");
  unsigned total = 0;
  for (unsigned e : k) total += e;
  for (unsigned e : l) {
    if (e > 2) return {};
    total += e;
  }
  if (total == 0) throw DomainError("multidegree must have total degree >= 1");

  std::vector<BasisMonomial> out;
  if (total == 1) {
    for (unsigned i = 0; i < sig.p; ++i)
      if (k[i] == 1) out.emplace_back(Generator{Parity::even, i + 1});
    for (unsigned j = 0; j < sig.q; ++j)
      if (l[j] == 1) out.emplace_back(Generator{Parity::odd, j + 1});
    return out;
  }

  // Distribute each y-exponent between the two factors, each odd generator of
  // multiplicity 1 to one side (multiplicity 2 covers both), keep splits with
  // two nonempty factors.
  std::vector<unsigned> ones;
  for (unsigned j = 0; j < sig.q; ++j)
    if (l[j] == 1) ones.push_back(j + 1);

  TensorMonomial t;
  t.yu.assign(sig.p, 0);
  t.yv.assign(sig.p, 0);
  for (unsigned j = 0; j < sig.q; ++j)
    if (l[j] == 2) {
      t.zu |= odd_bit(j + 1);
      t.zv |= odd_bit(j + 1);
    }

  auto rec_odd = [&](auto&& self, std::size_t idx) -> void {
    if (idx == ones.size()) {
      if (word_degree(t.yu, t.zu) >= 1 && word_degree(t.yv, t.zv) >= 1)
        out.emplace_back(t);
      return;
    }
    OddSet bit = odd_bit(ones[idx]);
    t.zu |= bit;
    self(self, idx + 1);
    t.zu &= ~bit;
    t.zv |= bit;
    self(self, idx + 1);
    t.zv &= ~bit;
  };
  auto rec_even = [&](auto&& self, std::size_t i) -> void {
    if (i == sig.p) {
      rec_odd(rec_odd, 0);
      return;
    }
    for (unsigned a = 0; a <= k[i]; ++a) {
      t.yu[i] = a;
      t.yv[i] = k[i] - a;
      self(self, i + 1);
    }
    t.yu[i] = t.yv[i] = 0;
  };
  rec_even(rec_even, 0);

  std::sort(out.begin(), out.end(),
            [](const BasisMonomial& a, const BasisMonomial& b) {
              return compare_monomials(a, b) < 0;
            });
  return out;
}

void for_each_multidegree(const Signature& sig, unsigned total,
                          const std::function<void(const std::vector<unsigned>&,
                                                   const std::vector<unsigned>&)>& fn) {
  std::vector<unsigned> k(sig.p, 0), l(sig.q, 0);
  auto rec_l = [&](auto&& self, unsigned j, unsigned rem) -> void {
    if (j == sig.q) {
      if (rem == 0) fn(k, l);
      return;
    }
    for (unsigned e = 0; e <= std::min(2u, rem); ++e) {
      l[j] = e;
      self(self, j + 1, rem - e);
    }
    l[j] = 0;
  };
  auto rec_k = [&](auto&& self, unsigned i, unsigned rem) -> void {
    if (i == sig.p) {
      rec_l(rec_l, 0, rem);
      return;
    }
    for (unsigned e = 0; e <= rem; ++e) {
      k[i] = e;
      self(self, i + 1, rem - e);
    }
    k[i] = 0;
  };
  rec_k(rec_k, 0, total);
}

std::vector<BasisMonomial> monomials_of_degree(const Signature& sig, unsigned d) {
  if (d == 0) throw DomainError("total degree must be >= 1");
  std::vector<BasisMonomial> out;
  for_each_multidegree(sig, d, [&](const std::vector<unsigned>& k,
                                   const std::vector<unsigned>& l) {
    for (BasisMonomial& m : enumerate_basis(sig, k, l)) out.push_back(std::move(m));
  });
  return out;
}

}  // namespace bicomm
