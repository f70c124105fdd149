// Truncated standard-basis machinery for ideals of the free algebra.  The
// ideal slice up to a degree bound is closed under one-sided multiplications
// by generators with echelon pruning (sound because both multiplications are
// linear); the staircase is the set of minimal leading monomials under
// divisibility, and quotient dimensions count the monomials it misses.

#include "bicomm/groebner.hpp"

#include <algorithm>
#include <functional>
#include <queue>
#include <tuple>

namespace bicomm {

MonomialOrder MonomialOrder::deglex(const Signature& sig) {
  std::vector<Generator> asc;
  for (unsigned j = 1; j <= sig.q; ++j) asc.push_back({Parity::odd, j});
  for (unsigned i = 1; i <= sig.p; ++i) asc.push_back({Parity::even, i});
  return deglex(sig, std::move(asc));
}

MonomialOrder MonomialOrder::deglex(const Signature& sig,
                                    std::vector<Generator> ascending) {
  if (ascending.size() != sig.p + sig.q)
    throw DomainError("precedence must list every generator once");
  std::vector<char> seen_even(sig.p, 0), seen_odd(sig.q, 0);
  for (const Generator& g : ascending) {
    auto& seen = g.parity == Parity::even ? seen_even : seen_odd;
    unsigned limit = g.parity == Parity::even ? sig.p : sig.q;
    if (g.index < 1 || g.index > limit || seen[g.index - 1])
      throw DomainError("precedence must list every generator once");
    seen[g.index - 1] = 1;
  }
  MonomialOrder ord(OrderKind::deglex, sig);
  ord.descending_.assign(ascending.rbegin(), ascending.rend());
  return ord;
}

MonomialOrder MonomialOrder::weight(const Signature& sig) {
  return MonomialOrder(OrderKind::weight, sig);
}

namespace {

unsigned factor_exponent(const TensorMonomial& t, bool left, const Generator& g) {
  if (g.parity == Parity::even)
    return (left ? t.yu : t.yv)[g.index - 1];
  return ((left ? t.zu : t.zv) & odd_bit(g.index)) ? 1 : 0;
}

int colex_top(const std::vector<unsigned>& a, const std::vector<unsigned>& b) {
  for (std::size_t i = a.size(); i-- > 0;)
    if (a[i] != b[i]) return a[i] < b[i] ? -1 : 1;
  return 0;
}

}  // namespace

int MonomialOrder::compare(const BasisMonomial& a, const BasisMonomial& b) const {
  if (kind_ == OrderKind::deglex) {
    unsigned da = total_degree(a), db = total_degree(b);
    if (da != db) return da < db ? -1 : 1;
    if (a.is_generator() != b.is_generator()) return a.is_generator() ? -1 : 1;
    if (a.is_generator()) {
      for (const Generator& g : descending_) {
        bool ga = g == a.gen(), gb = g == b.gen();
        if (ga != gb) return ga ? 1 : -1;
      }
      return 0;
    }
    const TensorMonomial &s = a.tensor(), &t = b.tensor();
    for (bool left : {true, false}) {
      for (const Generator& g : descending_) {
        unsigned ea = factor_exponent(s, left, g), eb = factor_exponent(t, left, g);
        if (ea != eb) return ea < eb ? -1 : 1;
      }
    }
    return 0;
  }

  // weight order
  if (a.is_generator() != b.is_generator()) return a.is_generator() ? -1 : 1;
  if (a.is_generator()) {
    auto rank = [&](const Generator& g) {
      return g.parity == Parity::odd ? g.index - 1 : sig_.q + g.index - 1;
    };
    unsigned ra = rank(a.gen()), rb = rank(b.gen());
    if (ra != rb) return ra < rb ? -1 : 1;
    return 0;
  }
  const TensorMonomial &s = a.tensor(), &t = b.tensor();
  if (int c = colex_top(s.yu, t.yu)) return c;
  if (int c = colex_top(s.yv, t.yv)) return c;
  if (s.zu != t.zu) return s.zu < t.zu ? -1 : 1;
  if (s.zv != t.zv) return s.zv < t.zv ? -1 : 1;
  return 0;
}

BasisMonomial lead(const SuperPolynomial& f, const MonomialOrder& ord) {
  if (f.is_zero()) throw DomainError("the zero polynomial has no leading monomial");
  const BasisMonomial* best = nullptr;
  for (const auto& [m, c] : f.terms())
    if (!best || ord.less(*best, m)) best = &m;
  return *best;
}

bool divides(const BasisMonomial& m, const BasisMonomial& n) {
  if (m.is_generator() && n.is_generator()) return m.gen() == n.gen();
  if (m.is_generator()) {
    const Generator& g = m.gen();
    const TensorMonomial& t = n.tensor();
    if (g.parity == Parity::even)
      return t.yu[g.index - 1] > 0 || t.yv[g.index - 1] > 0;
    return ((t.zu | t.zv) & odd_bit(g.index)) != 0;
  }
  if (n.is_generator()) return false;
  const TensorMonomial &s = m.tensor(), &t = n.tensor();
  if (s.yu.size() != t.yu.size())
    throw DomainError("divisibility requires a common signature");
  for (std::size_t i = 0; i < s.yu.size(); ++i)
    if (s.yu[i] > t.yu[i] || s.yv[i] > t.yv[i]) return false;
  return (s.zu & ~t.zu) == 0 && (s.zv & ~t.zv) == 0;
}

namespace {

void append_word_steps(std::vector<ChainStep>& chain, bool left,
                       const std::vector<unsigned>& want_y, OddSet want_z,
                       const std::vector<unsigned>& have_y, OddSet have_z) {
  for (std::size_t i = 0; i < want_y.size(); ++i)
    for (unsigned c = have_y[i]; c < want_y[i]; ++c)
      chain.push_back({left, {Parity::even, static_cast<unsigned>(i + 1)}});
  for (unsigned j : odd_indices(want_z & ~have_z))
    chain.push_back({left, {Parity::odd, j}});
}

Generator smallest_in_word(const std::vector<unsigned>& y, OddSet z) {
  for (std::size_t i = 0; i < y.size(); ++i)
    if (y[i] > 0) return {Parity::even, static_cast<unsigned>(i + 1)};
  return {Parity::odd, odd_indices(z).front()};
}

}  // namespace

std::vector<ChainStep> division_chain(const BasisMonomial& m, const BasisMonomial& n,
                                      const Signature& sig) {
  if (!divides(m, n)) throw DomainError("division chain requires divisibility");
  std::vector<ChainStep> chain;
  if (m.is_generator() && n.is_generator()) return chain;

  const TensorMonomial& t = n.tensor();
  if (m.is_generator()) {
    const Generator& x = m.gen();
    std::vector<unsigned> have_yu(sig.p, 0), have_yv(sig.p, 0);
    OddSet have_zu = 0, have_zv = 0;
    bool in_left = x.parity == Parity::even ? t.yu[x.index - 1] > 0
                                            : (t.zu & odd_bit(x.index)) != 0;
    if (in_left) {
      // n = chain(x): seed x (x) pivot with a pivot from the right factor.
      Generator pivot = smallest_in_word(t.yv, t.zv);
      chain.push_back({false, pivot});
      if (x.parity == Parity::even) have_yu[x.index - 1] = 1; else have_zu = odd_bit(x.index);
      if (pivot.parity == Parity::even) have_yv[pivot.index - 1] = 1; else have_zv = odd_bit(pivot.index);
    } else {
      Generator pivot = smallest_in_word(t.yu, t.zu);
      chain.push_back({true, pivot});
      if (x.parity == Parity::even) have_yv[x.index - 1] = 1; else have_zv = odd_bit(x.index);
      if (pivot.parity == Parity::even) have_yu[pivot.index - 1] = 1; else have_zu = odd_bit(pivot.index);
    }
    append_word_steps(chain, true, t.yu, t.zu, have_yu, have_zu);
    append_word_steps(chain, false, t.yv, t.zv, have_yv, have_zv);
    return chain;
  }

  const TensorMonomial& s = m.tensor();
  append_word_steps(chain, true, t.yu, t.zu, s.yu, s.zu);
  append_word_steps(chain, false, t.yv, t.zv, s.yv, s.zv);
  return chain;
}

SuperPolynomial apply_chain(const SuperPolynomial& f, const std::vector<ChainStep>& chain) {
  SuperPolynomial r = f;
  for (const ChainStep& st : chain) {
    SuperPolynomial g = SuperPolynomial::monomial(f.signature(), st.gen);
    r = st.left ? mul(g, r) : mul(r, g);
  }
  return r;
}

namespace {

bool is_homogeneous(const SuperPolynomial& f) {
  unsigned d = 0;
  bool first = true;
  for (const auto& [m, c] : f.terms()) {
    unsigned dm = total_degree(m);
    if (first) d = dm, first = false;
    else if (dm != d) return false;
  }
  return true;
}

}  // namespace

SuperPolynomial reduce(const SuperPolynomial& f,
                       const std::vector<SuperPolynomial>& divisors,
                       const MonomialOrder& ord) {
  const Signature& sig = f.signature();
  std::vector<BasisMonomial> leads;
  leads.reserve(divisors.size());
  for (const SuperPolynomial& g : divisors) {
    if (g.signature() != sig) throw DomainError("signature mismatch between operands");
    if (g.is_zero()) throw DomainError("zero polynomial among the divisors");
    if (ord.kind() == OrderKind::weight && !is_homogeneous(g))
      throw DomainError("weight-order reduction requires homogeneous divisors");
    leads.push_back(lead(g, ord));
  }

  SuperPolynomial work = f, out(sig);
  while (!work.is_zero()) {
    BasisMonomial m = lead(work, ord);
    Rational cm = work.coefficient(m);
    bool eliminated = false;
    for (std::size_t i = 0; i < divisors.size(); ++i) {
      if (!divides(leads[i], m)) continue;
      SuperPolynomial h = apply_chain(divisors[i], division_chain(leads[i], m, sig));
      Rational ch = h.coefficient(m);
      if (sig.field.is_zero(ch)) continue;
      if (ord.kind() == OrderKind::weight) {
        bool dominated = true;
        for (const auto& [mm, cc] : h.terms())
          if (!(mm == m) && !ord.less(mm, m)) {
            dominated = false;
            break;
          }
        if (!dominated) continue;
      }
      work = sub(work, scale(sig.field.mul(cm, sig.field.inv(ch)), h));
      eliminated = true;
      break;
    }
    if (!eliminated) {
      out.add_term(m, cm);
      work.add_term(m, sig.field.neg(cm));
    }
  }
  return out;
}

GsBasis truncated_basis(const Signature& sig, const std::vector<SuperPolynomial>& ideal,
                        const MonomialOrder& ord, unsigned max_degree) {
  if (max_degree < 1) throw DomainError("max_degree must be >= 1");
  if (max_degree > 24) throw DomainError("max_degree above 24 is not supported");
  for (const SuperPolynomial& g : ideal) {
    if (g.signature() != sig) throw DomainError("signature mismatch between operands");
    if (g.is_zero()) throw DomainError("zero polynomial among the generators");
    if (g.degree() > max_degree) throw DomainError("generator degree exceeds max_degree");
  }

  struct OrdLess {
    const MonomialOrder* o;
    bool operator()(const BasisMonomial& a, const BasisMonomial& b) const {
      return o->less(a, b);
    }
  };
  struct QEntry {
    unsigned deg;
    unsigned long seq;
    SuperPolynomial poly;
  };
  auto qcmp = [](const QEntry& a, const QEntry& b) {
    return std::tie(a.deg, a.seq) > std::tie(b.deg, b.seq);
  };
  std::priority_queue<QEntry, std::vector<QEntry>, decltype(qcmp)> queue(qcmp);

  std::vector<SuperPolynomial> echelon;
  std::vector<BasisMonomial> discovered;
  std::map<BasisMonomial, std::size_t, OrdLess> by_lead(OrdLess{&ord});

  unsigned long seq = 0;
  for (const SuperPolynomial& g : ideal) queue.push({g.degree(), seq++, g});

  while (!queue.empty()) {
    SuperPolynomial h = queue.top().poly;
    queue.pop();
    while (!h.is_zero()) {
      BasisMonomial m = lead(h, ord);
      auto it = by_lead.find(m);
      if (it == by_lead.end()) break;
      h = sub(h, scale(h.coefficient(m), echelon[it->second]));  // echelon is monic
    }
    if (h.is_zero()) continue;
    BasisMonomial m = lead(h, ord);
    h = scale(sig.field.inv(h.coefficient(m)), h);
    by_lead.emplace(m, echelon.size());
    echelon.push_back(h);
    discovered.push_back(m);

    for (Parity par : {Parity::even, Parity::odd}) {
      unsigned limit = par == Parity::even ? sig.p : sig.q;
      for (unsigned i = 1; i <= limit; ++i) {
        SuperPolynomial x = SuperPolynomial::monomial(sig, Generator{par, i});
        for (bool left : {true, false}) {
          SuperPolynomial child = left ? mul(x, h) : mul(h, x);
          if (child.is_zero() || child.degree() > max_degree) continue;
          queue.push({child.degree(), seq++, std::move(child)});
        }
      }
    }
  }

  // Minimal staircase in discovery order.
  std::vector<BasisMonomial> staircase;
  for (const BasisMonomial& m : discovered) {
    bool minimal = true;
    for (const BasisMonomial& other : discovered) {
      if (!(other == m) && divides(other, m)) {
        minimal = false;
        break;
      }
    }
    if (minimal) staircase.push_back(m);
  }

  std::vector<SuperPolynomial> gens;
  for (const BasisMonomial& m : staircase) gens.push_back(echelon[by_lead.at(m)]);

  // Tail inter-reduction to a fixpoint; with an order that cannot support
  // full division on these inputs the raw monic forms are kept.
  try {
    bool changed = true;
    for (int pass = 0; changed && pass < 10; ++pass) {
      changed = false;
      for (std::size_t i = 0; i < gens.size(); ++i) {
        std::vector<SuperPolynomial> others;
        for (std::size_t j = 0; j < gens.size(); ++j)
          if (j != i) others.push_back(gens[j]);
        if (others.empty()) continue;
        SuperPolynomial r = reduce(gens[i], others, ord);
        r = scale(sig.field.inv(r.coefficient(lead(r, ord))), r);
        if (!(r == gens[i])) {
          gens[i] = r;
          changed = true;
        }
      }
    }
  } catch (const DomainError&) {
  }

  std::vector<char> has_deg(max_degree + 1, 0);
  for (const BasisMonomial& m : staircase) {
    unsigned d = total_degree(m);
    if (d <= max_degree) has_deg[d] = 1;
  }
  unsigned stable = 0;
  for (unsigned s = max_degree; s >= 1; --s)
    if (!has_deg[s]) {
      stable = s;
      break;
    }

  return {sig, ord, max_degree, std::move(gens), std::move(staircase), stable};
}

Membership member(const SuperPolynomial& f, const GsBasis& basis) {
  if (f.signature() != basis.sig)
    throw DomainError("signature mismatch between operands");
  if (f.is_zero()) return Membership::yes;
  if (f.degree() > basis.max_degree) return Membership::unknown;
  SuperPolynomial r = basis.generators.empty()
                          ? f
                          : reduce(f, basis.generators, basis.order);
  if (r.is_zero()) return Membership::yes;
  return f.degree() <= basis.stable_through ? Membership::no : Membership::unknown;
}

std::vector<unsigned long> quotient_dims(const GsBasis& basis) {
  std::vector<unsigned long> dims(basis.max_degree + 1, 0);
  for (unsigned d = 1; d <= basis.max_degree; ++d) {
    for (const BasisMonomial& m : monomials_of_degree(basis.sig, d)) {
      bool free_monomial = true;
      for (const BasisMonomial& s : basis.staircase)
        if (divides(s, m)) {
          free_monomial = false;
          break;
        }
      if (free_monomial) ++dims[d];
    }
  }
  return dims;
}

namespace {

// Greedy embedding of exponent-pair sequences by a strictly increasing index
// map; exact because feasible choices are monotone in the target exponents.
bool embed_pairs(unsigned K, unsigned L,
                 const std::function<std::pair<unsigned, unsigned>(unsigned)>& from,
                 const std::function<std::pair<unsigned, unsigned>(unsigned)>& to) {
  unsigned pos = 0;
  for (unsigned j = 1; j <= K; ++j) {
    auto [a1, a2] = from(j);
    bool found = false;
    for (unsigned i = pos + 1; i <= L + K; ++i) {
      auto [b1, b2] = to(i);
      if (a1 <= b1 && a2 <= b2) {
        pos = i;
        found = true;
        break;
      }
    }
    if (!found) return false;
  }
  return true;
}

}  // namespace

bool weight_preceq(const BasisMonomial& m, const BasisMonomial& n) {
  if (m.is_generator() || n.is_generator())
    throw DomainError("weighted comparability is defined on tensors");
  const TensorMonomial &s = m.tensor(), &t = n.tensor();

  auto top_even = [](const TensorMonomial& x) {
    unsigned k = 0;
    for (std::size_t i = 0; i < x.yu.size(); ++i)
      if (x.yu[i] || x.yv[i]) k = static_cast<unsigned>(i + 1);
    return k;
  };
  auto top_odd = [](const TensorMonomial& x) {
    OddSet all = x.zu | x.zv;
    unsigned k = 0;
    for (unsigned j : odd_indices(all)) k = j;
    return k;
  };

  auto even_at = [](const TensorMonomial& x, unsigned i) -> std::pair<unsigned, unsigned> {
    if (i > x.yu.size()) return {0, 0};
    return {x.yu[i - 1], x.yv[i - 1]};
  };
  auto odd_at = [](const TensorMonomial& x, unsigned j) -> std::pair<unsigned, unsigned> {
    if (j > 64) return {0, 0};
    return {(x.zu & odd_bit(j)) ? 1u : 0u, (x.zv & odd_bit(j)) ? 1u : 0u};
  };

  bool evens = embed_pairs(
      top_even(s), top_even(t),
      [&](unsigned j) { return even_at(s, j); },
      [&](unsigned i) { return even_at(t, i); });
  if (!evens) return false;
  return embed_pairs(
      top_odd(s), top_odd(t),
      [&](unsigned j) { return odd_at(s, j); },
      [&](unsigned i) { return odd_at(t, i); });
}

}  // namespace bicomm
