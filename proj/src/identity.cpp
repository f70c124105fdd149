// Identity patterns and their randomized/exhaustive verification.  Every
// check evaluates both sides through the basis arithmetic and compares; the
// sign exponent is evaluated on the parities of the substituted values.

#include "bicomm/identity.hpp"

#include <algorithm>
#include <cassert>
#include <numeric>
#include <random>

#include "bicomm/textio.hpp"

namespace bicomm {

PatternPtr PatternNode::var(unsigned id) {
  return std::make_shared<PatternNode>(PatternNode{id});
}

PatternPtr PatternNode::prod(PatternPtr l, PatternPtr r) {
  return std::make_shared<PatternNode>(
      PatternNode{std::make_pair(std::move(l), std::move(r))});
}

SuperPolynomial eval_pattern(const PatternPtr& node,
                             const std::vector<SuperPolynomial>& values) {
  if (node->is_var()) return values.at(node->id() - 1);
  return mul(eval_pattern(node->parts().first, values),
             eval_pattern(node->parts().second, values));
}

namespace {

PatternPtr V(unsigned id) { return PatternNode::var(id); }
PatternPtr P(PatternPtr l, PatternPtr r) {
  return PatternNode::prod(std::move(l), std::move(r));
}

std::vector<VarSpec> any_vars(unsigned n) { return std::vector<VarSpec>(n); }

}  // namespace

IdentityPattern pat_superleft() {
  return {"superleft", any_vars(3), P(V(1), P(V(2), V(3))), P(V(2), P(V(1), V(3))),
          {{{1, 2}}}};
}

IdentityPattern pat_superright() {
  return {"superright", any_vars(3), P(P(V(1), V(2)), V(3)), P(P(V(1), V(3)), V(2)),
          {{{2, 3}}}};
}

IdentityPattern pat_weak_assoc() {
  return {"weak-assoc", any_vars(4), P(V(1), P(P(V(2), V(3)), V(4))),
          P(P(V(1), P(V(2), V(3))), V(4)), {}};
}

IdentityPattern pat_two_odd_left_box(unsigned k) {
  if (k < 3) throw DomainError("two-odd-left-box needs k >= 3");
  auto box = [&](unsigned first) {
    PatternPtr a = P(V(first), V(3));
    for (unsigned j = 4; j <= k; ++j) a = P(a, V(j));
    return a;
  };
  return {"two-odd-left-box", any_vars(k), P(V(2), box(1)), P(V(1), box(2)),
          {{{1, 2}}}};
}

IdentityPattern pat_cor_two_odd_left_box(unsigned k) {
  if (k < 1) throw DomainError("cor-two-odd-left-box needs k >= 1");
  std::vector<VarSpec> vars(k + 1);
  vars[0].kind = VarKind::odd;
  PatternPtr a = P(V(1), V(2));
  for (unsigned j = 3; j <= k + 1; ++j) a = P(a, V(j));
  return {"cor-two-odd-left-box", std::move(vars), P(V(1), a), nullptr, {}};
}

IdentityPattern pat_two_odd_left(unsigned k) {
  if (k < 3) throw DomainError("two-odd-left needs k >= 3");
  auto stack = [&](unsigned first) {
    PatternPtr a = P(V(first), V(3));
    for (unsigned j = 4; j <= k; ++j) a = P(V(j), a);
    return a;
  };
  std::vector<SignTerm> sign{{{1, 2}}};
  for (unsigned j = 4; j <= k; ++j) {
    sign.push_back({{j, 1}});
    sign.push_back({{j, 2}});
  }
  return {"two-odd-left", any_vars(k), P(V(2), stack(1)), P(V(1), stack(2)),
          std::move(sign)};
}

IdentityPattern pat_cor_two_odd_left(unsigned k) {
  if (k < 1) throw DomainError("cor-two-odd-left needs k >= 1");
  std::vector<VarSpec> vars(k + 1);
  vars[0].kind = VarKind::odd;
  PatternPtr a = P(V(1), V(2));
  for (unsigned j = 3; j <= k + 1; ++j) a = P(V(j), a);
  return {"cor-two-odd-left", std::move(vars), P(V(1), a), nullptr, {}};
}

IdentityPattern pat_two_odd_right(unsigned k) {
  if (k < 3) throw DomainError("two-odd-right needs k >= 3");
  auto stack = [&](unsigned inner) {
    PatternPtr a = P(V(3), V(inner));
    for (unsigned j = 4; j <= k; ++j) a = P(a, V(j));
    return a;
  };
  std::vector<SignTerm> sign{{{1, 2}}};
  for (unsigned j = 4; j <= k; ++j) {
    sign.push_back({{j, 1}});
    sign.push_back({{j, 2}});
  }
  return {"two-odd-right", any_vars(k), P(stack(1), V(2)), P(stack(2), V(1)),
          std::move(sign)};
}

IdentityPattern pat_cor_two_odd_right(unsigned k) {
  if (k < 1) throw DomainError("cor-two-odd-right needs k >= 1");
  std::vector<VarSpec> vars(k + 1);
  vars[0].kind = VarKind::odd;
  PatternPtr a = P(V(2), V(1));
  for (unsigned j = 3; j <= k + 1; ++j) a = P(a, V(j));
  return {"cor-two-odd-right", std::move(vars), P(a, V(1)), nullptr, {}};
}

IdentityPattern pat_left_to_right_comb(unsigned k) {
  if (k < 2) throw DomainError("left-to-right-comb needs k >= 2");
  std::vector<VarSpec> vars(k + 1);
  vars[k].min_degree = 2;
  PatternPtr u = V(1);
  for (unsigned i = 2; i <= k; ++i) u = P(u, V(i));
  PatternPtr c = P(V(k + 1), V(2));
  for (unsigned i = 3; i <= k; ++i) c = P(c, V(i));
  std::vector<SignTerm> sign;
  for (unsigned i = 2; i <= k; ++i) sign.push_back({{i, k + 1}});
  return {"left-to-right-comb", std::move(vars), P(u, V(k + 1)), P(V(1), c),
          std::move(sign)};
}

IdentityPattern pat_comb_product(unsigned k, unsigned l, unsigned m, unsigned n) {
  if (k < 1 || l < 1 || m < 1 || n < 1)
    throw DomainError("comb-product needs k, l, m, n >= 1");
  unsigned nv = k + l + m + n;
  std::vector<VarSpec> vars(nv);
  for (auto& v : vars) v.generator_only = true;
  auto t = [&](unsigned i) { return V(i); };
  auto u = [&](unsigned i) { return V(k + i); };
  auto v = [&](unsigned i) { return V(k + l + i); };
  auto w = [&](unsigned i) { return V(k + l + m + i); };

  PatternPtr f1 = P(t(1), u(1));
  for (unsigned i = 2; i <= l; ++i) f1 = P(f1, u(i));
  for (unsigned i = 2; i <= k; ++i) f1 = P(t(i), f1);

  PatternPtr f2 = P(v(1), w(1));
  for (unsigned i = 2; i <= n; ++i) f2 = P(f2, w(i));
  for (unsigned i = 2; i <= m; ++i) f2 = P(v(i), f2);

  PatternPtr rhs = P(v(1), w(1));
  for (unsigned i = 2; i <= n; ++i) rhs = P(rhs, w(i));
  rhs = P(rhs, u(1));
  for (unsigned i = 2; i <= l; ++i) rhs = P(rhs, u(i));
  for (unsigned i = 2; i <= m; ++i) rhs = P(v(i), rhs);
  for (unsigned i = 1; i <= k; ++i) rhs = P(t(i), rhs);

  std::vector<SignTerm> sign;
  for (unsigned i = 1; i <= l; ++i) {
    for (unsigned j = 1; j <= m; ++j) sign.push_back({{k + i, k + l + j}});
    for (unsigned j = 1; j <= n; ++j) sign.push_back({{k + i, k + l + m + j}});
  }
  return {"comb-product", std::move(vars), P(f1, f2), rhs, std::move(sign)};
}

std::vector<IdentityPattern> sign_mutants(const IdentityPattern& pat) {
  std::vector<IdentityPattern> out;
  for (std::size_t i = 0; i < pat.sign.size(); ++i) {
    IdentityPattern m = pat;
    m.sign.erase(m.sign.begin() + static_cast<std::ptrdiff_t>(i));
    m.name += "/drop-sign-" + std::to_string(i);
    out.push_back(std::move(m));
  }
  return out;
}

namespace {

struct ValuePool {
  // [degree - 1] -> monomials of that total degree, split by parity
  std::vector<std::vector<BasisMonomial>> even, odd;

  const std::vector<BasisMonomial>& at(Parity par, unsigned deg) const {
    return (par == Parity::even ? even : odd)[deg - 1];
  }
};

ValuePool build_pool(const Signature& sig, unsigned maxdeg) {
  ValuePool pool;
  pool.even.resize(maxdeg);
  pool.odd.resize(maxdeg);
  for (unsigned d = 1; d <= maxdeg; ++d) {
    for (BasisMonomial& m : monomials_of_degree(sig, d)) {
      auto& dst = parity_of(m) == Parity::even ? pool.even : pool.odd;
      dst[d - 1].push_back(std::move(m));
    }
  }
  return pool;
}

const Rational kCoeffs[] = {Rational(1), Rational(2),  Rational(3),
                            Rational(-1), Rational(-2), Rational(1, 2)};

// Parity-homogeneous pseudo-random value for one variable, or nullopt when
// the variable's spec cannot be met over this signature.
std::optional<SuperPolynomial> random_value(const VarSpec& spec, const ValuePool& pool,
                                            const Signature& sig, std::mt19937_64& rng) {
  unsigned lo = spec.generator_only ? 1 : spec.min_degree;
  unsigned hi = spec.generator_only ? 1 : static_cast<unsigned>(pool.even.size());
  std::vector<Parity> parities;
  for (Parity par : {Parity::even, Parity::odd}) {
    if (spec.kind == VarKind::even && par != Parity::even) continue;
    if (spec.kind == VarKind::odd && par != Parity::odd) continue;
    for (unsigned d = lo; d <= hi; ++d)
      if (!pool.at(par, d).empty()) {
        parities.push_back(par);
        break;
      }
  }
  if (parities.empty()) return std::nullopt;
  Parity par = parities[rng() % parities.size()];

  auto pick = [&]() -> const BasisMonomial& {
    for (;;) {
      unsigned d = lo + static_cast<unsigned>(rng() % (hi - lo + 1));
      const auto& v = pool.at(par, d);
      if (!v.empty()) return v[rng() % v.size()];
    }
  };
  SuperPolynomial f(sig);
  f.add_term(pick(), kCoeffs[rng() % std::size(kCoeffs)]);
  if (rng() % 5 < 2) f.add_term(pick(), kCoeffs[rng() % std::size(kCoeffs)]);
  if (f.is_zero()) f.add_term(pick(), Rational(1));
  return f;
}

bool holds_for(const IdentityPattern& pat, const std::vector<SuperPolynomial>& values) {
  std::vector<unsigned> par(values.size(), 0);
  for (std::size_t i = 0; i < values.size(); ++i) {
    PolyParity pp = parity(values[i]);
    assert(pp != PolyParity::mixed);
    par[i] = pp == PolyParity::odd ? 1 : 0;
  }
  SuperPolynomial lhs = eval_pattern(pat.lhs, values);
  if (!pat.rhs) return lhs.is_zero();
  SuperPolynomial rhs = eval_pattern(pat.rhs, values);
  unsigned e = 0;
  for (const SignTerm& t : pat.sign) {
    unsigned prod = 1;
    for (unsigned v : t.vars) prod *= par.at(v - 1);
    e += prod;
  }
  return lhs == (e % 2 ? negate(rhs) : rhs);
}

CheckFailure make_witness(const std::string& phase,
                          const std::vector<SuperPolynomial>& values) {
  CheckFailure w;
  w.phase = phase;
  for (const auto& v : values) w.substitution.push_back(to_text(v));
  return w;
}

}  // namespace

CheckResult check_identity(const IdentityPattern& pat, const Signature& sig,
                           const CheckOptions& opts) {
  CheckResult res;
  ValuePool pool = build_pool(sig, std::max(2u, opts.max_poly_degree));

  for (unsigned t = 0; t < opts.trials; ++t) {
    std::mt19937_64 rng(opts.seed + t);
    std::vector<SuperPolynomial> values;
    values.reserve(pat.vars.size());
    bool vacuous = false;
    for (const VarSpec& spec : pat.vars) {
      auto v = random_value(spec, pool, sig, rng);
      if (!v) {
        vacuous = true;
        break;
      }
      values.push_back(std::move(*v));
    }
    if (vacuous) break;
    ++res.random_trials;
    if (!holds_for(pat, values)) {
      res.pass = false;
      res.witness = make_witness("random", values);
      return res;
    }
  }

  if (!opts.exhaustive) return res;

  // Exhaustive sweep: generators for degree-1 variables, full degree-2 layer
  // for variables requiring higher degree.
  std::vector<std::vector<SuperPolynomial>> choices;
  for (const VarSpec& spec : pat.vars) {
    std::vector<SuperPolynomial> c;
    unsigned d = spec.generator_only || spec.min_degree <= 1 ? 1 : spec.min_degree;
    for (Parity par : {Parity::even, Parity::odd}) {
      if (spec.kind == VarKind::even && par != Parity::even) continue;
      if (spec.kind == VarKind::odd && par != Parity::odd) continue;
      if (d > pool.even.size()) continue;
      for (const BasisMonomial& m : pool.at(par, d))
        c.push_back(SuperPolynomial::monomial(sig, m));
    }
    if (c.empty()) return res;  // vacuous over this signature
    choices.push_back(std::move(c));
  }
  unsigned long count = 1;
  for (const auto& c : choices) {
    count *= c.size();
    if (count > opts.exhaustive_cap) return res;
  }

  std::vector<std::size_t> idx(choices.size(), 0);
  std::vector<SuperPolynomial> values;
  for (;;) {
    values.clear();
    for (std::size_t i = 0; i < choices.size(); ++i) values.push_back(choices[i][idx[i]]);
    ++res.exhaustive_cases;
    if (!holds_for(pat, values)) {
      res.pass = false;
      res.witness = make_witness("exhaustive", values);
      return res;
    }
    std::size_t i = 0;
    while (i < idx.size() && ++idx[i] == choices[i].size()) idx[i++] = 0;
    if (i == idx.size()) break;
  }
  return res;
}

PermuteCheckResult check_permutation_identity(const Signature& sig, bool left_side,
                                              unsigned k, unsigned l,
                                              unsigned trials, std::uint64_t seed) {
  PermuteCheckResult res;
  if ((k > 0 && sig.p == 0) || (l > 0 && sig.q == 0)) return res;
  if (k + l == 0) throw DomainError("permutation check needs k + l >= 1");

  unsigned long fact = 1;
  for (unsigned i = 2; i <= k + l; ++i) fact *= i;
  bool exhaustive = fact <= 720;

  std::vector<BasisMonomial> small;
  for (unsigned d = 1; d <= 3; ++d)
    for (BasisMonomial& m : monomials_of_degree(sig, d)) small.push_back(std::move(m));

  for (unsigned t = 0; t < trials; ++t) {
    std::mt19937_64 rng(seed + t);
    std::vector<Generator> gens;
    for (unsigned i = 0; i < k; ++i)
      gens.push_back({Parity::even, 1 + static_cast<unsigned>(rng() % sig.p)});
    for (unsigned j = 0; j < l; ++j)
      gens.push_back({Parity::odd, 1 + static_cast<unsigned>(rng() % sig.q)});
    SuperPolynomial u =
        SuperPolynomial::monomial(sig, small[rng() % small.size()],
                                  kCoeffs[rng() % std::size(kCoeffs)]);

    // Sorted stack: evens applied outermost in slot order, then odds.
    SuperPolynomial sorted = u;
    if (left_side) {
      for (unsigned s = k + l; s-- > 0;)
        sorted = mul(SuperPolynomial::monomial(sig, gens[s]), sorted);
    } else {
      for (unsigned s = 0; s < k + l; ++s)
        sorted = mul(sorted, SuperPolynomial::monomial(sig, gens[s]));
    }

    std::vector<unsigned> perm(k + l);
    std::iota(perm.begin(), perm.end(), 0);
    auto run_one = [&](const std::vector<unsigned>& sigma) -> bool {
      SuperPolynomial lhs = u;
      if (left_side) {
        for (unsigned pos = k + l; pos-- > 0;)
          lhs = mul(SuperPolynomial::monomial(sig, gens[sigma[pos]]), lhs);
      } else {
        for (unsigned pos = 0; pos < k + l; ++pos)
          lhs = mul(lhs, SuperPolynomial::monomial(sig, gens[sigma[pos]]));
      }
      // Inversions among the odd slots of sigma.
      std::vector<unsigned> odd_seq;
      for (unsigned s : sigma)
        if (s >= k) odd_seq.push_back(s);
      unsigned inv = 0;
      for (std::size_t i = 0; i < odd_seq.size(); ++i)
        for (std::size_t j = i + 1; j < odd_seq.size(); ++j)
          if (odd_seq[i] > odd_seq[j]) ++inv;
      ++res.cases;
      return lhs == (inv % 2 ? negate(sorted) : sorted);
    };

    bool ok = true;
    if (exhaustive) {
      std::sort(perm.begin(), perm.end());
      do {
        if (!run_one(perm)) {
          ok = false;
          break;
        }
      } while (std::next_permutation(perm.begin(), perm.end()));
    } else {
      for (unsigned r = 0; r < 3 && ok; ++r) {
        std::shuffle(perm.begin(), perm.end(), rng);
        ok = run_one(perm);
      }
    }
    if (!ok) {
      res.pass = false;
      res.witness = "trial " + std::to_string(t);
      return res;
    }
  }
  return res;
}

}  // namespace bicomm
