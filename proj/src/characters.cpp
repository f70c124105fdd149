#include "bicomm/characters.hpp"

#include <algorithm>

namespace bicomm {

void validate_partition(const Partition& p) {
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (p[i] == 0) throw DomainError("partition parts must be positive");
    if (i > 0 && p[i] > p[i - 1])
      throw DomainError("partition parts must be weakly decreasing");
  }
}

unsigned partition_weight(const Partition& p) {
  unsigned w = 0;
  for (unsigned x : p) w += x;
  return w;
}

Partition conjugate(const Partition& p) {
  validate_partition(p);
  Partition c;
  if (p.empty()) return c;
  c.resize(p[0]);
  for (unsigned j = 0; j < p[0]; ++j) {
    unsigned count = 0;
    for (unsigned part : p)
      if (part > j) ++count;
    c[j] = count;
  }
  return c;
}

std::vector<Partition> partitions_of(unsigned n) {
  std::vector<Partition> out;
  Partition cur;
  auto rec = [&](auto&& self, unsigned rem, unsigned maxpart) -> void {
    if (rem == 0) {
      out.push_back(cur);
      return;
    }
    for (unsigned part = std::min(rem, maxpart); part >= 1; --part) {
      cur.push_back(part);
      self(self, rem - part, part);
      cur.pop_back();
    }
  };
  rec(rec, n, n == 0 ? 1 : n);
  return out;
}

Integer standard_tableaux(const Partition& p) {
  validate_partition(p);
  unsigned n = partition_weight(p);
  Integer f;
  mpz_fac_ui(f.get_mpz_t(), n);
  Partition c = conjugate(p);
  for (unsigned i = 0; i < p.size(); ++i) {
    for (unsigned j = 0; j < p[i]; ++j) {
      unsigned hook = (p[i] - j) + (c[j] - i) - 1;
      mpz_divexact_ui(f.get_mpz_t(), f.get_mpz_t(), hook);
    }
  }
  return f;
}

MultiPoly schur(const Partition& lambda, unsigned d) {
  validate_partition(lambda);
  MultiPoly out(d);
  if (lambda.size() > d) return out;
  if (lambda.empty()) return MultiPoly::constant(d, 1);

  // Fill cells row by row: weakly increasing along rows, strictly down
  // columns, entries in 1..d.  Accumulate the content of each filling.
  std::vector<std::vector<unsigned>> rows(lambda.size());
  for (std::size_t i = 0; i < lambda.size(); ++i) rows[i].assign(lambda[i], 0);
  std::vector<unsigned> content(d, 0);

  auto rec = [&](auto&& self, std::size_t r, std::size_t cidx) -> void {
    if (r == rows.size()) {
      out.add_term(content, 1);
      return;
    }
    std::size_t nr = r, nc = cidx + 1;
    if (nc == rows[r].size()) {
      nr = r + 1;
      nc = 0;
    }
    unsigned lo = 1;
    if (cidx > 0) lo = std::max(lo, rows[r][cidx - 1]);
    if (r > 0) lo = std::max(lo, rows[r - 1][cidx] + 1);
    for (unsigned e = lo; e <= d; ++e) {
      rows[r][cidx] = e;
      ++content[e - 1];
      self(self, nr, nc);
      --content[e - 1];
    }
    rows[r][cidx] = 0;
  };
  rec(rec, 0, 0);
  return out;
}

std::vector<Partition> young_row_product(const Partition& lambda, unsigned n,
                                         unsigned d) {
  validate_partition(lambda);
  if (lambda.size() > d) throw DomainError("shape has more rows than variables");
  std::vector<Partition> out;
  std::size_t rows = lambda.size() + 1;
  Partition mu(rows, 0);
  // Interlacing mu_1 >= lambda_1 >= mu_2 >= lambda_2 >= ... with |mu/lambda| = n.
  auto rec = [&](auto&& self, std::size_t i, unsigned rem) -> void {
    if (i == rows) {
      if (rem == 0) {
        Partition res(mu.begin(), mu.end());
        while (!res.empty() && res.back() == 0) res.pop_back();
        if (res.size() <= d) out.push_back(std::move(res));
      }
      return;
    }
    unsigned lo = i < lambda.size() ? lambda[i] : 0;
    unsigned hi = i == 0 ? lo + rem : std::min(lambda[i - 1], lo + rem);
    for (unsigned v = lo; v <= hi; ++v) {
      mu[i] = v;
      self(self, i + 1, rem - (v - lo));
      mu[i] = 0;
    }
  };
  rec(rec, 0, n);
  std::sort(out.begin(), out.end(), std::greater<Partition>());
  return out;
}

ColumnProduct young_column_product(const Partition& lambda, unsigned n, unsigned d) {
  validate_partition(lambda);
  if (lambda.size() > d) throw DomainError("shape has more rows than variables");
  ColumnProduct out;
  if (n > d) {
    out.vanishes = true;
    return out;
  }
  // mu_i in {lambda_i, lambda_i + 1} rowwise, n boxes added, at most d rows.
  std::size_t rows = std::min<std::size_t>(d, lambda.size() + n);
  Partition mu(rows, 0);
  auto rec = [&](auto&& self, std::size_t i, unsigned rem) -> void {
    if (i == rows) {
      if (rem == 0) {
        Partition res(mu.begin(), mu.end());
        while (!res.empty() && res.back() == 0) res.pop_back();
        for (std::size_t r = 1; r < res.size(); ++r)
          if (res[r] > res[r - 1]) return;
        out.partitions.push_back(std::move(res));
      }
      return;
    }
    unsigned base = i < lambda.size() ? lambda[i] : 0;
    mu[i] = base;
    self(self, i + 1, rem);
    if (rem > 0) {
      mu[i] = base + 1;
      self(self, i + 1, rem - 1);
    }
    mu[i] = 0;
  };
  rec(rec, 0, n);
  std::sort(out.partitions.begin(), out.partitions.end(), std::greater<Partition>());
  return out;
}

unsigned long multiplicity(const Partition& lambda, const Partition& mu) {
  validate_partition(lambda);
  validate_partition(mu);
  if (lambda.size() > 2) return 0;            // more than two rows
  if (!mu.empty() && mu[0] > 2) return 0;     // more than two columns
  unsigned l1 = lambda.empty() ? 0 : lambda[0];
  unsigned l2 = lambda.size() > 1 ? lambda[1] : 0;
  unsigned m1 = static_cast<unsigned>(mu.size());  // conjugate first part
  unsigned m2 = 0;
  for (unsigned part : mu)
    if (part >= 2) ++m2;
  unsigned w = partition_weight(lambda) + partition_weight(mu);
  if (w == 0) return 0;
  if (w == 1) return 1;
  if (l2 + m2 > 0) return static_cast<unsigned long>(l1 - l2 + 1) * (m1 - m2 + 1);
  return static_cast<unsigned long>(l1 + 1) * (m1 + 1) - 2;
}

RationalSeries double_multiplicity_series(unsigned trunc) {
  // u1 + v1 + 1/D - 2/((1-u1)(1-v1)) + 1 over the common denominator
  // D = (1-u1)^2 (1-u1 u2) (1-v1)^2 (1-v1 v2).
  const unsigned nv = 4;
  MultiPoly one = MultiPoly::constant(nv, 1);
  MultiPoly u1 = MultiPoly::variable(nv, 0);
  MultiPoly u1u2 = mul(u1, MultiPoly::variable(nv, 1));
  MultiPoly v1 = MultiPoly::variable(nv, 2);
  MultiPoly v1v2 = mul(v1, MultiPoly::variable(nv, 3));

  MultiPoly full = mul(mul(pow(sub(one, u1), 2), sub(one, u1u2)),
                       mul(pow(sub(one, v1), 2), sub(one, v1v2)));
  MultiPoly half = mul(mul(sub(one, u1), sub(one, u1u2)),
                       mul(sub(one, v1), sub(one, v1v2)));
  MultiPoly numer = add(mul(add(add(u1, v1), one), full),
                        sub(one, mul(MultiPoly::constant(nv, 2), half)));

  std::vector<DenomFactor> denom{{{1, 0, 0, 0}, 2},
                                 {{1, 1, 0, 0}, 1},
                                 {{0, 0, 1, 0}, 2},
                                 {{0, 0, 1, 1}, 1}};
  return RationalSeries({"u1", "u2", "v1", "v2"}, std::move(numer), std::move(denom),
                        trunc);
}

namespace {

Partition exponent_to_partition(const std::vector<unsigned>& e) {
  Partition p(e);
  while (!p.empty() && p.back() == 0) p.pop_back();
  validate_partition(p);
  return p;
}

void require_symmetric(const MultiPoly& f) {
  unsigned d = f.nvars();
  for (unsigned i = 0; i + 1 < d; ++i) {
    MultiPoly swapped(d);
    for (const auto& [e, c] : f.terms()) {
      std::vector<unsigned> se = e;
      std::swap(se[i], se[i + 1]);
      swapped.add_term(std::move(se), c);
    }
    if (!(swapped == f)) throw DomainError("polynomial is not symmetric");
  }
}

}  // namespace

std::map<Partition, Integer> schur_expand(const MultiPoly& f) {
  require_symmetric(f);
  std::map<Partition, Integer> out;
  MultiPoly g = f;
  while (!g.is_zero()) {
    // Lexicographically greatest exponent; for a symmetric polynomial it is
    // weakly decreasing and the Schur polynomial of that shape reproduces it
    // with coefficient 1.
    auto it = g.terms().rbegin();
    std::vector<unsigned> e = it->first;
    Integer c = it->second;
    for (std::size_t i = 0; i + 1 < e.size(); ++i)
      if (e[i + 1] > e[i]) throw DomainError("polynomial is not symmetric");
    if (c < 0) throw DomainError("negative coefficient in the Schur expansion");
    Partition lam = exponent_to_partition(e);
    out[lam] += c;
    g = sub(g, mul(MultiPoly::constant(g.nvars(), c), schur(lam, g.nvars())));
  }
  return out;
}

std::map<std::pair<Partition, Partition>, Integer> schur_expand_double(
    const MultiPoly& f, unsigned pu) {
  if (pu > f.nvars()) throw DomainError("alphabet split exceeds arity");
  unsigned qv = f.nvars() - pu;
  std::map<std::pair<Partition, Partition>, Integer> out;
  MultiPoly g = f;
  while (!g.is_zero()) {
    // Largest U-exponent block, then expand its V-coefficient.
    const std::vector<unsigned>* best = nullptr;
    for (const auto& [e, c] : g.terms()) {
      if (!best) {
        best = &e;
        continue;
      }
      for (unsigned i = 0; i < pu; ++i) {
        if (e[i] != (*best)[i]) {
          if (e[i] > (*best)[i]) best = &e;
          break;
        }
      }
    }
    std::vector<unsigned> ublock(best->begin(), best->begin() + pu);
    Partition lam = exponent_to_partition(ublock);
    MultiPoly vcoeff(qv);
    for (const auto& [e, c] : g.terms()) {
      if (!std::equal(e.begin(), e.begin() + pu, ublock.begin())) continue;
      vcoeff.add_term(std::vector<unsigned>(e.begin() + pu, e.end()), c);
    }
    std::map<Partition, Integer> vparts = schur_expand(vcoeff);
    MultiPoly su = schur(lam, pu);
    for (const auto& [mu, c] : vparts) {
      if (c != 0) out[{lam, mu}] += c;
      MultiPoly sv = schur(mu, qv);
      // Lift s_lam(U) * s_mu(V) to the joint arity and subtract.
      MultiPoly prod(g.nvars());
      for (const auto& [eu, cu] : su.terms()) {
        for (const auto& [ev, cv] : sv.terms()) {
          std::vector<unsigned> e(eu);
          e.insert(e.end(), ev.begin(), ev.end());
          prod.add_term(std::move(e), cu * cv);
        }
      }
      g = sub(g, mul(MultiPoly::constant(g.nvars(), c), prod));
    }
  }
  return out;
}

}  // namespace bicomm
