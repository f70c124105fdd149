// Shared test support: an independent reference evaluator for products of
// bracketed terms, a rank-based oracle for graded ideal slices, a brute-force
// oracle for the embedding preorder, a CLI runner, and a small structural
// JSON schema checker.
//
// The reference evaluator deliberately avoids the library's bitmask sign
// machinery: odd letters live in sorted vectors and every sign is obtained
// by counting inversions across explicit concatenations.

#pragma once

#include <algorithm>
#include <cstdio>
#include <map>
#include <set>
#include <stdexcept>
#include <string>
#include <tuple>
#include <vector>

#include <json.hpp>

#include "bicomm/algebra.hpp"
#include "bicomm/term.hpp"
#include "bicomm/textio.hpp"

namespace refmodel {

using bicomm::Field;
using bicomm::Generator;
using bicomm::Parity;
using bicomm::Rational;
using bicomm::Signature;

// A supercommutative word: even letters as a sorted multiset, odd letters
// as a strictly increasing vector.
struct Word {
  std::vector<unsigned> evens;
  std::vector<unsigned> odds;

  bool operator<(const Word& o) const {
    return std::tie(evens, odds) < std::tie(o.evens, o.odds);
  }
  bool operator==(const Word& o) const {
    return evens == o.evens && odds == o.odds;
  }
  bool empty() const { return evens.empty() && odds.empty(); }
  unsigned degree() const {
    return static_cast<unsigned>(evens.size() + odds.size());
  }
  unsigned odd_count() const { return static_cast<unsigned>(odds.size()); }
};

struct Mono {
  bool is_gen = false;
  Generator gen{Parity::even, 1};
  Word u, v;

  bool operator<(const Mono& o) const {
    if (is_gen != o.is_gen) return is_gen && !o.is_gen;  // generators first
    if (is_gen)
      return std::tie(gen.parity, gen.index) < std::tie(o.gen.parity, o.gen.index);
    return std::tie(u, v) < std::tie(o.u, o.v);
  }
};

using Poly = std::map<Mono, Rational>;

// Concatenate a then b and sort; reports the sign of the sort restricted to
// odd letters and whether an odd letter repeats.
inline bool concat_words(const Word& a, const Word& b, Word& out, int& sign) {
  out.evens = a.evens;
  out.evens.insert(out.evens.end(), b.evens.begin(), b.evens.end());
  std::sort(out.evens.begin(), out.evens.end());

  unsigned long inversions = 0;
  for (unsigned x : a.odds)
    for (unsigned y : b.odds) {
      if (x == y) return false;
      if (x > y) ++inversions;
    }
  out.odds = a.odds;
  out.odds.insert(out.odds.end(), b.odds.begin(), b.odds.end());
  std::sort(out.odds.begin(), out.odds.end());
  sign = (inversions % 2 == 0) ? 1 : -1;
  return true;
}

inline Word word_of(const Mono& m) {
  // only valid for generators
  Word w;
  if (m.gen.parity == Parity::even)
    w.evens.push_back(m.gen.index);
  else
    w.odds.push_back(m.gen.index);
  return w;
}

inline void add_mono(Poly& p, const Mono& m, const Rational& c) {
  if (c == 0) return;
  Rational& slot = p[m];
  slot += c;
  if (slot == 0) p.erase(m);
}

inline void mul_mono(Poly& out, const Mono& a, const Mono& b, const Rational& c) {
  Word ua = a.is_gen ? word_of(a) : a.u;
  Word va = a.is_gen ? Word{} : a.v;
  Word ub = b.is_gen ? word_of(b) : b.u;
  Word vb = b.is_gen ? Word{} : b.v;

  int sign = 1;
  Mono r;
  r.is_gen = false;
  if (a.is_gen && b.is_gen) {
    r.u = ua;
    r.v = ub;
  } else if (a.is_gen) {
    // x (u|v) = (xu)|v
    int s = 1;
    if (!concat_words(ua, ub, r.u, s)) return;
    sign *= s;
    r.v = vb;
  } else if (b.is_gen) {
    // (u|v) x = u|(vx)
    r.u = ua;
    int s = 1;
    if (!concat_words(va, ub, r.v, s)) return;
    sign *= s;
  } else {
    // (u1|v1)(u2|v2) = +- (u1 u2)|(v2 v1)
    unsigned swap = va.odd_count() * (ub.odd_count() + vb.odd_count());
    if (swap % 2 == 1) sign = -sign;
    int s = 1;
    if (!concat_words(ua, ub, r.u, s)) return;
    sign *= s;
    if (!concat_words(vb, va, r.v, s)) return;
    sign *= s;
  }
  add_mono(out, r, sign > 0 ? c : -c);
}

inline Poly mul(const Poly& a, const Poly& b) {
  Poly out;
  for (const auto& [ma, ca] : a)
    for (const auto& [mb, cb] : b) mul_mono(out, ma, mb, ca * cb);
  return out;
}

inline Poly evaluate(const bicomm::TermPtr& t) {
  if (t->is_leaf()) {
    Poly p;
    Mono m;
    m.is_gen = true;
    m.gen = t->gen();
    p[m] = 1;
    return p;
  }
  return mul(evaluate(t->parts().first), evaluate(t->parts().second));
}

// Convert to the library representation for comparison.
inline bicomm::BasisMonomial to_library(const Mono& m, const Signature& sig) {
  if (m.is_gen) return bicomm::BasisMonomial{m.gen};
  bicomm::TensorMonomial t;
  auto pack_evens = [&](const std::vector<unsigned>& evens) {
    std::vector<unsigned> exp(sig.p, 0);
    for (unsigned i : evens) ++exp.at(i - 1);
    return exp;
  };
  t.yu = pack_evens(m.u.evens);
  t.yv = pack_evens(m.v.evens);
  for (unsigned i : m.u.odds) t.zu |= bicomm::odd_bit(i);
  for (unsigned i : m.v.odds) t.zv |= bicomm::odd_bit(i);
  return bicomm::BasisMonomial{t};
}

inline bicomm::SuperPolynomial to_library(const Poly& p, const Signature& sig) {
  bicomm::SuperPolynomial f(sig);
  for (const auto& [m, c] : p) f.add_term(to_library(m, sig), c);
  return f;
}

inline bicomm::SuperPolynomial normalize(const std::string& text, const Signature& sig) {
  return to_library(evaluate(bicomm::parse_term(text, sig)), sig);
}

}  // namespace refmodel

namespace oracle {

using bicomm::Rational;
using bicomm::Signature;
using bicomm::SuperPolynomial;

inline unsigned long gauss_rank(std::vector<std::vector<Rational>> m) {
  unsigned long rank = 0;
  if (m.empty()) return 0;
  std::size_t cols = m[0].size();
  for (std::size_t col = 0; col < cols && rank < m.size(); ++col) {
    std::size_t pivot = rank;
    while (pivot < m.size() && m[pivot][col] == 0) ++pivot;
    if (pivot == m.size()) continue;
    std::swap(m[rank], m[pivot]);
    for (std::size_t r = 0; r < m.size(); ++r) {
      if (r == rank || m[r][col] == 0) continue;
      Rational f = m[r][col] / m[rank][col];
      for (std::size_t c = col; c < cols; ++c) m[r][c] -= f * m[rank][c];
    }
    ++rank;
  }
  return rank;
}

// Every element of degree d obtained from the ideal generators by sequences
// of one-sided generator multiplications, with no pruning at all.
inline std::vector<SuperPolynomial> ideal_slice(const Signature& sig,
                                                const std::vector<SuperPolynomial>& ideal,
                                                unsigned d) {
  std::vector<SuperPolynomial> slice, layer;
  std::set<std::string> seen;
  auto keep = [&](const SuperPolynomial& f) {
    if (f.is_zero()) return;
    if (!seen.insert(bicomm::to_text(f)).second) return;
    if (f.degree() == d)
      slice.push_back(f);
    else if (f.degree() < d)
      layer.push_back(f);
  };
  for (const SuperPolynomial& g : ideal) keep(g);
  while (!layer.empty()) {
    std::vector<SuperPolynomial> next;
    std::swap(next, layer);
    for (const SuperPolynomial& f : next) {
      for (unsigned i = 1; i <= sig.p + sig.q; ++i) {
        bicomm::Generator x = i <= sig.p
                                  ? bicomm::Generator{bicomm::Parity::even, i}
                                  : bicomm::Generator{bicomm::Parity::odd, i - sig.p};
        SuperPolynomial xf = bicomm::SuperPolynomial::monomial(sig, bicomm::BasisMonomial{x});
        keep(bicomm::mul(xf, f));
        keep(bicomm::mul(f, xf));
      }
    }
  }
  return slice;
}

inline unsigned long slice_rank(const Signature& sig,
                                const std::vector<SuperPolynomial>& ideal, unsigned d) {
  std::vector<bicomm::BasisMonomial> basis = bicomm::monomials_of_degree(sig, d);
  std::map<bicomm::BasisMonomial, std::size_t, bicomm::MonomialLess> column;
  for (std::size_t i = 0; i < basis.size(); ++i) column.emplace(basis[i], i);
  std::vector<std::vector<Rational>> rows;
  for (const SuperPolynomial& f : ideal_slice(sig, ideal, d)) {
    std::vector<Rational> row(basis.size(), 0);
    for (const auto& [m, c] : f.terms()) row[column.at(m)] = c;
    rows.push_back(std::move(row));
  }
  return gauss_rank(std::move(rows));
}

inline unsigned long quotient_dim(const Signature& sig,
                                  const std::vector<SuperPolynomial>& ideal,
                                  unsigned d) {
  return bicomm::monomials_of_degree(sig, d).size() - slice_rank(sig, ideal, d);
}

inline SuperPolynomial homogeneous_component(const SuperPolynomial& f, unsigned d) {
  SuperPolynomial out(f.signature());
  for (const auto& [m, c] : f.terms())
    if (bicomm::total_degree(m) == d) out.add_term(m, c);
  return out;
}

// Membership for homogeneous ideals: each homogeneous component must lie in
// the span of the corresponding slice.
inline bool member(const Signature& sig, const std::vector<SuperPolynomial>& ideal,
                   const SuperPolynomial& f) {
  if (f.is_zero()) return true;
  for (unsigned d = 1; d <= f.degree(); ++d) {
    SuperPolynomial comp = homogeneous_component(f, d);
    if (comp.is_zero()) continue;
    std::vector<bicomm::BasisMonomial> basis = bicomm::monomials_of_degree(sig, d);
    std::map<bicomm::BasisMonomial, std::size_t, bicomm::MonomialLess> column;
    for (std::size_t i = 0; i < basis.size(); ++i) column.emplace(basis[i], i);
    std::vector<std::vector<Rational>> rows;
    for (const SuperPolynomial& g : ideal_slice(sig, ideal, d)) {
      std::vector<Rational> row(basis.size(), 0);
      for (const auto& [m, c] : g.terms()) row[column.at(m)] = c;
      rows.push_back(std::move(row));
    }
    unsigned long r0 = gauss_rank(rows);
    std::vector<Rational> row(basis.size(), 0);
    for (const auto& [m, c] : comp.terms()) row[column.at(m)] = c;
    rows.push_back(std::move(row));
    if (gauss_rank(std::move(rows)) != r0) return false;
  }
  return true;
}

// Brute-force check of the embedding preorder on tensors: enumerate every
// strictly increasing slot map via subsets instead of the greedy scan.
inline bool weight_preceq(const bicomm::TensorMonomial& a,
                          const bicomm::TensorMonomial& b) {
  auto embeds = [](const std::vector<std::pair<unsigned, unsigned>>& small,
                   const std::vector<std::pair<unsigned, unsigned>>& big) {
    std::size_t k = small.size(), l = big.size();
    if (k == 0) return true;
    if (k > l) return false;
    std::vector<bool> pick(l, false);
    std::fill(pick.begin(), pick.begin() + static_cast<long>(k), true);
    do {
      std::vector<std::size_t> idx;
      for (std::size_t i = 0; i < l; ++i)
        if (pick[i]) idx.push_back(i);
      bool ok = true;
      for (std::size_t j = 0; j < k; ++j)
        if (small[j].first > big[idx[j]].first || small[j].second > big[idx[j]].second) {
          ok = false;
          break;
        }
      if (ok) return true;
    } while (std::prev_permutation(pick.begin(), pick.end()));
    return false;
  };

  auto even_slots = [](const bicomm::TensorMonomial& t) {
    std::vector<std::pair<unsigned, unsigned>> s;
    std::size_t top = std::max(t.yu.size(), t.yv.size());
    for (std::size_t i = 0; i < top; ++i)
      s.emplace_back(i < t.yu.size() ? t.yu[i] : 0, i < t.yv.size() ? t.yv[i] : 0);
    while (!s.empty() && s.back() == std::pair<unsigned, unsigned>{0, 0}) s.pop_back();
    return s;
  };
  auto odd_slots = [](const bicomm::TensorMonomial& t) {
    std::vector<std::pair<unsigned, unsigned>> s;
    bicomm::OddSet all = t.zu | t.zv;
    for (unsigned i = 1; i <= 64 && all >> (i - 1); ++i)
      s.emplace_back((t.zu >> (i - 1)) & 1, (t.zv >> (i - 1)) & 1);
    while (!s.empty() && s.back() == std::pair<unsigned, unsigned>{0, 0}) s.pop_back();
    return s;
  };

  return embeds(even_slots(a), even_slots(b)) && embeds(odd_slots(a), odd_slots(b));
}

}  // namespace oracle

namespace testcli {

struct CliResult {
  int status;
  std::string out;
};

#ifdef BICOMM_CLI_PATH
inline CliResult run(const std::string& args, bool merge_stderr = false) {
  std::string cmd = std::string(BICOMM_CLI_PATH) + " " + args +
                    (merge_stderr ? " 2>&1" : " 2>/dev/null");
  FILE* pipe = popen(cmd.c_str(), "r");
  if (!pipe) throw std::runtime_error("popen failed");
  std::string out;
  char buf[4096];
  while (fgets(buf, sizeof buf, pipe)) out += buf;
  int rc = pclose(pipe);
  return {rc == -1 ? -1 : WEXITSTATUS(rc), out};
}
#endif

// Structural validator for the subset of JSON Schema the repo's schemas use:
// type, required, properties, additionalProperties:false, items, minimum.
inline bool schema_validate(const nlohmann::json& schema, const nlohmann::json& value,
                            std::string& err) {
  using nlohmann::json;
  if (schema.contains("type")) {
    auto matches = [&](const std::string& t) {
      if (t == "object") return value.is_object();
      if (t == "array") return value.is_array();
      if (t == "string") return value.is_string();
      if (t == "integer") return value.is_number_integer();
      if (t == "number") return value.is_number();
      if (t == "boolean") return value.is_boolean();
      if (t == "null") return value.is_null();
      return false;
    };
    bool ok = false;
    if (schema["type"].is_array()) {
      for (const auto& t : schema["type"]) ok = ok || matches(t.get<std::string>());
    } else {
      ok = matches(schema["type"].get<std::string>());
    }
    if (!ok) {
      err = "type mismatch at " + value.dump().substr(0, 60);
      return false;
    }
  }
  if (schema.contains("minimum") && value.is_number_integer()) {
    if (value.get<long long>() < schema["minimum"].get<long long>()) {
      err = "below minimum: " + value.dump();
      return false;
    }
  }
  if (value.is_object()) {
    if (schema.contains("required"))
      for (const auto& key : schema["required"])
        if (!value.contains(key.get<std::string>())) {
          err = "missing required key " + key.get<std::string>();
          return false;
        }
    const json props = schema.value("properties", json::object());
    bool closed = schema.contains("additionalProperties") &&
                  schema["additionalProperties"].is_boolean() &&
                  !schema["additionalProperties"].get<bool>();
    for (const auto& [key, sub] : value.items()) {
      if (props.contains(key)) {
        if (!schema_validate(props[key], sub, err)) return false;
      } else if (closed) {
        err = "unexpected key " + key;
        return false;
      }
    }
  }
  if (value.is_array() && schema.contains("items")) {
    for (const auto& item : value)
      if (!schema_validate(schema["items"], item, err)) return false;
  }
  return true;
}

}  // namespace testcli
