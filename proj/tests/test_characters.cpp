#include <doctest.h>

#include <map>

#include "bicomm/characters.hpp"
#include "bicomm/series.hpp"

using namespace bicomm;

namespace {

// independent count of standard tableaux by peeling removable corners
unsigned long count_syt(Partition p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
  if (p.empty()) return 1;
  unsigned long total = 0;
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (i + 1 < p.size() && p[i + 1] == p[i]) continue;
    Partition q = p;
    q[i] -= 1;
    total += count_syt(q);
  }
  return total;
}

MultiPoly from_terms(unsigned nvars,
                     std::initializer_list<std::pair<std::vector<unsigned>, long>> ts) {
  MultiPoly f(nvars);
  for (const auto& [e, c] : ts) f.add_term(e, Integer(c));
  return f;
}

}  // namespace

TEST_CASE("partition helpers") {
  CHECK(partitions_of(4).size() == 5);
  CHECK(partitions_of(0) == std::vector<Partition>{{}});
  CHECK(conjugate({3, 1}) == Partition{2, 1, 1});
  CHECK(conjugate({}) == Partition{});
  CHECK(partition_weight({2, 2, 1}) == 5);
  CHECK_THROWS_AS(validate_partition({1, 2}), DomainError);
}

TEST_CASE("Schur polynomials in few variables") {
  CHECK(schur({2}, 2) == from_terms(2, {{{2, 0}, 1}, {{1, 1}, 1}, {{0, 2}, 1}}));
  CHECK(schur({1}, 3) ==
        from_terms(3, {{{1, 0, 0}, 1}, {{0, 1, 0}, 1}, {{0, 0, 1}, 1}}));
  CHECK(schur({2, 1}, 2) == from_terms(2, {{{2, 1}, 1}, {{1, 2}, 1}}));
  CHECK(schur({1, 1, 1}, 2).is_zero());
  CHECK(schur({}, 2) == MultiPoly::constant(2, 1));
}

TEST_CASE("hook length count matches corner peeling") {
  for (unsigned n = 0; n <= 7; ++n)
    for (const Partition& p : partitions_of(n)) {
      INFO("partition of " << n);
      CHECK(standard_tableaux(p) == Integer(count_syt(p)));
    }
  CHECK(standard_tableaux({2, 1}) == 2);
  CHECK(standard_tableaux({3, 1, 1}) == 6);
  CHECK(standard_tableaux({5}) == 1);
}

TEST_CASE("row products list horizontal strips") {
  auto rows = young_row_product({2}, 2, 3);
  CHECK(rows == std::vector<Partition>{{4}, {3, 1}, {2, 2}});
  CHECK(young_row_product({1}, 1, 3) == std::vector<Partition>{{2}, {1, 1}});
  CHECK(young_row_product({}, 2, 3) == std::vector<Partition>{{2}});
}

TEST_CASE("column products list vertical strips") {
  ColumnProduct c = young_column_product({1, 1}, 1, 3);
  CHECK_FALSE(c.vanishes);
  CHECK(c.partitions == std::vector<Partition>{{2, 1}, {1, 1, 1}});

  ColumnProduct e = young_column_product({}, 2, 3);
  CHECK(e.partitions == std::vector<Partition>{{1, 1}});

  ColumnProduct v = young_column_product({1}, 4, 3);
  CHECK(v.vanishes);

  ColumnProduct f = young_column_product({2}, 2, 3);
  CHECK(f.partitions == std::vector<Partition>{{3, 1}, {2, 1, 1}});
}

TEST_CASE("row and column products expand actual Schur products") {
  const unsigned d = 3;
  for (const Partition& lam : {Partition{}, Partition{1}, Partition{2}, Partition{2, 1}}) {
    for (unsigned n = 1; n <= 2; ++n) {
      MultiPoly lhs = mul(schur(lam, d), schur({n}, d));
      MultiPoly rhs(d);
      for (const Partition& mu : young_row_product(lam, n, d))
        rhs = add(rhs, schur(mu, d));
      CHECK(lhs == rhs);

      Partition column(n, 1);
      MultiPoly lhs2 = mul(schur(lam, d), schur(column, d));
      MultiPoly rhs2(d);
      ColumnProduct cp = young_column_product(lam, n, d);
      if (!cp.vanishes)
        for (const Partition& mu : cp.partitions) rhs2 = add(rhs2, schur(mu, d));
      CHECK(lhs2 == rhs2);
    }
  }
}

TEST_CASE("double character multiplicities, frozen cases") {
  CHECK(multiplicity({2, 1}, {1}) == 4);
  CHECK(multiplicity({3}, {}) == 2);
  CHECK(multiplicity({1, 1, 1}, {}) == 0);
  CHECK(multiplicity({1}, {1}) == 2);
  CHECK(multiplicity({1}, {}) == 1);
  CHECK(multiplicity({}, {1}) == 1);
  CHECK(multiplicity({}, {}) == 0);
  CHECK(multiplicity({2}, {}) == 1);
  CHECK(multiplicity({1, 1}, {}) == 1);
  CHECK(multiplicity({}, {1, 1}) == 1);
  CHECK(multiplicity({}, {2}) == 1);
  CHECK(multiplicity({2}, {2}) == 3);
  CHECK(multiplicity({}, {3}) == 0);        // a column of width three
  CHECK(multiplicity({2, 2, 1}, {1}) == 0);  // three rows
}

TEST_CASE("multiplicities resolve the codimensions") {
  for (unsigned p = 0; p <= 4; ++p)
    for (unsigned q = 0; p + q >= 1 && q <= 4 - p; ++q) {
      Integer sum = 0;
      for (const Partition& lam : partitions_of(p))
        for (const Partition& mu : partitions_of(q))
          sum += Integer(multiplicity(lam, mu)) * standard_tableaux(lam) *
                 standard_tableaux(mu);
      CHECK(sum == codimension_super(p, q));
    }
}

TEST_CASE("multiplicity generating series matches the case formula") {
  RationalSeries s = double_multiplicity_series(6);
  REQUIRE(s.variables() ==
          std::vector<std::string>{"u1", "u2", "v1", "v2"});
  for (unsigned l1 = 0; l1 <= 6; ++l1)
    for (unsigned l2 = 0; l2 <= l1; ++l2)
      for (unsigned m1 = 0; m1 + l1 + l2 <= 6; ++m1)
        for (unsigned m2 = 0; m2 <= m1; ++m2) {
          if (l1 + l2 + m1 + m2 > 6) continue;
          Partition lam;
          if (l1) lam.push_back(l1);
          if (l2) lam.push_back(l2);
          Partition muc;
          if (m1) muc.push_back(m1);
          if (m2) muc.push_back(m2);
          Partition mu = conjugate(muc);
          INFO(l1 << "," << l2 << " / " << m1 << "," << m2);
          CHECK(s.coefficient({l1, l2, m1, m2}) ==
                Integer(multiplicity(lam, mu)));
        }
}

TEST_CASE("Schur expansion inverts small products") {
  MultiPoly f = mul(schur({2}, 3), schur({1, 1}, 3));
  std::map<Partition, Integer> parts = schur_expand(f);
  REQUIRE(parts.size() == 2);
  CHECK(parts.at({3, 1}) == 1);
  CHECK(parts.at({2, 1, 1}) == 1);

  MultiPoly back(3);
  for (const auto& [lam, c] : parts)
    back = add(back, mul(MultiPoly::constant(3, c), schur(lam, 3)));
  CHECK(back == f);

  CHECK(schur_expand(MultiPoly(3)).empty());
}

TEST_CASE("Schur expansion rejects non-symmetric or non-positive input") {
  MultiPoly f(2);
  f.add_term({1, 0}, 1);
  CHECK_THROWS_AS(schur_expand(f), DomainError);

  MultiPoly g = sub(mul(schur({1}, 2), schur({1}, 2)),
                    mul(MultiPoly::constant(2, 3), schur({2}, 2)));
  CHECK_THROWS_AS(schur_expand(g), DomainError);
}

TEST_CASE("two-block Schur expansion separates the variable groups") {
  // (u1+u2)(v1+v2) = s_(1)(U) s_(1)(V)
  MultiPoly f(4);
  for (unsigned i = 0; i < 2; ++i)
    for (unsigned j = 2; j < 4; ++j) {
      std::vector<unsigned> e(4, 0);
      e[i] = 1;
      e[j] = 1;
      f.add_term(e, 1);
    }
  auto parts = schur_expand_double(f, 2);
  REQUIRE(parts.size() == 1);
  CHECK(parts.at({Partition{1}, Partition{1}}) == 1);

  // a sum with several blocks reassembles
  MultiPoly g(4);
  auto embed = [&](const MultiPoly& a, const MultiPoly& b) {
    MultiPoly out(4);
    for (const auto& [ea, ca] : a.terms())
      for (const auto& [eb, cb] : b.terms()) {
        std::vector<unsigned> e = {ea[0], ea[1], eb[0], eb[1]};
        out.add_term(e, ca * cb);
      }
    return out;
  };
  g = add(g, embed(schur({2}, 2), schur({1, 1}, 2)));
  g = add(g, embed(schur({2}, 2), schur({1, 1}, 2)));
  g = add(g, embed(schur({1}, 2), schur({}, 2)));
  auto gp = schur_expand_double(g, 2);
  CHECK(gp.at({Partition{2}, Partition{1, 1}}) == 2);
  CHECK(gp.at({Partition{1}, Partition{}}) == 1);
  CHECK(gp.size() == 2);
}
