#include <doctest.h>

#include <random>

#include "bicomm/identity.hpp"
#include "bicomm/series.hpp"
#include "bicomm/term.hpp"
#include "bicomm/textio.hpp"
#include "support.hpp"

using namespace bicomm;

namespace {
Signature rat(unsigned p, unsigned q) { return Signature(p, q, Field::rationals()); }
}

TEST_CASE("bracketed terms parse and print") {
  Signature sig = rat(2, 2);
  TermPtr t = parse_term("((y1 z1) (y2 z2))", sig);
  CHECK(term_to_text(t) == "((y1 z1) (y2 z2))");
  CHECK(term_degree(t) == 4);
  CHECK(term_parity(t) == Parity::even);
  CHECK(term_parity(parse_term("(y1 z1)", sig)) == Parity::odd);

  CHECK_THROWS_AS(parse_term("(y1 y2 y3)", sig), ParseError);
  CHECK_THROWS_AS(parse_term("(y1)", sig), ParseError);
  CHECK_THROWS_AS(parse_term("(y1 (y2 y3)", sig), ParseError);
  CHECK_THROWS_AS(parse_term("y3", sig), ParseError);
}

TEST_CASE("normalization of frozen examples") {
  CHECK(to_text(normalize("(z2 (z1 y1))", rat(1, 2))) == "-1 * z1 z2 | y1");
  CHECK(normalize("(z1 (z1 y1))", rat(1, 1)).is_zero());
  CHECK(to_text(normalize("((y1 (y2 y3)) (y4 y5))", rat(5, 0))) == "y1 y2 y4 | y3 y5");
  CHECK(to_text(normalize("(y1 y1)", rat(1, 0))) == "y1 | y1");
  CHECK(to_text(normalize("((y1 y1) y1)", rat(1, 0))) == "y1 | y1^2");
  CHECK(to_text(normalize("(y1 (y1 y1))", rat(1, 0))) == "y1^2 | y1");
  CHECK(to_text(normalize("y1", rat(1, 0))) == "y1");
  CHECK(to_text(normalize("((z1 z2) (z3 z4))", rat(0, 4))) == "-1 * z1 z3 | z2 z4");
}

TEST_CASE("normalization agrees with the reference evaluator on random terms") {
  Signature sig = rat(2, 2);
  std::mt19937_64 rng(20260816);
  auto gen_name = [&]() {
    const char* names[] = {"y1", "y2", "z1", "z2"};
    return std::string(names[rng() % 4]);
  };
  std::function<std::string(unsigned)> build = [&](unsigned leaves) -> std::string {
    if (leaves <= 1) return gen_name();
    unsigned left = 1 + static_cast<unsigned>(rng() % (leaves - 1));
    return "(" + build(left) + " " + build(leaves - left) + ")";
  };
  for (int trial = 0; trial < 300; ++trial) {
    std::string text = build(2 + static_cast<unsigned>(rng() % 5));
    CHECK(normalize(text, sig) == refmodel::normalize(text, sig));
  }
}

TEST_CASE("structural identities hold") {
  Signature sig = rat(2, 2);
  CheckOptions opts;
  opts.trials = 40;
  opts.seed = 991;
  opts.max_poly_degree = 3;

  for (const IdentityPattern& pat :
       {pat_superleft(), pat_superright(), pat_weak_assoc(), pat_two_odd_left_box(4),
        pat_cor_two_odd_left_box(3), pat_two_odd_left(4), pat_cor_two_odd_left(3),
        pat_two_odd_right(4), pat_cor_two_odd_right(3), pat_left_to_right_comb(3),
        pat_comb_product(1, 2, 1, 2), pat_comb_product(2, 1, 1, 2)}) {
    CheckResult r = check_identity(pat, sig, opts);
    INFO(pat.name);
    CHECK(r.pass);
    CHECK(r.random_trials == 40);
    CHECK(r.exhaustive_cases > 0);
  }
}

TEST_CASE("identities hold over a prime field") {
  Signature sig(2, 2, Field::prime(7));
  CheckOptions opts;
  opts.trials = 15;
  opts.seed = 17;
  opts.max_poly_degree = 3;
  CHECK(check_identity(pat_superleft(), sig, opts).pass);
  CHECK(check_identity(pat_comb_product(1, 1, 1, 1), sig, opts).pass);
}

TEST_CASE("dropping any sign factor breaks the identity") {
  Signature sig = rat(2, 2);
  CheckOptions opts;
  opts.trials = 30;
  opts.seed = 4242;
  opts.max_poly_degree = 2;

  std::size_t mutants_seen = 0;
  for (const IdentityPattern& pat :
       {pat_superleft(), pat_superright(), pat_two_odd_left_box(4),
        pat_two_odd_left(4), pat_two_odd_right(4), pat_left_to_right_comb(3),
        pat_comb_product(1, 2, 1, 2)}) {
    for (const IdentityPattern& mut : sign_mutants(pat)) {
      CheckResult r = check_identity(mut, sig, opts);
      INFO(mut.name);
      CHECK_FALSE(r.pass);
      REQUIRE(r.witness);
      ++mutants_seen;
    }
  }
  CHECK(mutants_seen >= 10);
}

TEST_CASE("one-sided stacks of generators sort with an odd inversion sign") {
  Signature sig = rat(2, 2);
  CHECK(check_permutation_identity(sig, true, 2, 2, 6, 77).pass);
  CHECK(check_permutation_identity(sig, false, 2, 2, 6, 78).pass);
  CHECK(check_permutation_identity(sig, true, 0, 3, 6, 79).pass);
  CHECK(check_permutation_identity(sig, false, 3, 0, 6, 80).pass);
}

TEST_CASE("multilinear dimensions match codimensions") {
  Signature sig = rat(3, 3);
  for (unsigned a = 0; a <= 3; ++a)
    for (unsigned b = (a == 0 ? 1 : 0); b <= 3; ++b) {
      Integer expect = codimension_super(a, b);
      CHECK(Integer(static_cast<unsigned long>(multilinear_dimension(sig, a, b))) ==
            expect);
    }
  CHECK_THROWS_AS(multilinear_dimension(sig, 4, 0), DomainError);
}
