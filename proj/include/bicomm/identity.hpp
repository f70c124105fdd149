#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "bicomm/algebra.hpp"

namespace bicomm {

// Shape of one side of an identity: a binary product tree over numbered
// variables (1-based).
struct PatternNode;
using PatternPtr = std::shared_ptr<const PatternNode>;

struct PatternNode {
  std::variant<unsigned, std::pair<PatternPtr, PatternPtr>> node;

  static PatternPtr var(unsigned id);
  static PatternPtr prod(PatternPtr l, PatternPtr r);

  bool is_var() const { return node.index() == 0; }
  unsigned id() const { return std::get<unsigned>(node); }
  const std::pair<PatternPtr, PatternPtr>& parts() const {
    return std::get<std::pair<PatternPtr, PatternPtr>>(node);
  }
};

enum class VarKind : unsigned char { any, even, odd };

struct VarSpec {
  VarKind kind = VarKind::any;
  unsigned min_degree = 1;      // substituted values have at least this degree
  bool generator_only = false;  // substituted values are single generators
};

// One product of variable parities; the sign exponent of an identity is the
// sum of such products.
struct SignTerm {
  std::vector<unsigned> vars;
};

// lhs = (-1)^{sum of sign terms} rhs, for all parity-homogeneous values of
// the variables subject to their specs.  rhs == nullptr means lhs = 0.
struct IdentityPattern {
  std::string name;
  std::vector<VarSpec> vars;
  PatternPtr lhs;
  PatternPtr rhs;
  std::vector<SignTerm> sign;
};

// x1(x2 x3) = (-1)^{|x1||x2|} x2(x1 x3)
IdentityPattern pat_superleft();
// (x1 x2)x3 = (-1)^{|x2||x3|} (x1 x3)x2
IdentityPattern pat_superright();
// x1((x2 x3)x4) = (x1(x2 x3))x4
IdentityPattern pat_weak_assoc();
// x2((...((x1 x3)x4)...)xk) = (-1)^{|x1||x2|} x1((...((x2 x3)x4)...)xk), k >= 3
IdentityPattern pat_two_odd_left_box(unsigned k);
// z((...((z x1)x2)...)xk) = 0, k >= 1 trailing variables
IdentityPattern pat_cor_two_odd_left_box(unsigned k);
// x2(xk(...(x4(x1 x3))...)) = +- x1(xk(...(x4(x2 x3))...)), k >= 3
IdentityPattern pat_two_odd_left(unsigned k);
// z(xk(...(x2(z x1))...)) = 0
IdentityPattern pat_cor_two_odd_left(unsigned k);
// ((...((x3 x1)x4)...)xk)x2 = +- ((...((x3 x2)x4)...)xk)x1, k >= 3
IdentityPattern pat_two_odd_right(unsigned k);
// ((...((x1 z)x2)...)xk)z = 0
IdentityPattern pat_cor_two_odd_right(unsigned k);
// ((u1 u2)...uk)v = (-1)^{(|u2|+...+|uk|)|v|} u1((...(v u2)...)uk), v of degree >= 2
IdentityPattern pat_left_to_right_comb(unsigned k);
// (tk(...(t2(((t1 u1)u2...)ul)))) * (vm(...(v2(((v1 w1)w2...)wn)))) =
//   (-1)^{|u|(|v|+|w|)} tk(...(t1(vm(...(v2(((F2 u1)u2...)ul))))))
// over generators; F2 abbreviates the second factor.
IdentityPattern pat_comb_product(unsigned k, unsigned l, unsigned m, unsigned n);

// Copies of `pat` with one sign term removed each; used to show the signs
// are load-bearing.
std::vector<IdentityPattern> sign_mutants(const IdentityPattern& pat);

struct CheckOptions {
  unsigned trials = 200;
  std::uint64_t seed = 0;
  bool exhaustive = true;          // also run exhaustive low-degree substitutions
  unsigned max_poly_degree = 4;    // degree bound for random substitution values
  unsigned long exhaustive_cap = 300000;
};

struct CheckFailure {
  std::string phase;  // "random" or "exhaustive"
  std::vector<std::string> substitution;
};

struct CheckResult {
  bool pass = true;
  unsigned random_trials = 0;
  unsigned long exhaustive_cases = 0;
  std::optional<CheckFailure> witness;
};

// Verifies pat over sig: `trials` pseudo-random substitutions (trial t uses
// mt19937_64 seeded with seed + t) plus an exhaustive sweep over the lowest
// admissible degrees.  Variables whose spec cannot be met over sig are
// reported as passing with zero cases.
CheckResult check_identity(const IdentityPattern& pat, const Signature& sig,
                           const CheckOptions& opts);

// Sorting iterated one-sided multiplications by generators: for any
// permutation of the stack x_{s(1)}(x_{s(2)}(...(x_{s(k+l)} u))) equals the
// sorted stack (evens first) up to the inversion count of its odd letters,
// and symmetrically for right multiplications.  Checks `trials` random
// generator assignments; all permutations when (k+l)! is small, random ones
// otherwise.
struct PermuteCheckResult {
  bool pass = true;
  unsigned long cases = 0;
  std::string witness;
};

PermuteCheckResult check_permutation_identity(const Signature& sig, bool left_side,
                                              unsigned k, unsigned l,
                                              unsigned trials, std::uint64_t seed);

SuperPolynomial eval_pattern(const PatternPtr& node,
                             const std::vector<SuperPolynomial>& values);

}  // namespace bicomm
