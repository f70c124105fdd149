#pragma once

#include <bit>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <variant>
#include <vector>

#include "bicomm/field.hpp"

namespace bicomm {

enum class Parity : unsigned char { even, odd };

// A free generator: y_index (even) or z_index (odd).  Indices are 1-based.
struct Generator {
  Parity parity;
  unsigned index;

  friend bool operator==(const Generator& a, const Generator& b) {
    return a.parity == b.parity && a.index == b.index;
  }
};

// Ambient algebra: p even generators y_1..y_p, q odd generators z_1..z_q,
// coefficients in `field`.  p + q >= 1, q <= 64 (odd sets live in a word).
struct Signature {
  unsigned p = 0;
  unsigned q = 0;
  Field field;

  Signature(unsigned p_, unsigned q_, Field f = Field::rationals());

  friend bool operator==(const Signature& a, const Signature& b) {
    return a.p == b.p && a.q == b.q && a.field == b.field;
  }
  friend bool operator!=(const Signature& a, const Signature& b) { return !(a == b); }
};

// Squarefree set of odd indices as a bitmask; index j occupies bit j-1.
using OddSet = std::uint64_t;

inline OddSet odd_bit(unsigned j) { return OddSet{1} << (j - 1); }
inline unsigned odd_count(OddSet s) { return static_cast<unsigned>(std::popcount(s)); }
inline OddSet odd_below(unsigned j) { return odd_bit(j) - 1; }
inline OddSet odd_above(unsigned j) { return ~(odd_bit(j) | odd_below(j)); }

std::vector<unsigned> odd_indices(OddSet s);

// Number of inversions created by concatenating the sorted words of `first`
// and `second`: pairs (a, b) with a in first, b in second, a > b.
unsigned merge_inversions(OddSet first, OddSet second);

// Compares odd sets as sorted index lists, lexicographically.
int compare_oddset_lex(OddSet a, OddSet b);

// A basis tensor u (x) v.  Each factor is a nonempty commutative word:
// yu[i] is the exponent of y_{i+1} in u, zu the set of odd indices of u
// (odd generators square to zero), and yv/zv likewise for v.
struct TensorMonomial {
  std::vector<unsigned> yu, yv;
  OddSet zu = 0, zv = 0;

  friend bool operator==(const TensorMonomial& a, const TensorMonomial& b) {
    return a.yu == b.yu && a.yv == b.yv && a.zu == b.zu && a.zv == b.zv;
  }
};

// Basis monomial: a bare generator (degree 1) or a tensor (degree >= 2).
struct BasisMonomial {
  std::variant<Generator, TensorMonomial> node;

  BasisMonomial(Generator g) : node(g) {}
  BasisMonomial(TensorMonomial t) : node(std::move(t)) {}

  bool is_generator() const { return node.index() == 0; }
  const Generator& gen() const { return std::get<Generator>(node); }
  const TensorMonomial& tensor() const { return std::get<TensorMonomial>(node); }

  friend bool operator==(const BasisMonomial& a, const BasisMonomial& b) {
    return a.node == b.node;
  }
};

unsigned total_degree(const BasisMonomial& m);
Parity parity_of(const BasisMonomial& m);

// Multidegree: k[i] counts y_{i+1}, l[j] counts z_{j+1} (l[j] <= 2).
struct Multidegree {
  std::vector<unsigned> k;
  std::vector<unsigned> l;
};

Multidegree multidegree(const BasisMonomial& m, const Signature& sig);

// Throws DomainError if m does not live in the algebra described by sig
// (wrong exponent-vector length, odd index out of range, empty factor, ...).
void validate_monomial(const BasisMonomial& m, const Signature& sig);

// Canonical storage order used by polynomial containers, printing, and
// enumeration: generators first (even before odd, by index), then tensors by
// dictionary order on the left factor word, then on the right factor word.
// Factor words read y_1^* y_2^* ... z_1 z_2 ... with y_1 < ... < y_p < z_1 <
// ... < z_q.  This is a storage convention, independent of MonomialOrder.
int compare_monomials(const BasisMonomial& a, const BasisMonomial& b);

struct MonomialLess {
  bool operator()(const BasisMonomial& a, const BasisMonomial& b) const {
    return compare_monomials(a, b) < 0;
  }
};

// Product of two basis monomials.  The coefficient is the Koszul sign
// (field-reduced); monomial is empty when the product vanishes (repeated odd
// generator).  The product of basis monomials is always a tensor.
struct MonomialProduct {
  Rational coeff;
  std::optional<BasisMonomial> monomial;
};

MonomialProduct mul_monomials(const BasisMonomial& a, const BasisMonomial& b,
                              const Signature& sig);

enum class PolyParity : unsigned char { even, odd, mixed };

// Element of the free bicommutative superalgebra over sig: a finite
// coefficient map on basis monomials.  Zero coefficients are never stored.
// Values behave like immutable data: every operation returns a fresh value.
class SuperPolynomial {
 public:
  using TermMap = std::map<BasisMonomial, Rational, MonomialLess>;

  explicit SuperPolynomial(Signature sig) : sig_(std::move(sig)) {}

  static SuperPolynomial monomial(const Signature& sig, const BasisMonomial& m,
                                  const Rational& coeff = 1);

  const Signature& signature() const { return sig_; }
  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t term_count() const { return terms_.size(); }

  // Accumulates coeff * m (field-reduced, zero entries dropped).
  void add_term(const BasisMonomial& m, const Rational& coeff);

  Rational coefficient(const BasisMonomial& m) const;

  // Largest total degree over the support; 0 for the zero polynomial.
  unsigned degree() const;

  friend bool operator==(const SuperPolynomial& a, const SuperPolynomial& b) {
    return a.sig_ == b.sig_ && a.terms_ == b.terms_;
  }

 private:
  Signature sig_;
  TermMap terms_;
};

SuperPolynomial add(const SuperPolynomial& a, const SuperPolynomial& b);
SuperPolynomial sub(const SuperPolynomial& a, const SuperPolynomial& b);
SuperPolynomial negate(const SuperPolynomial& a);
SuperPolynomial scale(const Rational& c, const SuperPolynomial& a);
SuperPolynomial mul(const SuperPolynomial& a, const SuperPolynomial& b);

PolyParity parity(const SuperPolynomial& f);

// All basis monomials of the given multidegree, in storage order.  Any odd
// exponent above 2 yields an empty list.  Total degree must be >= 1.
std::vector<BasisMonomial> enumerate_basis(const Signature& sig,
                                           const std::vector<unsigned>& k,
                                           const std::vector<unsigned>& l);

// All basis monomials of the given total degree (>= 1), grouped by
// multidegree, each group in storage order.
std::vector<BasisMonomial> monomials_of_degree(const Signature& sig, unsigned d);

// Every multidegree (k, l) with the given total degree and all l_j <= 2.
void for_each_multidegree(const Signature& sig, unsigned total,
                          const std::function<void(const std::vector<unsigned>&,
                                                   const std::vector<unsigned>&)>& fn);

}  // namespace bicomm
