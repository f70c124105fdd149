#pragma once

#include <vector>

#include "bicomm/algebra.hpp"

namespace bicomm {

enum class OrderKind : unsigned char { deglex, weight };

// Admissible monomial order used for leading terms.
//
// deglex: total degree first, then dictionary order on the left factor word,
// then on the right, spelled with a configurable generator magnitude whose
// default is z_1 < ... < z_q < y_1 < ... < y_p.  Larger exponent at the most
// significant position wins.  Compatible with one-sided multiplication by
// generators on all monomials.
//
// weight: on tensors, colexicographic from the top index on (yu, yv, zu, zv)
// in that order.  Compatible with one-sided multiplication on tensor pairs;
// bare generators are placed below all tensors, which no total extension can
// make multiplication-compatible, so reduction under this order restricts
// itself accordingly (see reduce).
class MonomialOrder {
 public:
  static MonomialOrder deglex(const Signature& sig);
  static MonomialOrder deglex(const Signature& sig, std::vector<Generator> ascending);
  static MonomialOrder weight(const Signature& sig);

  OrderKind kind() const { return kind_; }
  const Signature& signature() const { return sig_; }

  int compare(const BasisMonomial& a, const BasisMonomial& b) const;
  bool less(const BasisMonomial& a, const BasisMonomial& b) const {
    return compare(a, b) < 0;
  }

 private:
  MonomialOrder(OrderKind k, Signature sig) : kind_(k), sig_(std::move(sig)) {}

  OrderKind kind_;
  Signature sig_;
  std::vector<Generator> descending_;  // deglex word alphabet, most significant first
};

// Largest monomial of a nonzero polynomial.
BasisMonomial lead(const SuperPolynomial& f, const MonomialOrder& ord);

// Containment up to one-sided multiplications: a tensor divides a tensor
// factorwise; a generator divides a tensor it occurs in; a generator divides
// itself; nothing of degree >= 2 divides a generator.
bool divides(const BasisMonomial& m, const BasisMonomial& n);

struct ChainStep {
  bool left;  // left multiplication by gen, else right
  Generator gen;
};

// A sequence of one-sided generator multiplications carrying m onto +-n.
// Requires divides(m, n).
std::vector<ChainStep> division_chain(const BasisMonomial& m, const BasisMonomial& n,
                                      const Signature& sig);

SuperPolynomial apply_chain(const SuperPolynomial& f, const std::vector<ChainStep>& chain);

// Division with remainder: repeatedly eliminates the current lead of f by a
// chain multiple of the first divisor whose lead divides it; irreducible
// leads move to the remainder.  Divisors must be nonzero.  Under the weight
// order the divisors must be homogeneous and a divisor is skipped for a
// monomial when its chain multiple is not dominated by that monomial.
SuperPolynomial reduce(const SuperPolynomial& f,
                       const std::vector<SuperPolynomial>& divisors,
                       const MonomialOrder& ord);

// Degree-truncated basis data for a finitely generated ideal.
struct GsBasis {
  Signature sig;
  MonomialOrder order;
  unsigned max_degree;
  // Monic, inter-reduced, one per staircase corner, in discovery order.
  std::vector<SuperPolynomial> generators;
  std::vector<BasisMonomial> staircase;
  // Largest S <= max_degree with no staircase corner of degree S; membership
  // refutations are trusted up to here.
  unsigned stable_through;
};

// Closes the ideal slice of degree <= max_degree under one-sided generator
// multiplications with echelon pruning, then extracts the minimal staircase.
GsBasis truncated_basis(const Signature& sig, const std::vector<SuperPolynomial>& ideal,
                        const MonomialOrder& ord, unsigned max_degree);

enum class Membership : unsigned char { yes, no, unknown };

// Ideal membership relative to a truncated basis.  Reduction to zero is a
// proof; a nonzero remainder refutes membership only up to stable_through.
Membership member(const SuperPolynomial& f, const GsBasis& basis);

// Dimensions of the quotient by the ideal, per total degree 0..max_degree:
// the count of basis monomials no staircase corner divides.
std::vector<unsigned long> quotient_dims(const GsBasis& basis);

// Weighted divisibility across ambient signatures: m embeds into n by a
// strictly increasing relabeling of the even indices (shared by both tensor
// factors) under which both factors of m divide those of n, and
// independently one of the odd indices.  Both arguments must be tensors.
bool weight_preceq(const BasisMonomial& m, const BasisMonomial& n);

}  // namespace bicomm
