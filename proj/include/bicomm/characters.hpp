#pragma once

#include <map>
#include <utility>
#include <vector>

#include "bicomm/series.hpp"

namespace bicomm {

// Weakly decreasing list of positive parts; the empty partition is allowed.
using Partition = std::vector<unsigned>;

void validate_partition(const Partition& p);
unsigned partition_weight(const Partition& p);
Partition conjugate(const Partition& p);
std::vector<Partition> partitions_of(unsigned n);

// Number of standard tableaux of the given shape (hook length formula).
Integer standard_tableaux(const Partition& p);

// Schur polynomial s_lambda(x_1, ..., x_d) as a sum over semistandard
// tableaux; zero when lambda has more than d rows.
MultiPoly schur(const Partition& lambda, unsigned d);

// Shapes in s_lambda * s_(n) over d variables: mu/lambda a horizontal strip
// of size n, at most d rows.
std::vector<Partition> young_row_product(const Partition& lambda, unsigned n,
                                         unsigned d);

// Shapes in s_lambda * s_(1^n) over d variables: mu/lambda a vertical strip.
// A column taller than d kills the product; `vanishes` reports that case.
struct ColumnProduct {
  std::vector<Partition> partitions;
  bool vanishes = false;
};
ColumnProduct young_column_product(const Partition& lambda, unsigned n, unsigned d);

// Multiplicity of the irreducible double character labeled (lambda, mu) in
// the multilinear decomposition: nonzero only when lambda has at most two
// rows and mu at most two columns.
unsigned long multiplicity(const Partition& lambda, const Partition& mu);

// Generating series of the multiplicities in variables u1, u2, v1, v2; the
// coefficient of u1^l1 u2^l2 v1^m1 v2^m2 is multiplicity((l1, l2), mu) with
// mu the conjugate of (m1, m2).
RationalSeries double_multiplicity_series(unsigned trunc);

// Schur expansion of a symmetric polynomial; fails loudly on an asymmetric
// input or a negative expansion coefficient.
std::map<Partition, Integer> schur_expand(const MultiPoly& f);

// Joint expansion of a polynomial symmetric in its first pu variables and,
// separately, in the rest: coefficients of s_lambda(U) s_mu(V).
std::map<std::pair<Partition, Partition>, Integer> schur_expand_double(
    const MultiPoly& f, unsigned pu);

}  // namespace bicomm
