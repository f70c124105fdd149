#pragma once

#include <memory>
#include <string>
#include <utility>
#include <variant>

#include "bicomm/algebra.hpp"

namespace bicomm {

// A nonassociative word in the free magma over the generators, e.g.
// "(z2 (z1 y1))".  Products are strictly binary.
struct Term;
using TermPtr = std::shared_ptr<const Term>;

struct Term {
  std::variant<Generator, std::pair<TermPtr, TermPtr>> node;

  static TermPtr leaf(Generator g);
  static TermPtr prod(TermPtr l, TermPtr r);

  bool is_leaf() const { return node.index() == 0; }
  const Generator& gen() const { return std::get<Generator>(node); }
  const std::pair<TermPtr, TermPtr>& parts() const {
    return std::get<std::pair<TermPtr, TermPtr>>(node);
  }
};

// Grammar: term := generator | '(' term term ')'.  Three or more operands
// inside one parenthesis pair are rejected.
TermPtr parse_term(const std::string& text, const Signature& sig);

std::string term_to_text(const TermPtr& t);

unsigned term_degree(const TermPtr& t);
Parity term_parity(const TermPtr& t);

// Expands a term into the basis representation by evaluating its products.
SuperPolynomial normalize(const TermPtr& t, const Signature& sig);
SuperPolynomial normalize(const std::string& text, const Signature& sig);

// Number of basis monomials that use each of y_1..y_p' and z_1..z_q' exactly
// once; p' <= sig.p, q' <= sig.q, p' + q' >= 1.
std::size_t multilinear_dimension(const Signature& sig, unsigned p_sub, unsigned q_sub);

}  // namespace bicomm
