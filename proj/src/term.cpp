#include "bicomm/term.hpp"

#include <cctype>
#include <vector>

namespace bicomm {

TermPtr Term::leaf(Generator g) {
  return std::make_shared<Term>(Term{g});
}

TermPtr Term::prod(TermPtr l, TermPtr r) {
  return std::make_shared<Term>(Term{std::make_pair(std::move(l), std::move(r))});
}

namespace {

struct TermParser {
  const std::string& text;
  const Signature& sig;
  std::size_t i = 0;

  void skip_space() {
    while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
  }

  [[noreturn]] void fail(const std::string& m) { throw ParseError(m, i); }

  TermPtr parse() {
    skip_space();
    if (i >= text.size()) fail("expected term");
    if (text[i] == '(') {
      std::size_t open = i;
      ++i;
      TermPtr l = parse();
      TermPtr r = parse();
      skip_space();
      if (i >= text.size() || text[i] != ')') {
        i = i >= text.size() ? open : i;
        fail("a product has exactly two operands");
      }
      ++i;
      return Term::prod(std::move(l), std::move(r));
    }
    if (text[i] != 'y' && text[i] != 'z') fail("expected generator or '('");
    char letter = text[i];
    ++i;
    std::size_t digits = i;
    while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
    if (i == digits) fail("expected generator index");
    unsigned index = static_cast<unsigned>(std::stoul(text.substr(digits, i - digits)));
    unsigned limit = letter == 'y' ? sig.p : sig.q;
    if (index < 1 || index > limit) {
      i = digits;
      fail("generator index out of range for signature");
    }
    return Term::leaf({letter == 'y' ? Parity::even : Parity::odd, index});
  }
};

}  // namespace

TermPtr parse_term(const std::string& text, const Signature& sig) {
  TermParser p{text, sig};
  TermPtr t = p.parse();
  p.skip_space();
  if (p.i != text.size()) throw ParseError("unexpected trailing input", p.i);
  return t;
}

std::string term_to_text(const TermPtr& t) {
  if (t->is_leaf()) {
    const Generator& g = t->gen();
    return (g.parity == Parity::even ? "y" : "z") + std::to_string(g.index);
  }
  return "(" + term_to_text(t->parts().first) + " " + term_to_text(t->parts().second) + ")";
}

unsigned term_degree(const TermPtr& t) {
  if (t->is_leaf()) return 1;
  return term_degree(t->parts().first) + term_degree(t->parts().second);
}

Parity term_parity(const TermPtr& t) {
  if (t->is_leaf()) return t->gen().parity;
  Parity l = term_parity(t->parts().first);
  Parity r = term_parity(t->parts().second);
  return l == r ? Parity::even : Parity::odd;
}

SuperPolynomial normalize(const TermPtr& t, const Signature& sig) {
  if (t->is_leaf()) return SuperPolynomial::monomial(sig, t->gen());
  return mul(normalize(t->parts().first, sig), normalize(t->parts().second, sig));
}

SuperPolynomial normalize(const std::string& text, const Signature& sig) {
  return normalize(parse_term(text, sig), sig);
}

std::size_t multilinear_dimension(const Signature& sig, unsigned p_sub, unsigned q_sub) {
  if (p_sub > sig.p || q_sub > sig.q)
    throw DomainError("multilinear block exceeds signature");
  if (p_sub + q_sub == 0)
    throw DomainError("multilinear block must contain a generator");
  std::vector<unsigned> k(sig.p, 0), l(sig.q, 0);
  for (unsigned i = 0; i < p_sub; ++i) k[i] = 1;
  for (unsigned j = 0; j < q_sub; ++j) l[j] = 1;
  return enumerate_basis(sig, k, l).size();
}

}  // namespace bicomm
