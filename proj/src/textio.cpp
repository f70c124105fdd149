#include "bicomm/textio.hpp"

#include <cctype>
#include <fstream>
#include <sstream>

namespace bicomm {

namespace {

std::string word_to_text(const std::vector<unsigned>& y, OddSet z) {
  std::string out;
  auto push = [&](const std::string& s) {
    if (!out.empty()) out += ' ';
    out += s;
  };
  for (std::size_t i = 0; i < y.size(); ++i) {
    if (y[i] == 0) continue;
    std::string f = "y" + std::to_string(i + 1);
    if (y[i] > 1) f += "^" + std::to_string(y[i]);
    push(f);
  }
  for (unsigned j : odd_indices(z)) push("z" + std::to_string(j));
  return out;
}

std::string trim(const std::string& s, std::size_t* lead = nullptr) {
  std::size_t b = 0, e = s.size();
  while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
  while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
  if (lead) *lead = b;
  return s.substr(b, e - b);
}

struct Factor {
  char letter;
  unsigned index;
  unsigned exponent;
};

Factor parse_factor(const std::string& tok, std::size_t at) {
  std::size_t i = 0;
  if (i >= tok.size() || (tok[i] != 'y' && tok[i] != 'z'))
    throw ParseError("expected generator 'y<i>' or 'z<j>', got '" + tok + "'", at);
  Factor f{tok[i], 0, 1};
  ++i;
  std::size_t digits = i;
  while (i < tok.size() && std::isdigit(static_cast<unsigned char>(tok[i]))) ++i;
  if (i == digits) throw ParseError("expected generator index", at + i);
  f.index = static_cast<unsigned>(std::stoul(tok.substr(digits, i - digits)));
  if (f.index == 0) throw ParseError("generator indices start at 1", at + digits);
  if (i < tok.size() && tok[i] == '^') {
    ++i;
    digits = i;
    while (i < tok.size() && std::isdigit(static_cast<unsigned char>(tok[i]))) ++i;
    if (i == digits) throw ParseError("expected exponent after '^'", at + i);
    f.exponent = static_cast<unsigned>(std::stoul(tok.substr(digits, i - digits)));
    if (f.exponent == 0) throw ParseError("exponent must be positive", at + digits);
  }
  if (i != tok.size()) throw ParseError("unexpected characters in factor", at + i);
  return f;
}

void parse_word(const std::string& text, std::size_t at, const Signature& sig,
                std::vector<unsigned>& y, OddSet& z) {
  y.assign(sig.p, 0);
  z = 0;
  std::istringstream in(text);
  std::string tok;
  bool any = false;
  while (in >> tok) {
    any = true;
    std::size_t pos = at + static_cast<std::size_t>(text.find(tok));
    Factor f = parse_factor(tok, pos);
    if (f.letter == 'y') {
      if (f.index > sig.p)
        throw ParseError("even generator index exceeds signature", pos);
      y[f.index - 1] += f.exponent;
    } else {
      if (f.index > sig.q)
        throw ParseError("odd generator index exceeds signature", pos);
      if (f.exponent > 1 || (z & odd_bit(f.index)))
        throw ParseError("odd generator repeated within a word", pos);
      z |= odd_bit(f.index);
    }
  }
  if (!any) throw ParseError("empty tensor factor", at);
}

BasisMonomial parse_monomial_chunk(const std::string& chunk, std::size_t at,
                                   const Signature& sig) {
  std::size_t bar = chunk.find('|');
  if (bar == std::string::npos) {
    std::size_t lead = 0;
    std::string tok = trim(chunk, &lead);
    if (tok.empty()) throw ParseError("expected monomial", at);
    if (tok.find(' ') != std::string::npos || tok.find('^') != std::string::npos)
      throw ParseError("monomial of degree >= 2 must be a tensor 'u | v'", at + lead);
    Factor f = parse_factor(tok, at + lead);
    unsigned limit = f.letter == 'y' ? sig.p : sig.q;
    if (f.index > limit)
      throw ParseError("generator index exceeds signature", at + lead);
    return Generator{f.letter == 'y' ? Parity::even : Parity::odd, f.index};
  }
  if (chunk.find('|', bar + 1) != std::string::npos)
    throw ParseError("a tensor has exactly one '|'", at + bar);
  TensorMonomial t;
  parse_word(chunk.substr(0, bar), at, sig, t.yu, t.zu);
  parse_word(chunk.substr(bar + 1), at + bar + 1, sig, t.yv, t.zv);
  return BasisMonomial(std::move(t));
}

}  // namespace

std::string to_text(const BasisMonomial& m, const Signature& sig) {
  validate_monomial(m, sig);
  if (m.is_generator()) {
    const Generator& g = m.gen();
    return (g.parity == Parity::even ? "y" : "z") + std::to_string(g.index);
  }
  const TensorMonomial& t = m.tensor();
  return word_to_text(t.yu, t.zu) + " | " + word_to_text(t.yv, t.zv);
}

std::string to_text(const SuperPolynomial& f) {
  if (f.is_zero()) return "0";
  std::string out;
  for (const auto& [m, c] : f.terms()) {
    if (!out.empty()) out += " + ";
    if (c == 1)
      out += to_text(m, f.signature());
    else
      out += to_string(c) + " * " + to_text(m, f.signature());
  }
  return out;
}

BasisMonomial monomial_from_text(const std::string& text, const Signature& sig) {
  BasisMonomial m = parse_monomial_chunk(text, 0, sig);
  validate_monomial(m, sig);
  return m;
}

SuperPolynomial poly_from_text(const std::string& text, const Signature& sig) {
  SuperPolynomial f(sig);
  if (trim(text) == "0") return f;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t plus = text.find('+', start);
    std::size_t end = plus == std::string::npos ? text.size() : plus;
    std::string chunk = text.substr(start, end - start);
    std::size_t lead = 0;
    std::string body = trim(chunk, &lead);
    if (body.empty()) throw ParseError("expected term", start);
    Rational coeff(1);
    std::size_t star = body.find('*');
    std::size_t mono_at = start + lead;
    if (star != std::string::npos) {
      coeff = parse_rational(trim(body.substr(0, star)));
      std::size_t mono_lead = 0;
      std::string mono = trim(body.substr(star + 1), &mono_lead);
      mono_at += star + 1 + mono_lead;
      BasisMonomial m = parse_monomial_chunk(mono, mono_at, sig);
      validate_monomial(m, sig);
      f.add_term(m, coeff);
    } else {
      BasisMonomial m = parse_monomial_chunk(body, mono_at, sig);
      validate_monomial(m, sig);
      f.add_term(m, coeff);
    }
    if (plus == std::string::npos) break;
    start = plus + 1;
  }
  return f;
}

nlohmann::json to_json(const SuperPolynomial& f) {
  nlohmann::json terms = nlohmann::json::array();
  for (const auto& [m, c] : f.terms()) {
    nlohmann::json t;
    t["coeff"] = to_string(c);
    if (m.is_generator()) {
      t["gen"] = to_text(m, f.signature());
    } else {
      const TensorMonomial& tm = m.tensor();
      t["yu"] = tm.yu;
      t["zu"] = odd_indices(tm.zu);
      t["yv"] = tm.yv;
      t["zv"] = odd_indices(tm.zv);
    }
    terms.push_back(std::move(t));
  }
  return nlohmann::json{
      {"signature",
       {{"p", f.signature().p},
        {"q", f.signature().q},
        {"characteristic", f.signature().field.characteristic()}}},
      {"terms", std::move(terms)}};
}

SuperPolynomial poly_from_json(const nlohmann::json& j, const Signature& sig) {
  if (j.contains("signature")) {
    const auto& s = j.at("signature");
    if (s.at("p").get<unsigned>() != sig.p || s.at("q").get<unsigned>() != sig.q ||
        s.at("characteristic").get<unsigned>() != sig.field.characteristic())
      throw DomainError("polynomial JSON signature does not match");
  }
  SuperPolynomial f(sig);
  for (const auto& t : j.at("terms")) {
    Rational c = parse_rational(t.at("coeff").get<std::string>());
    if (t.contains("gen")) {
      f.add_term(monomial_from_text(t.at("gen").get<std::string>(), sig), c);
      continue;
    }
    TensorMonomial tm;
    tm.yu = t.at("yu").get<std::vector<unsigned>>();
    tm.yv = t.at("yv").get<std::vector<unsigned>>();
    for (unsigned idx : t.at("zu").get<std::vector<unsigned>>()) {
      if (idx == 0 || (tm.zu & odd_bit(idx)))
        throw DomainError("invalid odd index list in polynomial JSON");
      tm.zu |= odd_bit(idx);
    }
    for (unsigned idx : t.at("zv").get<std::vector<unsigned>>()) {
      if (idx == 0 || (tm.zv & odd_bit(idx)))
        throw DomainError("invalid odd index list in polynomial JSON");
      tm.zv |= odd_bit(idx);
    }
    BasisMonomial m(std::move(tm));
    validate_monomial(m, sig);
    f.add_term(m, c);
  }
  return f;
}

std::vector<SuperPolynomial> parse_ideal_text(const std::string& body,
                                              const Signature& sig) {
  std::vector<SuperPolynomial> out;
  std::istringstream in(body);
  std::string line;
  while (std::getline(in, line)) {
    std::size_t hash = line.find('#');
    if (hash != std::string::npos) line = line.substr(0, hash);
    if (trim(line).empty()) continue;
    out.push_back(poly_from_text(line, sig));
  }
  return out;
}

std::vector<SuperPolynomial> read_ideal_file(const std::string& path,
                                             const Signature& sig) {
  std::ifstream in(path);
  if (!in) throw DomainError("cannot open ideal file: " + path);
  std::stringstream buf;
  buf << in.rdbuf();
  return parse_ideal_text(buf.str(), sig);
}

}  // namespace bicomm
