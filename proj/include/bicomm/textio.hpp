#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "bicomm/algebra.hpp"

namespace bicomm {

// Text format.  A generator prints as "y3" or "z2".  A tensor prints its two
// factor words around " | ": exponents above 1 use '^', factors are listed
// y_1, ..., y_p, z_1, ..., z_q, e.g. "y1^2 y3 z2 | y1 z1".  A polynomial
// prints its terms in storage order joined by " + "; a coefficient of 1 is
// omitted, anything else is prefixed as "<coeff> * ".  Zero prints as "0".
std::string to_text(const BasisMonomial& m, const Signature& sig);
std::string to_text(const SuperPolynomial& f);

// Accepts everything to_text emits; whitespace around '|' is optional.
SuperPolynomial poly_from_text(const std::string& text, const Signature& sig);
BasisMonomial monomial_from_text(const std::string& text, const Signature& sig);

// JSON mirror.  A polynomial is {"signature": {"p", "q", "characteristic"},
// "terms": [...]} where a tensor term is {"coeff": "3/2", "yu": [2,0,1],
// "zu": [2], "yv": [1,0,0], "zv": [1]} (zu/zv are sorted odd index lists)
// and a generator term is {"coeff": "1", "gen": "y1"}.
nlohmann::json to_json(const SuperPolynomial& f);
SuperPolynomial poly_from_json(const nlohmann::json& j, const Signature& sig);

// Reads an ideal file: UTF-8 text, one polynomial per line, '#' starts a
// comment, blank lines are skipped.
std::vector<SuperPolynomial> read_ideal_file(const std::string& path,
                                             const Signature& sig);
std::vector<SuperPolynomial> parse_ideal_text(const std::string& body,
                                              const Signature& sig);

}  // namespace bicomm
