#pragma once

#include "operadkit/rational.hpp"
#include "operadkit/tree.hpp"

#include <map>
#include <string>

namespace operadkit {

/// Formal rational linear combination of tree monomials. Zero coefficients
/// are never stored; an empty map is the zero element.
using OperadElement = std::map<TreeMonomial, Rational>;

/// Adds coeff * t, erasing the term if the total cancels to zero.
void add_term(OperadElement& e, const TreeMonomial& t, const Rational& coeff);

OperadElement element_sum(const OperadElement& a, const OperadElement& b);
OperadElement element_scale(const Rational& c, const OperadElement& e);
OperadElement element_diff(const OperadElement& a, const OperadElement& b);

bool is_zero(const OperadElement& e);

/// Common arity of all terms. Throws std::invalid_argument when terms mix
/// arities; returns -1 for the zero element (which has no arity of its own).
int element_arity(const OperadElement& e, const GeneratorSet& gens);

/// Bilinear extension of graft to linear combinations.
OperadElement graft_element(const OperadElement& outer, int slot,
                            const OperadElement& inner, const GeneratorSet& gens);

/// Greatest monomial with nonzero coefficient under path_lex_compare;
/// nullptr for the zero element.
const TreeMonomial* leading_monomial(const OperadElement& e, const GeneratorSet& gens);

/// "coeff monomial" terms joined with " + "; coefficients always "n/d".
std::string render_element(const OperadElement& e, const GeneratorSet& gens);

}  // namespace operadkit
