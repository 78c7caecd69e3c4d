#pragma once

#include "operadkit/element.hpp"
#include "operadkit/linalg.hpp"
#include "operadkit/tree.hpp"

#include <string>
#include <vector>

namespace operadkit {

/// Binary quadratic presentation: arity-2 degree-0 generators plus a list of
/// linearly independent relators spanned by the two-vertex monomials.
struct QuadraticPresentation {
    GeneratorSet generators;
    std::vector<OperadElement> relators;
};

/// Validates and packages a presentation. Throws std::invalid_argument when a
/// generator is not binary/degree 0, a relator is not a weight-2 combination,
/// or the relators are linearly dependent.
QuadraticPresentation make_presentation(GeneratorSet gens,
                                        std::vector<OperadElement> relators);

/// Built-in presentations:
///   "as"     one product, associativity;
///   "two_as" two products, all five mixed-parenthesization identities;
///   "as_2"   two products, both associativities plus the four-term
///            compatibility making every linear blend associative.
/// Throws std::invalid_argument on unknown names.
QuadraticPresentation preset(const std::string& name);

/// The 2k² two-vertex monomials in a fixed layout: first the compositions in
/// slot 0, then slot 1; within a block, outer label major, inner label minor.
std::vector<TreeMonomial> weight2_basis(const GeneratorSet& gens);

/// Coordinates of a weight-2 element in the weight2_basis layout.
struct Weight2Vector {
    RatVector coords;
};

/// Throws std::invalid_argument when e contains a non-weight-2 term.
Weight2Vector to_weight2(const OperadElement& e, const GeneratorSet& gens);
OperadElement from_weight2(const RatVector& coords, const GeneratorSet& gens);

/// Scalar product on weight 2: slot-0 basis monomials pair to +1 with
/// themselves, slot-1 monomials to -1, all distinct pairs to 0.
/// Throws std::invalid_argument when the coordinate sizes differ.
Rational weight2_pairing(const Weight2Vector& u, const Weight2Vector& v);

/// Quadratic dual: same generator symbols, relator space the annihilator of
/// the input relator span under weight2_pairing.
QuadraticPresentation koszul_dual(const QuadraticPresentation& p);

/// True iff the two presentations have equal relator spans (and equal
/// generator ids in order).
bool relator_spans_equal(const QuadraticPresentation& a,
                         const QuadraticPresentation& b);

/// The three relators extracted from the associator of the pencil product
/// λ·g0 + μ·g1 (coefficients of λ², λμ, μ²). Requires exactly 2 generators.
std::vector<OperadElement> pencil_relators(const GeneratorSet& gens);

/// True iff the relator span equals the span of pencil_relators — i.e. the
/// presentation says exactly "every linear blend of the two products is
/// associative". Throws std::invalid_argument unless there are 2 generators.
bool pencil_associativity_check(const QuadraticPresentation& p);

/// Plain-text serialization: a "generators:" line then one "relator:" line
/// per relator with "num/den monomial" terms joined by " + ".
std::string presentation_to_text(const QuadraticPresentation& p);

/// Inverse of presentation_to_text. Throws std::invalid_argument on
/// malformed input.
QuadraticPresentation presentation_from_text(const std::string& text);

}  // namespace operadkit
