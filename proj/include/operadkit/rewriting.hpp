#pragma once

#include "operadkit/element.hpp"
#include "operadkit/presentation.hpp"
#include "operadkit/tree.hpp"

#include <random>
#include <string>
#include <vector>

namespace operadkit {

/// One oriented relator: lhs is the leading monomial (coefficient 1), rhs the
/// strictly smaller remainder it rewrites to.
struct RewriteRule {
    TreeMonomial lhs;
    OperadElement rhs;
};

/// A pattern occurrence: rule `rule` matches at code position `pos`.
struct Occurrence {
    int pos = 0;
    int rule = 0;

    bool operator==(const Occurrence&) const = default;
};

/// Oriented, inter-reduced rewriting system for a quadratic presentation.
struct RewriteSystem {
    QuadraticPresentation source;
    std::vector<RewriteRule> rules;

    const GeneratorSet& gens() const { return source.generators; }
};

/// Default bound on rewrite applications per normalize call; hitting it
/// raises std::runtime_error (it never fires for the shipped presets).
inline constexpr long kRewriteBudget = 1000000;

/// Orients each relator by its leading monomial. Row reduction over the
/// weight-2 basis (sorted descending in the monomial order) makes the rules
/// inter-reduced: no rhs term equals any lhs, and distinct rules have
/// distinct lhs monomials.
RewriteSystem orient(const QuadraticPresentation& p);

/// Tests whether `pattern` matches the subtree at code position `pos`:
/// internal pattern vertices must agree with t's labels, pattern leaves
/// capture whole subtrees. On success appends the captured [begin, end) code
/// slices to *args (when given) in pattern-leaf order.
bool match_at(const TreeMonomial& t, int pos, const TreeMonomial& pattern,
              const GeneratorSet& gens,
              std::vector<std::pair<int, int>>* args = nullptr);

/// All rule occurrences in t, in leftmost-innermost (postorder) position
/// order, rules in system order at equal positions.
std::vector<Occurrence> find_occurrences(const TreeMonomial& t,
                                         const RewriteSystem& rs);

bool is_normal_form(const TreeMonomial& t, const RewriteSystem& rs);

/// Applies rule `o.rule` at position `o.pos` once; the result is the element
/// with the matched pattern replaced by the rule's rhs.
OperadElement rewrite_at(const TreeMonomial& t, const Occurrence& o,
                         const RewriteSystem& rs);

/// Full normalization with the deterministic strategy: always rewrite the
/// leftmost-innermost occurrence of the greatest reducible term.
OperadElement normalize(const OperadElement& e, const RewriteSystem& rs,
                        long budget = kRewriteBudget);

/// Like normalize, but records the element after every single rewrite;
/// result.front() = input, result.back() = normal form.
std::vector<OperadElement> normalize_trace(const OperadElement& e,
                                           const RewriteSystem& rs,
                                           long budget = kRewriteBudget);

/// Normalization picking a uniformly random redex at each step; agrees with
/// normalize on confluent systems.
OperadElement normalize_random(const OperadElement& e, const RewriteSystem& rs,
                               std::mt19937& rng, long budget = kRewriteBudget);

/// The arity-4 monomials in which two rule patterns overlap in a chain (the
/// inner vertex of one occurrence is the root vertex of the other), sorted
/// descending in the monomial order.
std::vector<TreeMonomial> critical_monomials(const RewriteSystem& rs);

/// One single-step reduction continued to normal form.
struct ReductionChain {
    Occurrence first;
    std::vector<OperadElement> steps;  // steps[0] = the critical monomial
};

struct CriticalCheck {
    TreeMonomial monomial;
    std::vector<ReductionChain> chains;  // one per first-step occurrence
    bool confluent = false;              // all chains reach the same normal form
};

struct ConfluenceReport {
    std::vector<CriticalCheck> checks;
    bool pass = false;
};

/// Reduces every critical monomial along each possible first step; passes
/// iff all resulting normal forms agree, per monomial.
ConfluenceReport confluence_report(const RewriteSystem& rs);

/// Plain-text rendering: one block per critical monomial with every
/// reduction chain spelled out, then the global verdict.
std::string render_report(const ConfluenceReport& report, const GeneratorSet& gens);

/// Number of arity-n monomials containing no rule lhs.
int count_normal_forms(const RewriteSystem& rs, int arity);

/// With f(t) = Σ_{n=1..N} (−1)^n dims[n−1] t^n for both inputs, checks
/// f_dual(f_p(t)) ≡ t modulo t^{N+1}. Requires both lists to cover 1..N.
bool poincare_consistency(const std::vector<int>& dims_p,
                          const std::vector<int>& dims_dual, int trunc);

}  // namespace operadkit
