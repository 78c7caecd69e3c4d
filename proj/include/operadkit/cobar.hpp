#pragma once

#include "operadkit/element.hpp"
#include "operadkit/tree.hpp"

#include <functional>
#include <map>
#include <string>
#include <utility>
#include <vector>

namespace operadkit {

/// Basis operation of the totally compatible operad: i factors of the first
/// product and j of the second; arity i+j+1. (0,0) is the identity.
struct TwoAsBasis {
    int i = 0;
    int j = 0;

    bool operator==(const TwoAsBasis&) const = default;
    auto operator<=>(const TwoAsBasis&) const = default;
};

inline int arity(TwoAsBasis b) { return b.i + b.j + 1; }

/// Full composition; throws std::invalid_argument unless inners.size() equals
/// arity(outer).
TwoAsBasis gamma(TwoAsBasis outer, const std::vector<TwoAsBasis>& inners);

/// Partial composition at a 0-based slot; the result never depends on the
/// slot. Throws std::out_of_range on a bad slot.
TwoAsBasis partial_compose(TwoAsBasis outer, int slot, TwoAsBasis inner);

/// One term of the reduced infinitesimal decomposition: outer with inner
/// plugged into slot p (both factors non-identity).
struct Delta1Term {
    TwoAsBasis outer;
    int p = 0;
    TwoAsBasis inner;

    bool operator==(const Delta1Term&) const = default;
    auto operator<=>(const Delta1Term&) const = default;
};

/// All two-factor splittings of (c,d) with both factors non-identity; the
/// linear dual of partial_compose. Throws std::invalid_argument if c+d < 1.
std::vector<Delta1Term> delta1(int c, int d);

/// Cobar generator m[i,j]: arity i+j+1, homological degree i+j-1.
struct CobarGenerator {
    int i = 0;
    int j = 0;

    bool operator==(const CobarGenerator&) const = default;
    auto operator<=>(const CobarGenerator&) const = default;
};

inline int arity(CobarGenerator g) { return g.i + g.j + 1; }
inline int degree(CobarGenerator g) { return g.i + g.j - 1; }

/// One signed term outer(id^p, inner, id^r) of a differential.
struct DifferentialTerm {
    int sign = 1;  // ±1
    CobarGenerator outer;
    int p = 0;
    CobarGenerator inner;
    int r = 0;

    bool operator==(const DifferentialTerm&) const = default;
};

struct DifferentialExpression {
    CobarGenerator source;
    std::vector<DifferentialTerm> terms;
};

/// Sign exponent for the term with p leading identities, inner arity q, and
/// r trailing identities. The default is p + q·r.
using SignRule = std::function<int(int p, int q, int r)>;

SignRule default_sign_rule();

/// The differential of the cobar generator m[i,j]: one term per splitting
/// (a+c = i, b+d = j, both factors non-identity, 0 ≤ p ≤ a+b), with sign
/// (−1)^{p+qr}, q = inner arity. Terms are listed with the outer index pair
/// descending lexicographically and p ascending.
DifferentialExpression cobar_differential(CobarGenerator g);
DifferentialExpression cobar_differential_with(CobarGenerator g,
                                               const SignRule& sign);

/// `d m[i,j] = + m[a,b](1,m[c,d],...) - ...`; identity slots print as 1,
/// the zero differential prints as 0.
std::string render_differential(const DifferentialExpression& expr);

/// Shared generator bookkeeping for computations in the free operad on the
/// m[i,j]: a GeneratorSet whose symbols carry the (arity, degree) of each
/// generator with i+j+1 ≤ max_arity.
struct CobarContext {
    int max_arity = 0;
    GeneratorSet gens;
    std::vector<CobarGenerator> by_index;           // generator index -> (i,j)
    std::map<std::pair<int, int>, int> index_of;    // (i,j) -> generator index
};

CobarContext make_cobar_context(int max_arity);

/// corolla of m[i,j] viewed in the context's generator set.
TreeMonomial cobar_corolla(CobarGenerator g, const CobarContext& ctx);

/// Extends the generator differential to tree monomials over the m[i,j] as a
/// degree −1 derivation: vertices are hit left to right in preorder with the
/// Koszul prefix sign, and the inner factor of each replacement picks up the
/// Koszul sign for jumping over the subtrees left of its slot.
OperadElement cobar_boundary(const OperadElement& e, const CobarContext& ctx,
                             const SignRule& sign = default_sign_rule());

struct CheckResult {
    bool ok = true;
    std::string witness;  // empty when ok
};

/// Verifies ∂(∂ m[i,j]) = 0 for every generator of arity ≤ max_arity; on
/// failure reports the first surviving term.
CheckResult d_squared_check(int max_arity);
CheckResult d_squared_check_with(int max_arity, const SignRule& sign);

/// Compares the j = 0 restriction of the differential with the classical
/// one-product infinity-differential table under m[i,0] ↔ m_{i+1}, through
/// generators of arity ≤ max_arity.
bool ainfty_slice_check(int max_arity);

}  // namespace operadkit
