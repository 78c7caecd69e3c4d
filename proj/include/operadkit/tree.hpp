#pragma once

#include <string>
#include <vector>

namespace operadkit {

/// Labeled operation symbol. `rank` positions the symbol in the strict
/// generator order used by the monomial order: smaller rank = greater symbol.
struct GeneratorSymbol {
    std::string id;
    int arity = 2;
    int degree = 0;
    int rank = 0;

    bool operator==(const GeneratorSymbol&) const = default;
};

/// Ordered collection of generator symbols; trees refer to them by index.
class GeneratorSet {
public:
    /// Adds a symbol and returns its index. `rank` defaults to the insertion
    /// index when negative. Throws std::invalid_argument on duplicate id or
    /// non-positive arity.
    int add(const std::string& id, int arity, int degree = 0, int rank = -1);

    int size() const { return static_cast<int>(symbols_.size()); }
    const GeneratorSymbol& operator[](int i) const;

    /// Index of the symbol with this id, or -1.
    int index_of(const std::string& id) const;

private:
    std::vector<GeneratorSymbol> symbols_;
};

/// Planar rooted tree with internal vertices labeled by generator indices.
/// Stored as the preorder code: kLeaf marks a leaf, any other entry is the
/// generator index of an internal vertex (its children follow in order).
/// Equality of monomials is equality of codes.
struct TreeMonomial {
    static constexpr int kLeaf = -1;

    std::vector<int> code;

    auto operator<=>(const TreeMonomial&) const = default;
};

/// The arity-1 identity: a bare leaf.
TreeMonomial identity_tree();

/// Single vertex labeled `gen` with all-leaf children.
TreeMonomial corolla(int gen, const GeneratorSet& gens);

bool is_identity(const TreeMonomial& t);

/// True iff the code is a well-formed preorder encoding over `gens`.
bool valid_tree(const TreeMonomial& t, const GeneratorSet& gens);

/// Number of leaves. Throws std::invalid_argument on malformed code.
int tree_arity(const TreeMonomial& t, const GeneratorSet& gens);

/// Number of internal vertices.
int tree_weight(const TreeMonomial& t);

/// Sum of the degrees of the internal labels.
int tree_degree(const TreeMonomial& t, const GeneratorSet& gens);

/// One-past-the-end code index of the subtree rooted at `pos`.
int subtree_end(const TreeMonomial& t, const GeneratorSet& gens, int pos);

/// Code indices where the children of the internal vertex at `pos` start.
std::vector<int> child_starts(const TreeMonomial& t, const GeneratorSet& gens, int pos);

/// Code index of the `slot`-th leaf (slots count from 0, left to right).
/// Throws std::out_of_range when there is no such leaf.
int leaf_position(const TreeMonomial& t, int slot);

/// Partial composition: plugs `inner` into the `slot`-th leaf of `outer`.
/// Slots count from 0; the classical o_i (i from 1) is graft at slot i-1.
TreeMonomial graft(const TreeMonomial& outer, int slot, const TreeMonomial& inner,
                   const GeneratorSet& gens);

/// Replaces leaf i of `pattern` by args[i] for every i simultaneously.
TreeMonomial substitute(const TreeMonomial& pattern,
                        const std::vector<TreeMonomial>& args,
                        const GeneratorSet& gens);

/// For each leaf, the generator indices met on the root-to-leaf path.
std::vector<std::vector<int>> leaf_paths(const TreeMonomial& t, const GeneratorSet& gens);

/// Monomial order: returns +1 if a > b, -1 if a < b, 0 if equal.
///
/// Compares leaf paths left to right; two paths are compared by length first
/// (longer = greater), then letter by letter with smaller generator rank =
/// greater. This makes the order compatible with grafting on both sides.
/// Throws std::invalid_argument when the arities differ.
int path_lex_compare(const TreeMonomial& a, const TreeMonomial& b,
                     const GeneratorSet& gens);

/// All tree monomials with the given leaf count, every vertex labeled from
/// `gens`. Deterministic order.
std::vector<TreeMonomial> enumerate_monomials(const GeneratorSet& gens, int arity);

/// Preorder encoding (the code itself) and its validated inverse.
std::vector<int> encode(const TreeMonomial& t);
TreeMonomial decode(const std::vector<int>& code, const GeneratorSet& gens);

/// Nested-expression rendering with leaves x1..xn: binary vertices print
/// infix ("(x1*x2)•x3"), other arities print functionally ("f(x1,x2,x3)").
std::string render_tree(const TreeMonomial& t, const GeneratorSet& gens);

}  // namespace operadkit
