#include <doctest.h>

#include "operadkit/element.hpp"
#include "operadkit/tree.hpp"

#include <set>

using namespace operadkit;

namespace {

// Two binary generators with the standard strict order: "*" above "•".
GeneratorSet two_gens()
{
    GeneratorSet g;
    g.add("*", 2);
    g.add("•", 2);
    return g;
}

std::vector<TreeMonomial> all_up_to(const GeneratorSet& gens, int max_arity)
{
    std::vector<TreeMonomial> out;
    for (int n = 1; n <= max_arity; ++n)
        for (const TreeMonomial& t : enumerate_monomials(gens, n))
            out.push_back(t);
    return out;
}

}  // namespace

TEST_CASE("corolla and identity basics")
{
    const GeneratorSet gens = two_gens();
    CHECK(is_identity(identity_tree()));
    CHECK(tree_arity(identity_tree(), gens) == 1);
    CHECK(tree_weight(identity_tree()) == 0);

    const TreeMonomial star = corolla(0, gens);
    CHECK(star.code == std::vector<int>{0, -1, -1});
    CHECK(tree_arity(star, gens) == 2);
    CHECK(tree_weight(star) == 1);
}

TEST_CASE("graft unit law and basic composite")
{
    const GeneratorSet gens = two_gens();
    for (const TreeMonomial& t : all_up_to(gens, 4)) {
        CHECK(graft(identity_tree(), 0, t, gens) == t);
        for (int s = 0; s < tree_arity(t, gens); ++s)
            CHECK(graft(t, s, identity_tree(), gens) == t);
    }

    // mu1 o_1 mu2 in slot language: graft at slot 0.
    const TreeMonomial m = graft(corolla(0, gens), 0, corolla(1, gens), gens);
    CHECK(m.code == std::vector<int>{0, 1, -1, -1, -1});
    CHECK(tree_arity(m, gens) == 3);

    CHECK_THROWS_AS(graft(corolla(0, gens), 2, corolla(1, gens), gens),
                    std::out_of_range);
}

TEST_CASE("sequential composition axioms by brute force")
{
    const GeneratorSet gens = two_gens();
    const auto as = all_up_to(gens, 4);
    const auto bs = all_up_to(gens, 3);
    const auto cs = all_up_to(gens, 2);
    for (const TreeMonomial& a : as) {
        const int n = tree_arity(a, gens);
        for (const TreeMonomial& b : bs) {
            const int m = tree_arity(b, gens);
            for (const TreeMonomial& c : cs) {
                // Nested: plug c inside b, before or after plugging b into a.
                for (int i = 0; i < n; ++i)
                    for (int j = 0; j < m; ++j)
                        CHECK(graft(graft(a, i, b, gens), i + j, c, gens)
                              == graft(a, i, graft(b, j, c, gens), gens));
                // Parallel: two disjoint slots of a, either order.
                for (int i = 0; i < n; ++i)
                    for (int i2 = i + 1; i2 < n; ++i2)
                        CHECK(graft(graft(a, i, b, gens), i2 + m - 1, c, gens)
                              == graft(graft(a, i2, c, gens), i, b, gens));
            }
        }
    }
}

TEST_CASE("enumeration matches Catalan times label count")
{
    const GeneratorSet gens = two_gens();
    const int expected[] = {1, 2, 8, 40, 224, 1344};  // n = 1..6
    for (int n = 1; n <= 6; ++n) {
        const auto all = enumerate_monomials(gens, n);
        CHECK(static_cast<int>(all.size()) == expected[n - 1]);

        // Codes are injective and round-trip through decode.
        std::set<std::vector<int>> codes;
        for (const TreeMonomial& t : all) {
            CHECK(tree_arity(t, gens) == n);
            CHECK(decode(encode(t), gens) == t);
            codes.insert(encode(t));
        }
        CHECK(codes.size() == all.size());
    }
}

TEST_CASE("decode rejects malformed codes")
{
    const GeneratorSet gens = two_gens();
    CHECK_THROWS_AS(decode({0, -1}, gens), std::invalid_argument);
    CHECK_THROWS_AS(decode({0, -1, -1, -1}, gens), std::invalid_argument);
    CHECK_THROWS_AS(decode({5, -1, -1}, gens), std::invalid_argument);
    CHECK_THROWS_AS(decode({}, gens), std::invalid_argument);
}

TEST_CASE("pinned leading-term comparisons")
{
    const GeneratorSet gens = two_gens();
    const TreeMonomial m1 = corolla(0, gens);
    const TreeMonomial m2 = corolla(1, gens);

    // mu1 o1 mu1 beats mu1 o2 mu1.
    CHECK(path_lex_compare(graft(m1, 0, m1, gens), graft(m1, 1, m1, gens), gens) == 1);
    // mu1 o2 mu2 beats mu2 o2 mu1.
    CHECK(path_lex_compare(graft(m1, 1, m2, gens), graft(m2, 1, m1, gens), gens) == 1);
    // Reflexivity and antisymmetry.
    const TreeMonomial a = graft(m2, 0, m1, gens);
    CHECK(path_lex_compare(a, a, gens) == 0);
    CHECK(path_lex_compare(graft(m1, 1, m1, gens), graft(m1, 0, m1, gens), gens) == -1);

    CHECK_THROWS_AS(path_lex_compare(m1, identity_tree(), gens), std::invalid_argument);
}

TEST_CASE("order is total and graft-compatible on small arities")
{
    const GeneratorSet gens = two_gens();
    for (int n = 2; n <= 4; ++n) {
        const auto all = enumerate_monomials(gens, n);
        // Totality and antisymmetry.
        for (const TreeMonomial& a : all)
            for (const TreeMonomial& b : all) {
                const int ab = path_lex_compare(a, b, gens);
                CHECK(path_lex_compare(b, a, gens) == -ab);
                CHECK((ab == 0) == (a == b));
            }
        // Compatibility with grafting on both sides.
        const auto cs = all_up_to(gens, 2);
        for (const TreeMonomial& a : all)
            for (const TreeMonomial& b : all) {
                const int ab = path_lex_compare(a, b, gens);
                if (ab <= 0)
                    continue;
                for (const TreeMonomial& c : cs) {
                    for (int s = 0; s < n; ++s)
                        CHECK(path_lex_compare(graft(a, s, c, gens),
                                               graft(b, s, c, gens), gens) == 1);
                    for (int s = 0; s < tree_arity(c, gens); ++s)
                        CHECK(path_lex_compare(graft(c, s, a, gens),
                                               graft(c, s, b, gens), gens) == 1);
                }
            }
    }
}

TEST_CASE("order is transitive on arity 3")
{
    const GeneratorSet gens = two_gens();
    const auto all = enumerate_monomials(gens, 3);
    for (const TreeMonomial& a : all)
        for (const TreeMonomial& b : all)
            for (const TreeMonomial& c : all)
                if (path_lex_compare(a, b, gens) > 0 && path_lex_compare(b, c, gens) > 0)
                    CHECK(path_lex_compare(a, c, gens) > 0);
}

TEST_CASE("rendering")
{
    const GeneratorSet gens = two_gens();
    const TreeMonomial m = graft(corolla(1, gens), 0, corolla(0, gens), gens);
    CHECK(render_tree(m, gens) == "(x1*x2)•x3");
    CHECK(render_tree(identity_tree(), gens) == "x1");
    CHECK(render_tree(graft(corolla(0, gens), 1, corolla(1, gens), gens), gens)
          == "x1*(x2•x3)");

    GeneratorSet mixed;
    mixed.add("m", 3);
    CHECK(render_tree(corolla(0, mixed), mixed) == "m(x1,x2,x3)");
}

TEST_CASE("generator set validation")
{
    GeneratorSet g;
    g.add("*", 2);
    CHECK_THROWS_AS(g.add("*", 2), std::invalid_argument);
    CHECK_THROWS_AS(g.add("f", 0), std::invalid_argument);
    CHECK(g.index_of("*") == 0);
    CHECK(g.index_of("?") == -1);
}

TEST_CASE("element arithmetic and grafting")
{
    const GeneratorSet gens = two_gens();
    const TreeMonomial t = corolla(0, gens);
    const TreeMonomial s = corolla(1, gens);

    OperadElement e;
    add_term(e, t, Rational(2));
    OperadElement f;
    add_term(f, s, Rational(3));

    // (2 t) grafted with (3 s) gives 6 (t o_1 s).
    const OperadElement g = graft_element(e, 0, f, gens);
    REQUIRE(g.size() == 1);
    CHECK(g.begin()->second == 6);
    CHECK(g.begin()->first == graft(t, 0, s, gens));

    // Cancellation removes the stored term.
    OperadElement z = e;
    add_term(z, t, Rational(-2));
    CHECK(is_zero(z));

    // Distributivity against term-by-term grafting.
    OperadElement two_terms;
    add_term(two_terms, t, Rational(1, 2));
    add_term(two_terms, s, Rational(-5));
    const OperadElement lhs = graft_element(two_terms, 1, f, gens);
    OperadElement rhs;
    add_term(rhs, graft(t, 1, s, gens), Rational(3, 2));
    add_term(rhs, graft(s, 1, s, gens), Rational(-15));
    CHECK(lhs == rhs);

    // Grafting a relator into the identity element keeps it unchanged.
    OperadElement relator;
    add_term(relator, graft(t, 0, t, gens), Rational(1));
    add_term(relator, graft(t, 1, t, gens), Rational(-1));
    OperadElement id_elem;
    add_term(id_elem, identity_tree(), Rational(1));
    CHECK(graft_element(id_elem, 0, relator, gens) == relator);

    // Mixed arities inside one element are rejected.
    OperadElement mixed;
    add_term(mixed, t, Rational(1));
    add_term(mixed, identity_tree(), Rational(1));
    CHECK_THROWS_AS(element_arity(mixed, gens), std::invalid_argument);

    // Leading monomial under the monomial order.
    const TreeMonomial* lead = leading_monomial(relator, gens);
    REQUIRE(lead != nullptr);
    CHECK(*lead == graft(t, 0, t, gens));
    CHECK(leading_monomial(OperadElement{}, gens) == nullptr);
}
