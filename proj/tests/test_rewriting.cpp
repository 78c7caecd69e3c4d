#include <doctest.h>

#include "operadkit/linalg.hpp"
#include "operadkit/rewriting.hpp"

#include <algorithm>
#include <random>
#include <set>

using namespace operadkit;

namespace {

TreeMonomial mono(const GeneratorSet& gens, int outer, int slot, int inner)
{
    return graft(corolla(outer, gens), slot, corolla(inner, gens), gens);
}

OperadElement single(const TreeMonomial& t)
{
    OperadElement e;
    add_term(e, t, Rational(1));
    return e;
}

// The two vertices covered by a weight-2 pattern occurrence: the matched
// root and the child the pattern labels internally.
std::pair<int, int> occurrence_vertices(const TreeMonomial& t, const Occurrence& o,
                                        const RewriteSystem& rs)
{
    const TreeMonomial& lhs = rs.rules[static_cast<size_t>(o.rule)].lhs;
    const auto lhs_kids = child_starts(lhs, rs.gens(), 0);
    int inner_slot = -1;
    for (size_t c = 0; c < lhs_kids.size(); ++c)
        if (lhs.code[static_cast<size_t>(lhs_kids[c])] != TreeMonomial::kLeaf)
            inner_slot = static_cast<int>(c);
    REQUIRE(inner_slot >= 0);
    return {o.pos, child_starts(t, rs.gens(), o.pos)[static_cast<size_t>(inner_slot)]};
}

bool is_right_comb(const TreeMonomial& t, const GeneratorSet& gens)
{
    if (is_identity(t))
        return true;
    const auto kids = child_starts(t, gens, 0);
    if (t.code[static_cast<size_t>(kids[0])] != TreeMonomial::kLeaf)
        return false;
    TreeMonomial rest{std::vector<int>(t.code.begin() + kids[1], t.code.end())};
    return is_right_comb(rest, gens);
}

}  // namespace

TEST_CASE("orientation of the three presets")
{
    SUBCASE("one associative product")
    {
        const RewriteSystem rs = orient(preset("as"));
        REQUIRE(rs.rules.size() == 1);
        CHECK(rs.rules[0].lhs == mono(rs.gens(), 0, 0, 0));
        CHECK(rs.rules[0].rhs == single(mono(rs.gens(), 0, 1, 0)));
    }
    SUBCASE("totally compatible pair")
    {
        const RewriteSystem rs = orient(preset("two_as"));
        REQUIRE(rs.rules.size() == 5);
        const GeneratorSet& g = rs.gens();
        std::set<TreeMonomial> lhs_set;
        for (const RewriteRule& r : rs.rules)
            lhs_set.insert(r.lhs);
        CHECK(lhs_set
              == std::set<TreeMonomial>{mono(g, 0, 0, 0), mono(g, 0, 0, 1),
                                        mono(g, 1, 0, 0), mono(g, 1, 0, 1),
                                        mono(g, 0, 1, 1)});
        // Every right-hand side is a single right comb.
        for (const RewriteRule& r : rs.rules) {
            REQUIRE(r.rhs.size() == 1);
            CHECK(r.rhs.begin()->second == 1);
        }
        // Spot-check the mixed rules.
        for (const RewriteRule& r : rs.rules) {
            if (r.lhs == mono(g, 0, 0, 1) || r.lhs == mono(g, 1, 0, 0)
                || r.lhs == mono(g, 0, 1, 1))
                CHECK(r.rhs == single(mono(g, 1, 1, 0)));
            if (r.lhs == mono(g, 0, 0, 0))
                CHECK(r.rhs == single(mono(g, 0, 1, 0)));
            if (r.lhs == mono(g, 1, 0, 1))
                CHECK(r.rhs == single(mono(g, 1, 1, 1)));
        }
    }
    SUBCASE("linearly compatible pair")
    {
        const RewriteSystem rs = orient(preset("as_2"));
        REQUIRE(rs.rules.size() == 3);
        const GeneratorSet& g = rs.gens();
        for (const RewriteRule& r : rs.rules) {
            if (r.lhs == mono(g, 0, 0, 1)) {
                // Four-term compatibility oriented at its leading monomial.
                OperadElement expect;
                add_term(expect, mono(g, 1, 0, 0), Rational(-1));
                add_term(expect, mono(g, 0, 1, 1), Rational(1));
                add_term(expect, mono(g, 1, 1, 0), Rational(1));
                CHECK(r.rhs == expect);
            }
        }
        std::set<TreeMonomial> lhs_set;
        for (const RewriteRule& r : rs.rules)
            lhs_set.insert(r.lhs);
        CHECK(lhs_set
              == std::set<TreeMonomial>{mono(g, 0, 0, 0), mono(g, 0, 0, 1),
                                        mono(g, 1, 0, 1)});
    }
}

TEST_CASE("rules are inter-reduced and order-decreasing")
{
    for (const char* name : {"as", "two_as", "as_2"}) {
        const RewriteSystem rs = orient(preset(name));
        for (const RewriteRule& r : rs.rules)
            for (const auto& [t, c] : r.rhs) {
                CHECK(path_lex_compare(t, r.lhs, rs.gens()) < 0);
                for (const RewriteRule& other : rs.rules)
                    CHECK(t != other.lhs);
            }
    }
}

TEST_CASE("normalize pinned examples")
{
    const RewriteSystem rs = orient(preset("two_as"));
    const GeneratorSet& g = rs.gens();

    CHECK(normalize(single(mono(g, 0, 0, 0)), rs) == single(mono(g, 0, 1, 0)));
    CHECK(normalize(single(mono(g, 0, 1, 1)), rs) == single(mono(g, 1, 1, 0)));

    for (const TreeMonomial& t : enumerate_monomials(g, 3)) {
        const OperadElement nf = normalize(single(t), rs);
        REQUIRE(nf.size() == 1);
        CHECK(is_right_comb(nf.begin()->first, g));
        CHECK(is_normal_form(nf.begin()->first, rs));
    }
}

TEST_CASE("critical monomials")
{
    SUBCASE("single product: one left comb")
    {
        const RewriteSystem rs = orient(preset("as"));
        const auto crits = critical_monomials(rs);
        REQUIRE(crits.size() == 1);
        const TreeMonomial expected = graft(
            mono(rs.gens(), 0, 0, 0), 0, corolla(0, rs.gens()), rs.gens());
        CHECK(crits[0] == expected);
    }
    SUBCASE("totally compatible: the pinned 12")
    {
        const RewriteSystem rs = orient(preset("two_as"));
        const GeneratorSet& g = rs.gens();
        std::set<TreeMonomial> expected;
        // Eight left combs: root label i over (slot-0 child j over slot-0 k).
        for (int i = 0; i < 2; ++i)
            for (int j = 0; j < 2; ++j)
                for (int k = 0; k < 2; ++k)
                    expected.insert(graft(corolla(i, g), 0,
                                          graft(corolla(j, g), 0, corolla(k, g), g), g));
        // Four mixed-slot overlaps.
        expected.insert(graft(corolla(0, g), 1, mono(g, 1, 0, 1), g));
        expected.insert(graft(corolla(0, g), 0, mono(g, 0, 1, 1), g));
        expected.insert(graft(corolla(1, g), 0, mono(g, 0, 1, 1), g));
        expected.insert(graft(corolla(0, g), 1, mono(g, 1, 0, 0), g));

        const auto crits = critical_monomials(rs);
        CHECK(crits.size() == 12);
        CHECK(std::set<TreeMonomial>(crits.begin(), crits.end()) == expected);
    }
    SUBCASE("brute-force overlap oracle agrees on every preset")
    {
        for (const char* name : {"as", "two_as", "as_2"}) {
            const RewriteSystem rs = orient(preset(name));
            std::set<TreeMonomial> oracle;
            for (const TreeMonomial& t : enumerate_monomials(rs.gens(), 4)) {
                const auto occ = find_occurrences(t, rs);
                for (size_t a = 0; a < occ.size(); ++a)
                    for (size_t b = a + 1; b < occ.size(); ++b) {
                        const auto [ra, ia] = occurrence_vertices(t, occ[a], rs);
                        const auto [rb, ib] = occurrence_vertices(t, occ[b], rs);
                        // Chain overlap: one pattern's inner vertex is the
                        // other's root (never the shared-root case).
                        if (ia == rb || ib == ra)
                            oracle.insert(t);
                    }
            }
            const auto crits = critical_monomials(rs);
            CHECK(std::set<TreeMonomial>(crits.begin(), crits.end()) == oracle);
        }
    }
}

TEST_CASE("confluence of the presets")
{
    for (const char* name : {"as", "two_as", "as_2"}) {
        const ConfluenceReport report = confluence_report(orient(preset(name)));
        CHECK(report.pass);
        for (const CriticalCheck& check : report.checks)
            CHECK(check.confluent);
    }
}

TEST_CASE("pentagon for the single associative product")
{
    const RewriteSystem rs = orient(preset("as"));
    const ConfluenceReport report = confluence_report(rs);
    REQUIRE(report.checks.size() == 1);
    const CriticalCheck& check = report.checks[0];
    REQUIRE(check.chains.size() == 2);

    // The two chains have 3 and 4 nodes and 5 distinct elements in total.
    std::multiset<size_t> sizes;
    std::set<std::string> seen;
    for (const ReductionChain& chain : check.chains) {
        sizes.insert(chain.steps.size());
        for (const OperadElement& e : chain.steps)
            seen.insert(render_element(e, rs.gens()));
    }
    CHECK(sizes == std::multiset<size_t>{3, 4});
    CHECK(seen.size() == 5);
}

TEST_CASE("decagon-shaped trace for the mixed-slot critical monomial")
{
    const RewriteSystem rs = orient(preset("two_as"));
    const GeneratorSet& g = rs.gens();
    const TreeMonomial target = graft(corolla(0, g), 1, mono(g, 1, 0, 1), g);

    const ConfluenceReport report = confluence_report(rs);
    const CriticalCheck* found = nullptr;
    for (const CriticalCheck& check : report.checks)
        if (check.monomial == target)
            found = &check;
    REQUIRE(found != nullptr);

    REQUIRE(found->chains.size() == 2);
    const OperadElement meet = single(graft(corolla(1, g), 1, mono(g, 1, 1, 0), g));
    for (const ReductionChain& chain : found->chains) {
        CHECK(chain.steps.size() >= 3);
        CHECK(chain.steps.back() == meet);
    }
    std::multiset<size_t> sizes;
    for (const ReductionChain& chain : found->chains)
        sizes.insert(chain.steps.size());
    CHECK(sizes == std::multiset<size_t>{3, 4});

    // The report text shows the block for this monomial.
    const std::string text = render_report(report, g);
    CHECK(text.find("critical: " + render_tree(target, g)) != std::string::npos);
    CHECK(text.find("verdict: pass (12 critical monomials)") != std::string::npos);
}

TEST_CASE("flipped rule is caught with a witness")
{
    RewriteSystem rs = orient(preset("two_as"));
    const GeneratorSet& g = rs.gens();
    for (RewriteRule& r : rs.rules)
        if (r.lhs == mono(g, 0, 1, 1))
            r.rhs = element_scale(Rational(-1), r.rhs);  // wrong sign

    const ConfluenceReport report = confluence_report(rs);
    CHECK_FALSE(report.pass);
    bool witnessed = false;
    for (const CriticalCheck& check : report.checks)
        if (!check.confluent) {
            witnessed = true;
            // The witness exposes two genuinely different normal forms.
            std::set<std::string> ends;
            for (const ReductionChain& chain : check.chains)
                ends.insert(render_element(chain.steps.back(), g));
            CHECK(ends.size() >= 2);
        }
    CHECK(witnessed);
    const std::string text = render_report(report, g);
    CHECK(text.find("confluent: no") != std::string::npos);
    CHECK(text.find("verdict: fail") != std::string::npos);
}

TEST_CASE("normal-form counts")
{
    const RewriteSystem two_as = orient(preset("two_as"));
    for (int n = 1; n <= 8; ++n)
        CHECK(count_normal_forms(two_as, n) == n);

    const RewriteSystem as = orient(preset("as"));
    for (int n = 1; n <= 6; ++n)
        CHECK(count_normal_forms(as, n) == 1);

    const RewriteSystem as_2 = orient(preset("as_2"));
    const int catalan[] = {1, 2, 5, 14, 42, 132};
    for (int n = 1; n <= 6; ++n)
        CHECK(count_normal_forms(as_2, n) == catalan[n - 1]);
}

TEST_CASE("termination within budget and budget enforcement")
{
    const RewriteSystem rs = orient(preset("two_as"));
    const GeneratorSet& g = rs.gens();

    // Worst-case arity-8 monomial: a full left comb of alternating labels.
    TreeMonomial comb = corolla(0, g);
    for (int k = 1; k < 7; ++k)
        comb = graft(corolla(k % 2, g), 0, comb, g);
    REQUIRE(tree_arity(comb, g) == 8);
    const OperadElement nf = normalize(single(comb), rs);
    REQUIRE(nf.size() == 1);
    CHECK(is_normal_form(nf.begin()->first, rs));

    CHECK_THROWS_AS(normalize(single(comb), rs, 2), std::runtime_error);
}

TEST_CASE("random strategies agree with the deterministic one")
{
    std::mt19937 rng(20240815);
    for (const char* name : {"two_as", "as_2"}) {
        const RewriteSystem rs = orient(preset(name));
        const GeneratorSet& g = rs.gens();
        for (int trial = 0; trial < 50; ++trial) {
            std::uniform_int_distribution<int> arity_pick(3, 6);
            const int arity = arity_pick(rng);
            const auto monos = enumerate_monomials(g, arity);
            std::uniform_int_distribution<size_t> mono_pick(0, monos.size() - 1);
            std::uniform_int_distribution<int> coeff_pick(-3, 3);
            OperadElement e;
            for (int terms = 0; terms < 3; ++terms)
                add_term(e, monos[mono_pick(rng)], Rational(coeff_pick(rng)));
            const OperadElement expected = normalize(e, rs);
            CHECK(normalize_random(e, rs, rng) == expected);
        }
    }
}

TEST_CASE("arity-3 ideal membership equals vanishing normal form")
{
    const QuadraticPresentation p = preset("two_as");
    const RewriteSystem rs = orient(p);
    const GeneratorSet& g = rs.gens();

    std::vector<RatVector> relator_rows;
    for (const OperadElement& r : p.relators)
        relator_rows.push_back(to_weight2(r, g).coords);
    const RatMatrix span = RatMatrix::from_rows(relator_rows);

    std::mt19937 rng(7);
    std::uniform_int_distribution<int> coeff(-2, 2);
    const auto basis = weight2_basis(g);
    int in_span = 0;
    for (int trial = 0; trial < 60; ++trial) {
        OperadElement e;
        for (size_t k = 0; k < basis.size(); ++k)
            add_term(e, basis[k], Rational(coeff(rng)));
        const bool vanishes = is_zero(normalize(e, rs));
        const bool member = in_row_space(span, to_weight2(e, g).coords);
        CHECK(vanishes == member);
        in_span += member ? 1 : 0;
    }
    // Make sure the sample really exercised both outcomes.
    for (const OperadElement& r : p.relators)
        CHECK(is_zero(normalize(r, rs)));
    CHECK(in_span < 60);
}

TEST_CASE("series consistency for dual pairs")
{
    const std::vector<int> as_dims = {1, 1, 1, 1, 1, 1};
    CHECK(poincare_consistency(as_dims, as_dims, 6));

    const std::vector<int> two_as_dims = {1, 2, 3, 4, 5};
    const std::vector<int> as_2_dims = {1, 2, 5, 14, 42};
    CHECK(poincare_consistency(two_as_dims, as_2_dims, 5));
    CHECK(poincare_consistency(as_2_dims, two_as_dims, 5));

    CHECK_FALSE(poincare_consistency(two_as_dims, {1, 1, 1, 1, 1}, 5));
    CHECK_FALSE(poincare_consistency(two_as_dims, {1, 2, 5, 14, 41}, 5));
    CHECK_THROWS_AS(poincare_consistency({1, 2}, {1, 2}, 5), std::invalid_argument);
}
