#include "operadkit/presentation.hpp"

#include <array>
#include <cctype>
#include <initializer_list>
#include <sstream>
#include <stdexcept>
#include <utility>

namespace operadkit {

namespace {

RatMatrix relator_matrix(const QuadraticPresentation& p)
{
    std::vector<RatVector> rows;
    for (const OperadElement& r : p.relators)
        rows.push_back(to_weight2(r, p.generators).coords);
    if (rows.empty())
        return RatMatrix(0, 2 * p.generators.size() * p.generators.size());
    return RatMatrix::from_rows(rows);
}

}  // namespace

QuadraticPresentation make_presentation(GeneratorSet gens,
                                        std::vector<OperadElement> relators)
{
    for (int g = 0; g < gens.size(); ++g)
        if (gens[g].arity != 2 || gens[g].degree != 0)
            throw std::invalid_argument(
                "presentation generators must be binary of degree 0");
    QuadraticPresentation p{std::move(gens), std::move(relators)};
    for (const OperadElement& r : p.relators)
        if (is_zero(r))
            throw std::invalid_argument("zero relator");
    const RatMatrix m = relator_matrix(p);  // validates weight-2 shape
    if (rank(m) != static_cast<int>(p.relators.size()))
        throw std::invalid_argument("relators are linearly dependent");
    return p;
}

QuadraticPresentation preset(const std::string& name)
{
    GeneratorSet gens;
    auto mono = [&gens](int outer, int slot, int inner) {
        return graft(corolla(outer, gens), slot, corolla(inner, gens), gens);
    };
    auto combo = [&](std::initializer_list<std::pair<std::array<int, 3>, int>> terms) {
        OperadElement e;
        for (const auto& [idx, coeff] : terms)
            add_term(e, mono(idx[0], idx[1], idx[2]), Rational(coeff));
        return e;
    };

    if (name == "as") {
        gens.add("*", 2);
        return make_presentation(gens, {combo({{{0, 0, 0}, 1}, {{0, 1, 0}, -1}})});
    }
    if (name == "two_as") {
        gens.add("*", 2);
        gens.add("•", 2);
        return make_presentation(
            gens,
            {
                // All five parenthesization identities of a totally
                // compatible pair of products, (x?y)?z = x?(y?z) style.
                combo({{{0, 0, 0}, 1}, {{0, 1, 0}, -1}}),  // (x*y)*z = x*(y*z)
                combo({{{0, 0, 1}, 1}, {{1, 1, 0}, -1}}),  // (x•y)*z = x•(y*z)
                combo({{{1, 0, 0}, 1}, {{1, 1, 0}, -1}}),  // (x*y)•z = x•(y*z)
                combo({{{1, 0, 1}, 1}, {{1, 1, 1}, -1}}),  // (x•y)•z = x•(y•z)
                combo({{{0, 1, 1}, 1}, {{1, 1, 0}, -1}}),  // x*(y•z) = x•(y*z)
            });
    }
    if (name == "as_2") {
        gens.add("*", 2);
        gens.add("•", 2);
        return make_presentation(
            gens,
            {
                combo({{{0, 0, 0}, 1}, {{0, 1, 0}, -1}}),  // * associative
                combo({{{1, 0, 1}, 1}, {{1, 1, 1}, -1}}),  // • associative
                // (x•y)*z + (x*y)•z = x•(y*z) + x*(y•z)
                combo({{{0, 0, 1}, 1},
                       {{1, 0, 0}, 1},
                       {{1, 1, 0}, -1},
                       {{0, 1, 1}, -1}}),
            });
    }
    throw std::invalid_argument("unknown preset: " + name);
}

std::vector<TreeMonomial> weight2_basis(const GeneratorSet& gens)
{
    std::vector<TreeMonomial> basis;
    for (int slot = 0; slot < 2; ++slot)
        for (int outer = 0; outer < gens.size(); ++outer)
            for (int inner = 0; inner < gens.size(); ++inner)
                basis.push_back(
                    graft(corolla(outer, gens), slot, corolla(inner, gens), gens));
    return basis;
}

Weight2Vector to_weight2(const OperadElement& e, const GeneratorSet& gens)
{
    const std::vector<TreeMonomial> basis = weight2_basis(gens);
    Weight2Vector v;
    v.coords.assign(basis.size(), Rational(0));
    for (const auto& [t, c] : e) {
        bool found = false;
        for (size_t k = 0; k < basis.size(); ++k)
            if (basis[k] == t) {
                v.coords[k] = c;
                found = true;
                break;
            }
        if (!found)
            throw std::invalid_argument("element term is not a weight-2 monomial");
    }
    return v;
}

OperadElement from_weight2(const RatVector& coords, const GeneratorSet& gens)
{
    const std::vector<TreeMonomial> basis = weight2_basis(gens);
    if (coords.size() != basis.size())
        throw std::invalid_argument("weight-2 coordinate size mismatch");
    OperadElement e;
    for (size_t k = 0; k < basis.size(); ++k)
        add_term(e, basis[k], coords[k]);
    return e;
}

Rational weight2_pairing(const Weight2Vector& u, const Weight2Vector& v)
{
    if (u.coords.size() != v.coords.size())
        throw std::invalid_argument("weight2_pairing: size mismatch");
    const size_t half = u.coords.size() / 2;
    Rational total = 0;
    for (size_t k = 0; k < u.coords.size(); ++k)
        total += (k < half ? Rational(1) : Rational(-1)) * u.coords[k] * v.coords[k];
    return total;
}

QuadraticPresentation koszul_dual(const QuadraticPresentation& p)
{
    RatMatrix m = relator_matrix(p);
    // ⟨v, r⟩ = Σ ±v_c r_c, so the annihilator is the nullspace of the relator
    // matrix with the slot-1 half negated.
    const int half = m.cols() / 2;
    for (int r = 0; r < m.rows(); ++r)
        for (int c = half; c < m.cols(); ++c)
            m.at(r, c) = -m.at(r, c);
    std::vector<OperadElement> dual_relators;
    for (const RatVector& v : nullspace_basis(m))
        dual_relators.push_back(from_weight2(v, p.generators));
    return make_presentation(p.generators, std::move(dual_relators));
}

bool relator_spans_equal(const QuadraticPresentation& a,
                         const QuadraticPresentation& b)
{
    if (a.generators.size() != b.generators.size())
        return false;
    for (int g = 0; g < a.generators.size(); ++g)
        if (a.generators[g].id != b.generators[g].id)
            return false;
    return span_equal(relator_matrix(a).row_list(), relator_matrix(b).row_list());
}

std::vector<OperadElement> pencil_relators(const GeneratorSet& gens)
{
    if (gens.size() != 2)
        throw std::invalid_argument("pencil_relators needs exactly two generators");
    auto mono = [&gens](int outer, int slot, int inner) {
        return graft(corolla(outer, gens), slot, corolla(inner, gens), gens);
    };
    // Associator of λ·g0 + μ·g1, split by coefficient λ², λμ, μ².
    OperadElement ll, lm, mm;
    add_term(ll, mono(0, 0, 0), Rational(1));
    add_term(ll, mono(0, 1, 0), Rational(-1));
    add_term(lm, mono(0, 0, 1), Rational(1));
    add_term(lm, mono(1, 0, 0), Rational(1));
    add_term(lm, mono(0, 1, 1), Rational(-1));
    add_term(lm, mono(1, 1, 0), Rational(-1));
    add_term(mm, mono(1, 0, 1), Rational(1));
    add_term(mm, mono(1, 1, 1), Rational(-1));
    return {ll, lm, mm};
}

bool pencil_associativity_check(const QuadraticPresentation& p)
{
    if (p.generators.size() != 2)
        throw std::invalid_argument(
            "pencil_associativity_check needs exactly two generators");
    std::vector<RatVector> pencil;
    for (const OperadElement& r : pencil_relators(p.generators))
        pencil.push_back(to_weight2(r, p.generators).coords);
    return span_equal(relator_matrix(p).row_list(), pencil);
}

std::string presentation_to_text(const QuadraticPresentation& p)
{
    std::string out = "generators:";
    for (int g = 0; g < p.generators.size(); ++g)
        out += " " + p.generators[g].id;
    out += "\n";
    for (const OperadElement& r : p.relators)
        out += "relator: " + render_element(r, p.generators) + "\n";
    return out;
}

namespace {

// Recursive-descent parser for the nested-expression monomial rendering.
// Tokens: "(", ")", leaves "x<k>", and the known generator ids.
struct ExprParser {
    const std::string& text;
    const GeneratorSet& gens;
    size_t pos = 0;
    int next_leaf = 1;

    bool eat(const std::string& token)
    {
        if (text.compare(pos, token.size(), token) == 0) {
            pos += token.size();
            return true;
        }
        return false;
    }

    int eat_generator()
    {
        for (int g = 0; g < gens.size(); ++g)
            if (eat(gens[g].id))
                return g;
        return -1;
    }

    TreeMonomial parse_atom()
    {
        if (eat("(")) {
            TreeMonomial t = parse_expr();
            if (!eat(")"))
                throw std::invalid_argument("expected ')' in monomial");
            return t;
        }
        if (eat("x")) {
            size_t digits = 0;
            int label = 0;
            while (pos + digits < text.size() && isdigit(text[pos + digits])) {
                label = label * 10 + (text[pos + digits] - '0');
                ++digits;
            }
            if (digits == 0 || label != next_leaf)
                throw std::invalid_argument("leaves must read x1, x2, ... in order");
            pos += digits;
            ++next_leaf;
            return identity_tree();
        }
        throw std::invalid_argument("expected leaf or '(' in monomial");
    }

    TreeMonomial parse_expr()
    {
        const TreeMonomial left = parse_atom();
        const int g = eat_generator();
        if (g < 0)
            return left;
        const TreeMonomial right = parse_atom();
        return substitute(corolla(g, gens), {left, right}, gens);
    }
};

TreeMonomial parse_monomial(const std::string& text, const GeneratorSet& gens)
{
    ExprParser p{text, gens};
    const TreeMonomial t = p.parse_expr();
    if (p.pos != text.size())
        throw std::invalid_argument("trailing characters in monomial: " + text);
    return t;
}

}  // namespace

QuadraticPresentation presentation_from_text(const std::string& text)
{
    std::istringstream in(text);
    std::string line;
    GeneratorSet gens;
    std::vector<OperadElement> relators;
    bool have_generators = false;
    while (std::getline(in, line)) {
        if (line.empty())
            continue;
        std::istringstream fields(line);
        std::string head;
        fields >> head;
        if (head == "generators:") {
            std::string id;
            while (fields >> id)
                gens.add(id, 2);
            have_generators = true;
        }
        else if (head == "relator:") {
            if (!have_generators)
                throw std::invalid_argument("relator before generators line");
            OperadElement r;
            std::string coeff, monomial, plus;
            while (fields >> coeff >> monomial) {
                add_term(r, parse_monomial(monomial, gens),
                         rational_from_string(coeff));
                if (!(fields >> plus))
                    break;
                if (plus != "+")
                    throw std::invalid_argument("expected '+' between terms");
            }
            relators.push_back(std::move(r));
        }
        else {
            throw std::invalid_argument("unrecognized line: " + line);
        }
    }
    return make_presentation(std::move(gens), std::move(relators));
}

}  // namespace operadkit
