#include "operadkit/element.hpp"

#include <algorithm>
#include <stdexcept>
#include <utility>
#include <vector>

namespace operadkit {

void add_term(OperadElement& e, const TreeMonomial& t, const Rational& coeff)
{
    if (coeff == 0)
        return;
    auto [it, inserted] = e.try_emplace(t, coeff);
    if (!inserted) {
        it->second += coeff;
        if (it->second == 0)
            e.erase(it);
    }
}

OperadElement element_sum(const OperadElement& a, const OperadElement& b)
{
    OperadElement out = a;
    for (const auto& [t, c] : b)
        add_term(out, t, c);
    return out;
}

OperadElement element_scale(const Rational& c, const OperadElement& e)
{
    OperadElement out;
    if (c == 0)
        return out;
    for (const auto& [t, q] : e)
        out.emplace(t, c * q);
    return out;
}

OperadElement element_diff(const OperadElement& a, const OperadElement& b)
{
    OperadElement out = a;
    for (const auto& [t, c] : b)
        add_term(out, t, -c);
    return out;
}

bool is_zero(const OperadElement& e)
{
    return e.empty();
}

int element_arity(const OperadElement& e, const GeneratorSet& gens)
{
    int arity = -1;
    for (const auto& [t, c] : e) {
        const int a = tree_arity(t, gens);
        if (arity < 0)
            arity = a;
        else if (a != arity)
            throw std::invalid_argument("element mixes arities");
    }
    return arity;
}

OperadElement graft_element(const OperadElement& outer, int slot,
                            const OperadElement& inner, const GeneratorSet& gens)
{
    element_arity(outer, gens);  // validates homogeneous arity
    element_arity(inner, gens);
    OperadElement out;
    for (const auto& [to, co] : outer)
        for (const auto& [ti, ci] : inner)
            add_term(out, graft(to, slot, ti, gens), co * ci);
    return out;
}

const TreeMonomial* leading_monomial(const OperadElement& e, const GeneratorSet& gens)
{
    const TreeMonomial* best = nullptr;
    for (const auto& [t, c] : e)
        if (!best || path_lex_compare(t, *best, gens) > 0)
            best = &t;
    return best;
}

std::string render_element(const OperadElement& e, const GeneratorSet& gens)
{
    if (e.empty())
        return "0";
    // Leading term first: sort descending in the monomial order.
    std::vector<const std::pair<const TreeMonomial, Rational>*> terms;
    for (const auto& term : e)
        terms.push_back(&term);
    std::sort(terms.begin(), terms.end(), [&](const auto* a, const auto* b) {
        return path_lex_compare(a->first, b->first, gens) > 0;
    });
    std::string out;
    for (const auto* term : terms) {
        if (!out.empty())
            out += " + ";
        out += rational_to_string(term->second) + " " + render_tree(term->first, gens);
    }
    return out;
}

}  // namespace operadkit
