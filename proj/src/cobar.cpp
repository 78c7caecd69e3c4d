#include "operadkit/cobar.hpp"

#include <stdexcept>

namespace operadkit {

TwoAsBasis gamma(TwoAsBasis outer, const std::vector<TwoAsBasis>& inners)
{
    if (static_cast<int>(inners.size()) != arity(outer))
        throw std::invalid_argument("gamma: inner count != outer arity");
    TwoAsBasis out = outer;
    for (TwoAsBasis b : inners) {
        out.i += b.i;
        out.j += b.j;
    }
    return out;
}

TwoAsBasis partial_compose(TwoAsBasis outer, int slot, TwoAsBasis inner)
{
    if (slot < 0 || slot >= arity(outer))
        throw std::out_of_range("partial_compose: slot out of range");
    return TwoAsBasis{outer.i + inner.i, outer.j + inner.j};
}

std::vector<Delta1Term> delta1(int c, int d)
{
    if (c + d < 1)
        throw std::invalid_argument("delta1: needs a non-identity input");
    std::vector<Delta1Term> terms;
    for (int i = c; i >= 0; --i)
        for (int j = d; j >= 0; --j) {
            const int a = c - i;
            const int b = d - j;
            if (i + j == 0 || a + b == 0)
                continue;
            for (int p = 0; p <= i + j; ++p)
                terms.push_back({TwoAsBasis{i, j}, p, TwoAsBasis{a, b}});
        }
    return terms;
}

SignRule default_sign_rule()
{
    return [](int p, int q, int r) { return p + q * r; };
}

DifferentialExpression cobar_differential_with(CobarGenerator g,
                                               const SignRule& sign)
{
    if (g.i + g.j < 1)
        throw std::invalid_argument("cobar generator needs i+j >= 1");
    DifferentialExpression expr;
    expr.source = g;
    for (int a = g.i; a >= 0; --a)
        for (int b = g.j; b >= 0; --b) {
            const int c = g.i - a;
            const int d = g.j - b;
            if (a + b == 0 || c + d == 0)
                continue;
            const int q = c + d + 1;
            for (int p = 0; p <= a + b; ++p) {
                const int r = a + b - p;
                DifferentialTerm term;
                term.sign = sign(p, q, r) % 2 == 0 ? 1 : -1;
                term.outer = CobarGenerator{a, b};
                term.p = p;
                term.inner = CobarGenerator{c, d};
                term.r = r;
                expr.terms.push_back(term);
            }
        }
    return expr;
}

DifferentialExpression cobar_differential(CobarGenerator g)
{
    return cobar_differential_with(g, default_sign_rule());
}

namespace {

std::string generator_name(CobarGenerator g)
{
    return "m[" + std::to_string(g.i) + "," + std::to_string(g.j) + "]";
}

}  // namespace

std::string render_differential(const DifferentialExpression& expr)
{
    std::string out = "d " + generator_name(expr.source) + " =";
    if (expr.terms.empty())
        return out + " 0";
    for (const DifferentialTerm& t : expr.terms) {
        out += t.sign > 0 ? " + " : " - ";
        out += generator_name(t.outer) + "(";
        for (int k = 0; k < t.p; ++k)
            out += "1,";
        out += generator_name(t.inner);
        for (int k = 0; k < t.r; ++k)
            out += ",1";
        out += ")";
    }
    return out;
}

CobarContext make_cobar_context(int max_arity)
{
    if (max_arity < 2)
        throw std::invalid_argument("cobar context needs max arity >= 2");
    CobarContext ctx;
    ctx.max_arity = max_arity;
    for (int total = 1; total + 1 <= max_arity; ++total)
        for (int i = total; i >= 0; --i) {
            const int j = total - i;
            const CobarGenerator g{i, j};
            const int idx =
                ctx.gens.add(generator_name(g), arity(g), degree(g));
            ctx.by_index.push_back(g);
            ctx.index_of[{i, j}] = idx;
        }
    return ctx;
}

TreeMonomial cobar_corolla(CobarGenerator g, const CobarContext& ctx)
{
    const auto it = ctx.index_of.find({g.i, g.j});
    if (it == ctx.index_of.end())
        throw std::invalid_argument(generator_name(g) + " outside context");
    return corolla(it->second, ctx.gens);
}

OperadElement cobar_boundary(const OperadElement& e, const CobarContext& ctx,
                             const SignRule& sign)
{
    OperadElement out;
    for (const auto& [t, coeff] : e) {
        int prefix_degree = 0;  // degrees of internal labels before pos
        for (int pos = 0; pos < static_cast<int>(t.code.size()); ++pos) {
            const int label = t.code[static_cast<size_t>(pos)];
            if (label == TreeMonomial::kLeaf)
                continue;
            const CobarGenerator g = ctx.by_index[static_cast<size_t>(label)];
            if (g.i + g.j >= 1) {
                const std::vector<int> kids = child_starts(t, ctx.gens, pos);
                for (const DifferentialTerm& term :
                     cobar_differential_with(g, sign).terms) {
                    // Koszul sign for the inner factor jumping over the
                    // subtrees left of its slot.
                    int jumped = 0;
                    for (int c = 0; c < term.p; ++c) {
                        const int cb = kids[static_cast<size_t>(c)];
                        const int ce = subtree_end(t, ctx.gens, cb);
                        TreeMonomial sub{std::vector<int>(
                            t.code.begin() + cb, t.code.begin() + ce)};
                        jumped += tree_degree(sub, ctx.gens);
                    }
                    int total = term.sign;
                    if (prefix_degree % 2 != 0)
                        total = -total;
                    if ((degree(term.inner) * jumped) % 2 != 0)
                        total = -total;

                    TreeMonomial next;
                    next.code.reserve(t.code.size() + 1);
                    next.code.insert(next.code.end(), t.code.begin(),
                                     t.code.begin() + pos);
                    next.code.push_back(
                        ctx.index_of.at({term.outer.i, term.outer.j}));
                    // Children C_0..C_{p-1} stay with the outer label, the
                    // inner label takes the next q children, the rest stay
                    // with the outer; the child codes remain contiguous.
                    const int split = kids[static_cast<size_t>(term.p)];
                    next.code.insert(next.code.end(), t.code.begin() + pos + 1,
                                     t.code.begin() + split);
                    next.code.push_back(
                        ctx.index_of.at({term.inner.i, term.inner.j}));
                    next.code.insert(next.code.end(), t.code.begin() + split,
                                     t.code.end());
                    add_term(out, next, coeff * total);
                }
            }
            prefix_degree += ctx.gens[label].degree;
        }
    }
    return out;
}

CheckResult d_squared_check_with(int max_arity, const SignRule& sign)
{
    const CobarContext ctx = make_cobar_context(max_arity);
    for (const CobarGenerator g : ctx.by_index) {
        OperadElement first;
        for (const DifferentialTerm& term :
             cobar_differential_with(g, sign).terms) {
            const TreeMonomial t = graft(cobar_corolla(term.outer, ctx), term.p,
                                         cobar_corolla(term.inner, ctx), ctx.gens);
            add_term(first, t, Rational(term.sign));
        }
        const OperadElement second = cobar_boundary(first, ctx, sign);
        if (!is_zero(second)) {
            const auto& [t, c] = *second.begin();
            return {false, "d2(" + generator_name(g) + ") contains "
                               + rational_to_string(c) + " "
                               + render_tree(t, ctx.gens)};
        }
    }
    return {true, ""};
}

CheckResult d_squared_check(int max_arity)
{
    return d_squared_check_with(max_arity, default_sign_rule());
}

bool ainfty_slice_check(int max_arity)
{
    for (int n = 3; n <= max_arity; ++n) {
        // Classical table for the one-product infinity-differential of the
        // arity-n generator: all (p,q,r) with p+q+r = n, inner arity q >= 2,
        // outer arity p+1+r >= 2, sign (-1)^{p+qr}.
        std::vector<DifferentialTerm> classical;
        for (int q = 2; q < n; ++q)
            for (int p = 0; p + q <= n; ++p) {
                const int r = n - q - p;
                if (r < 0 || p + r < 1)
                    continue;
                DifferentialTerm term;
                term.sign = (p + q * r) % 2 == 0 ? 1 : -1;
                term.outer = CobarGenerator{p + r, 0};  // arity p+1+r
                term.p = p;
                term.inner = CobarGenerator{q - 1, 0};  // arity q
                term.r = r;
                classical.push_back(term);
            }

        const DifferentialExpression got =
            cobar_differential(CobarGenerator{n - 1, 0});
        if (got.terms.size() != classical.size())
            return false;
        for (const DifferentialTerm& term : classical) {
            bool found = false;
            for (const DifferentialTerm& have : got.terms)
                if (have == term)
                    found = true;
            if (!found)
                return false;
        }
    }
    return true;
}

}  // namespace operadkit
