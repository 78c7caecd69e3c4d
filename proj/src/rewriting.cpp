#include "operadkit/rewriting.hpp"

#include "operadkit/linalg.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace operadkit {

RewriteSystem orient(const QuadraticPresentation& p)
{
    const GeneratorSet& gens = p.generators;

    // Weight-2 basis sorted descending, so the first nonzero coordinate of a
    // reduced row is its leading monomial.
    std::vector<TreeMonomial> basis = weight2_basis(gens);
    std::sort(basis.begin(), basis.end(),
              [&](const TreeMonomial& a, const TreeMonomial& b) {
                  return path_lex_compare(a, b, gens) > 0;
              });

    std::vector<RatVector> rows;
    for (const OperadElement& r : p.relators) {
        RatVector row(basis.size());
        for (size_t c = 0; c < basis.size(); ++c)
            if (auto it = r.find(basis[c]); it != r.end())
                row[c] = it->second;
        rows.push_back(std::move(row));
    }

    RewriteSystem rs{p, {}};
    if (rows.empty())
        return rs;

    const RrefResult red = rref(RatMatrix::from_rows(rows));
    if (red.pivots.size() != p.relators.size())
        throw std::invalid_argument("orient: leading terms cancel");
    for (size_t r = 0; r < red.pivots.size(); ++r) {
        RewriteRule rule;
        rule.lhs = basis[static_cast<size_t>(red.pivots[r])];
        for (int c = red.pivots[r] + 1; c < red.mat.cols(); ++c)
            add_term(rule.rhs, basis[static_cast<size_t>(c)],
                     -red.mat.at(static_cast<int>(r), c));
        rs.rules.push_back(std::move(rule));
    }
    return rs;
}

bool match_at(const TreeMonomial& t, int pos, const TreeMonomial& pattern,
              const GeneratorSet& gens, std::vector<std::pair<int, int>>* args)
{
    if (args)
        args->clear();
    int ti = pos;
    for (int entry : pattern.code) {
        if (ti < 0 || ti >= static_cast<int>(t.code.size()))
            return false;
        if (entry == TreeMonomial::kLeaf) {
            const int end = subtree_end(t, gens, ti);
            if (args)
                args->emplace_back(ti, end);
            ti = end;
        }
        else {
            if (t.code[ti] != entry)
                return false;
            ++ti;
        }
    }
    return true;
}

std::vector<Occurrence> find_occurrences(const TreeMonomial& t,
                                         const RewriteSystem& rs)
{
    // Postorder position order = ascending subtree end, inner before outer.
    std::vector<int> positions;
    for (int pos = 0; pos < static_cast<int>(t.code.size()); ++pos)
        if (t.code[pos] != TreeMonomial::kLeaf)
            positions.push_back(pos);
    std::sort(positions.begin(), positions.end(), [&](int a, int b) {
        const int ea = subtree_end(t, rs.gens(), a);
        const int eb = subtree_end(t, rs.gens(), b);
        if (ea != eb)
            return ea < eb;
        return a > b;
    });

    std::vector<Occurrence> found;
    for (int pos : positions)
        for (size_t r = 0; r < rs.rules.size(); ++r)
            if (match_at(t, pos, rs.rules[r].lhs, rs.gens()))
                found.push_back({pos, static_cast<int>(r)});
    return found;
}

bool is_normal_form(const TreeMonomial& t, const RewriteSystem& rs)
{
    for (int pos = 0; pos < static_cast<int>(t.code.size()); ++pos)
        if (t.code[pos] != TreeMonomial::kLeaf)
            for (const RewriteRule& rule : rs.rules)
                if (match_at(t, pos, rule.lhs, rs.gens()))
                    return false;
    return true;
}

OperadElement rewrite_at(const TreeMonomial& t, const Occurrence& o,
                         const RewriteSystem& rs)
{
    const RewriteRule& rule = rs.rules[static_cast<size_t>(o.rule)];
    std::vector<std::pair<int, int>> args;
    if (!match_at(t, o.pos, rule.lhs, rs.gens(), &args))
        throw std::invalid_argument("rewrite_at: rule does not match here");
    const int end = subtree_end(t, rs.gens(), o.pos);

    OperadElement out;
    for (const auto& [shape, coeff] : rule.rhs) {
        TreeMonomial next;
        next.code.reserve(t.code.size());
        next.code.insert(next.code.end(), t.code.begin(), t.code.begin() + o.pos);
        size_t next_arg = 0;
        for (int entry : shape.code) {
            if (entry == TreeMonomial::kLeaf) {
                const auto [b, e] = args[next_arg++];
                next.code.insert(next.code.end(), t.code.begin() + b,
                                 t.code.begin() + e);
            }
            else {
                next.code.push_back(entry);
            }
        }
        next.code.insert(next.code.end(), t.code.begin() + end, t.code.end());
        add_term(out, next, coeff);
    }
    return out;
}

namespace {

// Greatest reducible term of e, with its occurrence list; occurrence empty
// when e is normal.
std::pair<const TreeMonomial*, std::vector<Occurrence>>
next_redex(const OperadElement& e, const RewriteSystem& rs)
{
    const TreeMonomial* best = nullptr;
    std::vector<Occurrence> best_occ;
    for (const auto& [t, c] : e) {
        auto occ = find_occurrences(t, rs);
        if (occ.empty())
            continue;
        if (!best || path_lex_compare(t, *best, rs.gens()) > 0) {
            best = &t;
            best_occ = std::move(occ);
        }
    }
    return {best, std::move(best_occ)};
}

OperadElement apply_step(const OperadElement& e, const TreeMonomial& term,
                         const Occurrence& o, const RewriteSystem& rs)
{
    const Rational coeff = e.at(term);
    OperadElement out = e;
    out.erase(term);
    for (const auto& [t, c] : rewrite_at(term, o, rs))
        add_term(out, t, coeff * c);
    return out;
}

OperadElement normalize_impl(const OperadElement& e, const RewriteSystem& rs,
                             long budget, std::vector<OperadElement>* trace,
                             std::mt19937* rng)
{
    OperadElement current = e;
    if (trace)
        trace->push_back(current);
    while (true) {
        auto [term, occ] = next_redex(current, rs);
        if (!term)
            return current;
        if (budget-- <= 0)
            throw std::runtime_error("rewrite budget exhausted");
        if (rng) {
            // Random strategy: any reducible term, any occurrence.
            std::vector<std::pair<TreeMonomial, Occurrence>> all;
            for (const auto& [t, c] : current)
                for (const Occurrence& o : find_occurrences(t, rs))
                    all.emplace_back(t, o);
            std::uniform_int_distribution<size_t> pick(0, all.size() - 1);
            const auto& [t, o] = all[pick(*rng)];
            current = apply_step(current, t, o, rs);
        }
        else {
            current = apply_step(current, *term, occ.front(), rs);
        }
        if (trace)
            trace->push_back(current);
    }
}

}  // namespace

OperadElement normalize(const OperadElement& e, const RewriteSystem& rs, long budget)
{
    return normalize_impl(e, rs, budget, nullptr, nullptr);
}

std::vector<OperadElement> normalize_trace(const OperadElement& e,
                                           const RewriteSystem& rs, long budget)
{
    std::vector<OperadElement> trace;
    normalize_impl(e, rs, budget, &trace, nullptr);
    return trace;
}

OperadElement normalize_random(const OperadElement& e, const RewriteSystem& rs,
                               std::mt19937& rng, long budget)
{
    return normalize_impl(e, rs, budget, nullptr, &rng);
}

std::vector<TreeMonomial> critical_monomials(const RewriteSystem& rs)
{
    std::vector<TreeMonomial> found;
    for (const TreeMonomial& t : enumerate_monomials(rs.gens(), 4)) {
        if (tree_weight(t) != 3)
            continue;
        const auto occ = find_occurrences(t, rs);
        bool critical = false;
        for (size_t a = 0; a < occ.size() && !critical; ++a)
            for (size_t b = 0; b < occ.size() && !critical; ++b) {
                if (a == b)
                    continue;
                // Chain overlap: occurrence b's root is a child vertex of
                // occurrence a's root. On weight-3 monomials that child is
                // necessarily the inner vertex of occurrence a's pattern, so
                // the two patterns share it; same-root overlaps never pass.
                for (int start : child_starts(t, rs.gens(), occ[a].pos))
                    if (start == occ[b].pos)
                        critical = true;
            }
        if (critical)
            found.push_back(t);
    }
    std::sort(found.begin(), found.end(),
              [&](const TreeMonomial& a, const TreeMonomial& b) {
                  return path_lex_compare(a, b, rs.gens()) > 0;
              });
    return found;
}

ConfluenceReport confluence_report(const RewriteSystem& rs)
{
    ConfluenceReport report;
    report.pass = true;
    for (const TreeMonomial& m : critical_monomials(rs)) {
        CriticalCheck check;
        check.monomial = m;
        OperadElement start;
        add_term(start, m, Rational(1));
        for (const Occurrence& o : find_occurrences(m, rs)) {
            ReductionChain chain;
            chain.first = o;
            chain.steps.push_back(start);
            OperadElement after = rewrite_at(m, o, rs);
            chain.steps.push_back(after);
            std::vector<OperadElement> rest = normalize_trace(after, rs);
            chain.steps.insert(chain.steps.end(), rest.begin() + 1, rest.end());
            check.chains.push_back(std::move(chain));
        }
        check.confluent = true;
        for (const ReductionChain& chain : check.chains)
            if (chain.steps.back() != check.chains.front().steps.back())
                check.confluent = false;
        report.pass = report.pass && check.confluent;
        report.checks.push_back(std::move(check));
    }
    return report;
}

std::string render_report(const ConfluenceReport& report, const GeneratorSet& gens)
{
    std::string out;
    for (const CriticalCheck& check : report.checks) {
        out += "critical: " + render_tree(check.monomial, gens) + "\n";
        for (const ReductionChain& chain : check.chains) {
            out += "  chain:";
            bool first = true;
            for (const OperadElement& step : chain.steps) {
                out += first ? " " : " -> ";
                out += render_element(step, gens);
                first = false;
            }
            out += "\n";
        }
        out += std::string("  confluent: ") + (check.confluent ? "yes" : "no") + "\n";
    }
    out += "verdict: " + std::string(report.pass ? "pass" : "fail") + " ("
        + std::to_string(report.checks.size()) + " critical monomials)\n";
    return out;
}

int count_normal_forms(const RewriteSystem& rs, int arity)
{
    int count = 0;
    for (const TreeMonomial& t : enumerate_monomials(rs.gens(), arity))
        if (is_normal_form(t, rs))
            ++count;
    return count;
}

bool poincare_consistency(const std::vector<int>& dims_p,
                          const std::vector<int>& dims_dual, int trunc)
{
    if (static_cast<int>(dims_p.size()) < trunc
        || static_cast<int>(dims_dual.size()) < trunc)
        throw std::invalid_argument("poincare_consistency: need dims for 1..N");

    // Truncated power series with coefficients of t^0..t^N.
    using Series = std::vector<Rational>;
    const int n = trunc;
    auto mul = [n](const Series& a, const Series& b) {
        Series out(static_cast<size_t>(n) + 1);
        for (int i = 0; i <= n; ++i)
            for (int j = 0; i + j <= n; ++j)
                out[static_cast<size_t>(i + j)] += a[static_cast<size_t>(i)]
                    * b[static_cast<size_t>(j)];
        return out;
    };

    auto signed_series = [n](const std::vector<int>& dims) {
        Series f(static_cast<size_t>(n) + 1);
        for (int k = 1; k <= n; ++k)
            f[static_cast<size_t>(k)] =
                Rational((k % 2 ? -1 : 1) * dims[static_cast<size_t>(k - 1)]);
        return f;
    };

    const Series f = signed_series(dims_p);
    Series power(static_cast<size_t>(n) + 1);  // f^k, starting at k = 0
    power[0] = 1;
    Series composed(static_cast<size_t>(n) + 1);
    const Series g = signed_series(dims_dual);
    for (int k = 1; k <= n; ++k) {
        power = mul(power, f);
        for (int c = 0; c <= n; ++c)
            composed[static_cast<size_t>(c)] +=
                g[static_cast<size_t>(k)] * power[static_cast<size_t>(c)];
    }

    for (int c = 0; c <= n; ++c)
        if (composed[static_cast<size_t>(c)] != (c == 1 ? Rational(1) : Rational(0)))
            return false;
    return true;
}

}  // namespace operadkit
