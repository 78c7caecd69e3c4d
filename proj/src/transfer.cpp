#include "operadkit/transfer.hpp"

#include <sstream>
#include <stdexcept>

namespace operadkit {

namespace {

Combination unit_combination(BasisRef ref)
{
    return Combination{{ref, Rational(1)}};
}

std::vector<BasisRef> all_refs(const ChainComplex& c)
{
    std::vector<BasisRef> refs;
    for (const auto& [degree, names] : c.basis)
        for (size_t k = 0; k < names.size(); ++k)
            refs.push_back(BasisRef{degree, static_cast<int>(k)});
    return refs;
}

// All tuples of the given length over refs, in lexicographic order.
std::vector<std::vector<BasisRef>> all_tuples(const std::vector<BasisRef>& refs,
                                              int length)
{
    std::vector<std::vector<BasisRef>> tuples = {{}};
    for (int k = 0; k < length; ++k) {
        std::vector<std::vector<BasisRef>> next;
        for (const std::vector<BasisRef>& tuple : tuples)
            for (const BasisRef r : refs) {
                std::vector<BasisRef> grown = tuple;
                grown.push_back(r);
                next.push_back(std::move(grown));
            }
        tuples = std::move(next);
    }
    return tuples;
}

int degree_sum(const std::vector<BasisRef>& refs, size_t count)
{
    int total = 0;
    for (size_t k = 0; k < count && k < refs.size(); ++k)
        total += refs[k].degree;
    return total;
}

std::string tuple_name(const ChainComplex& c,
                       const std::vector<BasisRef>& refs)
{
    std::string out = "(";
    for (size_t k = 0; k < refs.size(); ++k) {
        if (k > 0)
            out += ", ";
        out += basis_name(c, refs[k]);
    }
    return out + ")";
}

}  // namespace

Combination apply_op(const TupleTable& table,
                     const std::vector<Combination>& args)
{
    // Expand the multilinear combination one slot at a time.
    std::vector<std::pair<std::vector<BasisRef>, Rational>> partial = {
        {{}, Rational(1)}};
    for (const Combination& arg : args) {
        std::vector<std::pair<std::vector<BasisRef>, Rational>> next;
        for (const auto& [tuple, coeff] : partial)
            for (const auto& [ref, c] : arg) {
                std::vector<BasisRef> grown = tuple;
                grown.push_back(ref);
                next.emplace_back(std::move(grown), coeff * c);
            }
        partial = std::move(next);
    }
    Combination out;
    for (const auto& [tuple, coeff] : partial) {
        const auto it = table.find(tuple);
        if (it == table.end())
            continue;
        for (const auto& [ref, c] : it->second)
            combination_add_term(out, ref, coeff * c);
    }
    return out;
}

TransferredStructure transfer(const DgAs2Algebra& alg,
                              const DeformationRetract& r, int max_weight)
{
    return transfer_with(alg, r, max_weight, TransferSigns{});
}

TransferredStructure transfer_with(const DgAs2Algebra& alg,
                                   const DeformationRetract& r,
                                   int max_weight, const TransferSigns& signs)
{
    if (alg.complex != r.big)
        throw std::invalid_argument(
            "algebra and retract live on different complexes");
    if (max_weight < 1 || max_weight > kTransferMaxWeight)
        throw std::invalid_argument("transfer weight out of range");

    const std::vector<BasisRef> small_refs = all_refs(r.small);

    // lambda tables keyed by (i,j); values land in the big complex.
    std::map<std::pair<int, int>, TupleTable> lambda;
    TupleTable& leaf = lambda[{0, 0}];
    for (const BasisRef v : small_refs) {
        const Combination image =
            apply_graded(r.incl, unit_combination(v));
        if (!image.empty())
            leaf.emplace(std::vector<BasisRef>{v}, image);
    }

    // H lambda: the homotopy on internal branches, the inclusion on leaves.
    auto branch = [&](int i, int j,
                      const std::vector<BasisRef>& tuple) -> Combination {
        const TupleTable& table = lambda.at({i, j});
        const auto it = table.find(tuple);
        if (it == table.end())
            return {};
        if (i == 0 && j == 0)
            return it->second;
        return apply_graded(r.htpy, it->second);
    };

    TransferredStructure out;
    out.small = r.small;
    out.max_weight = max_weight;
    for (int w = 1; w <= max_weight; ++w)
        for (int i = 0; i <= w; ++i) {
            const int j = w - i;
            const int n = w + 1;
            TupleTable& table = lambda[{i, j}];
            for (const std::vector<BasisRef>& tuple :
                 all_tuples(small_refs, n)) {
                Combination value;
                for (int root = 0; root < 2; ++root) {
                    // root 0 spends a star, root 1 a bullet.
                    const int ri = i - (root == 0 ? 1 : 0);
                    const int rj = j - (root == 1 ? 1 : 0);
                    if (ri < 0 || rj < 0)
                        continue;
                    const BilinearOp& op = root == 0 ? alg.star : alg.bullet;
                    for (int i1 = 0; i1 <= ri; ++i1)
                        for (int j1 = 0; j1 <= rj; ++j1) {
                            const int i2 = ri - i1;
                            const int j2 = rj - j1;
                            const int n1 = i1 + j1 + 1;
                            const int n2 = i2 + j2 + 1;
                            const std::vector<BasisRef> prefix(
                                tuple.begin(), tuple.begin() + n1);
                            const std::vector<BasisRef> suffix(
                                tuple.begin() + n1, tuple.end());
                            const Combination left =
                                branch(i1, j1, prefix);
                            if (left.empty())
                                continue;
                            const Combination right =
                                branch(i2, j2, suffix);
                            if (right.empty())
                                continue;
                            int exponent = signs.alpha * n1 + signs.beta * n2
                                           + signs.gamma * n1 * n2
                                           + signs.delta;
                            // Koszul: the right branch (degree i2+j2) moves
                            // past the left branch's inputs.
                            exponent +=
                                (i2 + j2)
                                * degree_sum(prefix, prefix.size());
                            const Rational sign =
                                exponent % 2 == 0 ? 1 : -1;
                            value = combination_sum(
                                value,
                                combination_scale(
                                    sign, apply_bilinear(op, left, right)));
                        }
                }
                if (!value.empty())
                    table.emplace(tuple, std::move(value));
            }

            TupleTable& target = out.ops[{i, j}];
            for (const auto& [tuple, value] : table) {
                Combination projected = apply_graded(r.proj, value);
                if (!projected.empty())
                    target.emplace(tuple, std::move(projected));
            }
        }
    return out;
}

VerifyResult verify_infinity_relations(const TransferredStructure& t,
                                       const ChainComplex& v, int max_arity)
{
    validate_complex(v);
    if (max_arity < 2)
        throw std::invalid_argument("max arity must be at least 2");
    if (t.max_weight < max_arity - 1)
        throw std::invalid_argument(
            "structure not populated through the requested arity");

    static const TupleTable empty_table;
    auto table_of = [&](int i, int j) -> const TupleTable& {
        const auto it = t.ops.find({i, j});
        return it == t.ops.end() ? empty_table : it->second;
    };

    const std::vector<BasisRef> refs = all_refs(v);
    for (int w = 1; w <= max_arity - 1; ++w)
        for (int i = 0; i <= w; ++i) {
            const int j = w - i;
            const int n = w + 1;
            const TupleTable& table = table_of(i, j);
            const DifferentialExpression rhs_terms =
                cobar_differential(CobarGenerator{i, j});
            const int op_degree_parity = (w - 1) & 1;
            for (const std::vector<BasisRef>& tuple : all_tuples(refs, n)) {
                // d_V . m
                const auto direct = table.find(tuple);
                Combination lhs = apply_differential(
                    v, direct == table.end() ? Combination{}
                                             : direct->second);
                // -(-1)^|m| m . (id^k, d_V, id^(n-1-k))
                for (int k = 0; k < n; ++k) {
                    const Combination dk = apply_differential(
                        v, unit_combination(tuple[static_cast<size_t>(k)]));
                    if (dk.empty())
                        continue;
                    std::vector<Combination> args;
                    for (int s = 0; s < n; ++s)
                        args.push_back(
                            s == k ? dk
                                   : unit_combination(
                                         tuple[static_cast<size_t>(s)]));
                    const int exponent = 1 + op_degree_parity
                                         + degree_sum(tuple,
                                                      static_cast<size_t>(k));
                    lhs = combination_sum(
                        lhs, combination_scale(exponent % 2 == 0 ? 1 : -1,
                                               apply_op(table, args)));
                }

                Combination rhs;
                for (const DifferentialTerm& term : rhs_terms.terms) {
                    const int inner_arity = arity(term.inner);
                    const std::vector<BasisRef> slice(
                        tuple.begin() + term.p,
                        tuple.begin() + term.p + inner_arity);
                    const TupleTable& inner =
                        table_of(term.inner.i, term.inner.j);
                    const auto hit = inner.find(slice);
                    if (hit == inner.end())
                        continue;
                    std::vector<Combination> args;
                    for (int s = 0; s < term.p; ++s)
                        args.push_back(unit_combination(
                            tuple[static_cast<size_t>(s)]));
                    args.push_back(hit->second);
                    for (size_t s = static_cast<size_t>(term.p)
                                    + static_cast<size_t>(inner_arity);
                         s < tuple.size(); ++s)
                        args.push_back(unit_combination(tuple[s]));
                    int exponent = term.sign < 0 ? 1 : 0;
                    exponent += (degree(term.inner) & 1)
                                * degree_sum(tuple,
                                             static_cast<size_t>(term.p));
                    rhs = combination_sum(
                        rhs, combination_scale(
                                 exponent % 2 == 0 ? 1 : -1,
                                 apply_op(table_of(term.outer.i,
                                                   term.outer.j),
                                          args)));
                }

                if (lhs != rhs) {
                    std::ostringstream witness;
                    witness << "relation (" << i << "," << j << ") fails on "
                            << tuple_name(v, tuple) << ": lhs = "
                            << render_combination(v, lhs) << ", rhs = "
                            << render_combination(v, rhs);
                    return {false, witness.str()};
                }
            }
        }
    return {true, ""};
}

}  // namespace operadkit
