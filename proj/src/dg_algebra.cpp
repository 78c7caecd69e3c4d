#include "operadkit/dg_algebra.hpp"

#include <algorithm>
#include <random>
#include <set>
#include <stdexcept>
#include <tuple>

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

std::string check_table(const ChainComplex& c, const BilinearOp& op,
                        const std::string& label)
{
    for (const auto& [pair, value] : op.table) {
        try {
            basis_name(c, pair.first);
            basis_name(c, pair.second);
        } catch (const std::out_of_range&) {
            return label + " table refers outside the complex";
        }
        if (value.empty())
            continue;
        for (const auto& [ref, coeff] : value) {
            try {
                basis_name(c, ref);
            } catch (const std::out_of_range&) {
                return label + " table maps outside the complex";
            }
            if (ref.degree != pair.first.degree + pair.second.degree)
                return label + " is not degree-0 on "
                       + tuple_name(c, {pair.first, pair.second});
        }
    }
    return "";
}

std::string check_leibniz(const DgAs2Algebra& a, const BilinearOp& op,
                          const std::string& label)
{
    const std::vector<BasisRef> refs = all_refs(a.complex);
    for (const BasisRef x : refs)
        for (const BasisRef y : refs) {
            const Combination lhs = apply_differential(
                a.complex, apply_bilinear(op, unit_combination(x),
                                          unit_combination(y)));
            Combination rhs = apply_bilinear(
                op, apply_differential(a.complex, unit_combination(x)),
                unit_combination(y));
            const Rational sign = (x.degree % 2 == 0) ? 1 : -1;
            rhs = combination_sum(
                rhs, combination_scale(
                         sign, apply_bilinear(op, unit_combination(x),
                                              apply_differential(
                                                  a.complex,
                                                  unit_combination(y)))));
            if (lhs != rhs)
                return label + " Leibniz rule fails on "
                       + tuple_name(a.complex, {x, y});
        }
    return "";
}

std::string check_associative(const ChainComplex& c, const BilinearOp& op,
                              const std::string& label)
{
    const std::vector<BasisRef> refs = all_refs(c);
    for (const BasisRef x : refs)
        for (const BasisRef y : refs)
            for (const BasisRef z : refs) {
                const Combination left = apply_bilinear(
                    op, apply_bilinear(op, unit_combination(x),
                                       unit_combination(y)),
                    unit_combination(z));
                const Combination right = apply_bilinear(
                    op, unit_combination(x),
                    apply_bilinear(op, unit_combination(y),
                                   unit_combination(z)));
                if (left != right)
                    return label + " associativity fails on "
                           + tuple_name(c, {x, y, z});
            }
    return "";
}

}  // namespace

Combination apply_bilinear(const BilinearOp& op, const Combination& x,
                           const Combination& y)
{
    Combination out;
    for (const auto& [xr, xc] : x)
        for (const auto& [yr, yc] : y) {
            const auto it = op.table.find({xr, yr});
            if (it == op.table.end())
                continue;
            for (const auto& [ref, coeff] : it->second)
                combination_add_term(out, ref, xc * yc * coeff);
        }
    return out;
}

BilinearOp bilinear_sum(const BilinearOp& a, const BilinearOp& b)
{
    BilinearOp out = a;
    for (const auto& [pair, value] : b.table) {
        Combination merged = out.table.count(pair)
                                 ? combination_sum(out.table[pair], value)
                                 : value;
        if (merged.empty())
            out.table.erase(pair);
        else
            out.table[pair] = std::move(merged);
    }
    return out;
}

BilinearOp bilinear_scale(const Rational& a, const BilinearOp& op)
{
    BilinearOp out;
    if (a == 0)
        return out;
    for (const auto& [pair, value] : op.table)
        out.table.emplace(pair, combination_scale(a, value));
    return out;
}

std::string check_dg_as2(const DgAs2Algebra& a)
{
    try {
        validate_complex(a.complex);
    } catch (const std::invalid_argument& e) {
        return std::string("complex invalid: ") + e.what();
    }
    if (std::string w = check_table(a.complex, a.star, "star"); !w.empty())
        return w;
    if (std::string w = check_table(a.complex, a.bullet, "bullet"); !w.empty())
        return w;
    if (std::string w = check_leibniz(a, a.star, "star"); !w.empty())
        return w;
    if (std::string w = check_leibniz(a, a.bullet, "bullet"); !w.empty())
        return w;
    if (std::string w = check_associative(a.complex, a.star, "star");
        !w.empty())
        return w;
    if (std::string w = check_associative(a.complex, a.bullet, "bullet");
        !w.empty())
        return w;

    const std::vector<BasisRef> refs = all_refs(a.complex);
    for (const BasisRef x : refs)
        for (const BasisRef y : refs)
            for (const BasisRef z : refs) {
                const Combination xy_star =
                    apply_bilinear(a.star, unit_combination(x),
                                   unit_combination(y));
                const Combination xy_bullet =
                    apply_bilinear(a.bullet, unit_combination(x),
                                   unit_combination(y));
                const Combination lhs = combination_sum(
                    apply_bilinear(a.bullet, xy_star, unit_combination(z)),
                    apply_bilinear(a.star, xy_bullet, unit_combination(z)));
                const Combination yz_star =
                    apply_bilinear(a.star, unit_combination(y),
                                   unit_combination(z));
                const Combination yz_bullet =
                    apply_bilinear(a.bullet, unit_combination(y),
                                   unit_combination(z));
                const Combination rhs = combination_sum(
                    apply_bilinear(a.star, unit_combination(x), yz_bullet),
                    apply_bilinear(a.bullet, unit_combination(x), yz_star));
                if (lhs != rhs)
                    return "compatibility fails on "
                           + tuple_name(a.complex, {x, y, z});
            }
    return "";
}

std::string check_blend_associative(const DgAs2Algebra& a,
                                    const Rational& lambda,
                                    const Rational& mu)
{
    const BilinearOp blend = bilinear_sum(bilinear_scale(lambda, a.star),
                                          bilinear_scale(mu, a.bullet));
    return check_associative(a.complex, blend, "blend");
}

DgAs2Algebra random_dg_as2(unsigned seed, const std::map<int, int>& dims)
{
    std::mt19937 rng(seed);
    DgAs2Algebra alg;
    for (const auto& [degree, n] : dims) {
        if (n <= 0)
            continue;
        std::vector<std::string> names;
        for (int k = 0; k < n; ++k)
            names.push_back("a" + std::to_string(degree) + "_"
                            + std::to_string(k));
        alg.complex.basis.emplace(degree, std::move(names));
    }

    // Differential: pair off random basis vectors across adjacent degrees,
    // each vector in at most one pair, so d squares to zero by construction.
    std::vector<BasisRef> refs = all_refs(alg.complex);
    std::shuffle(refs.begin(), refs.end(), rng);
    std::set<BasisRef> used;
    for (const BasisRef v : refs) {
        if (used.count(v) || rng() % 10 >= 6)
            continue;
        for (const BasisRef w : refs) {
            if (used.count(w) || w.degree != v.degree - 1)
                continue;
            const int num = static_cast<int>(rng() % 5) - 2;
            const Rational c = num == 0 ? Rational(1) : Rational(num);
            auto [it, fresh] = alg.complex.d.emplace(
                v.degree, RatMatrix(dim_in_degree(alg.complex, v.degree - 1),
                                    dim_in_degree(alg.complex, v.degree)));
            it->second.at(w.index, v.index) = c;
            used.insert(v);
            used.insert(w);
            break;
        }
    }

    // Square-zero ansatz: a random generator/product split of the basis;
    // products live on generator pairs and land in the product span, so both
    // associativities and the compatibility relation hold identically and
    // only the Leibniz rule constrains the structure constants.
    refs = all_refs(alg.complex);
    std::set<BasisRef> gens, prods;
    for (const BasisRef r : refs)
        (rng() % 2 == 0 ? gens : prods).insert(r);

    struct Unknown {
        BasisRef g1, g2, target;
    };
    std::vector<Unknown> unknowns;
    std::map<std::tuple<BasisRef, BasisRef, BasisRef>, int> index;
    for (const BasisRef g1 : gens)
        for (const BasisRef g2 : gens)
            for (const BasisRef target : prods)
                if (target.degree == g1.degree + g2.degree) {
                    index[{g1, g2, target}] =
                        static_cast<int>(unknowns.size());
                    unknowns.push_back({g1, g2, target});
                }

    std::vector<RatVector> solution_basis;
    if (!unknowns.empty()) {
        // Leibniz rows: one equation per (pair of basis vectors, target
        // basis vector of the differential's degree).
        std::map<std::pair<std::pair<BasisRef, BasisRef>, BasisRef>, RatVector>
            rows;
        auto row_of = [&](BasisRef x, BasisRef y, BasisRef b) -> RatVector& {
            auto [it, fresh] = rows.emplace(
                std::make_pair(std::make_pair(x, y), b),
                RatVector(unknowns.size(), Rational(0)));
            return it->second;
        };
        for (const BasisRef x : refs)
            for (const BasisRef y : refs) {
                if (gens.count(x) && gens.count(y))
                    for (const BasisRef target : prods)
                        if (target.degree == x.degree + y.degree) {
                            const int k = index.at({x, y, target});
                            const Combination db = apply_differential(
                                alg.complex, unit_combination(target));
                            for (const auto& [b, c] : db)
                                row_of(x, y, b)[static_cast<size_t>(k)] += c;
                        }
                const Combination dx =
                    apply_differential(alg.complex, unit_combination(x));
                for (const auto& [w, cw] : dx)
                    if (gens.count(w) && gens.count(y))
                        for (const BasisRef target : prods)
                            if (target.degree == w.degree + y.degree) {
                                const int k = index.at({w, y, target});
                                row_of(x, y, target)[static_cast<size_t>(k)]
                                    -= cw;
                            }
                const Rational sign = (x.degree % 2 == 0) ? 1 : -1;
                const Combination dy =
                    apply_differential(alg.complex, unit_combination(y));
                for (const auto& [w, cw] : dy)
                    if (gens.count(x) && gens.count(w))
                        for (const BasisRef target : prods)
                            if (target.degree == x.degree + w.degree) {
                                const int k = index.at({x, w, target});
                                row_of(x, y, target)[static_cast<size_t>(k)]
                                    -= sign * cw;
                            }
            }
        std::vector<RatVector> mat_rows;
        for (const auto& [key, row] : rows)
            mat_rows.push_back(row);
        if (mat_rows.empty())
            mat_rows.emplace_back(unknowns.size(), Rational(0));
        solution_basis = nullspace_basis(RatMatrix::from_rows(mat_rows));
    }

    auto draw_product = [&]() {
        BilinearOp op;
        for (int attempt = 0; attempt < 5; ++attempt) {
            RatVector values(unknowns.size(), Rational(0));
            bool nonzero = false;
            for (const RatVector& member : solution_basis) {
                const int c = static_cast<int>(rng() % 5) - 2;
                if (c == 0)
                    continue;
                for (size_t k = 0; k < values.size(); ++k)
                    values[k] += Rational(c) * member[k];
            }
            for (const Rational& v : values)
                if (v != 0)
                    nonzero = true;
            if (!nonzero && !solution_basis.empty())
                continue;
            for (size_t k = 0; k < unknowns.size(); ++k)
                if (values[k] != 0)
                    combination_add_term(
                        op.table[{unknowns[k].g1, unknowns[k].g2}],
                        unknowns[k].target, values[k]);
            break;
        }
        return op;
    };
    alg.star = draw_product();
    alg.bullet = draw_product();

    if (const std::string w = check_dg_as2(alg); !w.empty())
        throw std::logic_error("random algebra failed validation: " + w);
    return alg;
}

}  // namespace operadkit
