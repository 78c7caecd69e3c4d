#include "operadkit/chain_complex.hpp"

#include <set>
#include <sstream>
#include <stdexcept>

namespace operadkit {

int dim_in_degree(const ChainComplex& c, int degree)
{
    const auto it = c.basis.find(degree);
    return it == c.basis.end() ? 0 : static_cast<int>(it->second.size());
}

int total_dim(const ChainComplex& c)
{
    int total = 0;
    for (const auto& [degree, names] : c.basis)
        total += static_cast<int>(names.size());
    return total;
}

RatMatrix differential_matrix(const ChainComplex& c, int degree)
{
    const auto it = c.d.find(degree);
    if (it != c.d.end())
        return it->second;
    return RatMatrix(dim_in_degree(c, degree - 1), dim_in_degree(c, degree));
}

void validate_complex(const ChainComplex& c)
{
    std::set<std::string> seen;
    for (const auto& [degree, names] : c.basis) {
        if (names.empty())
            throw std::invalid_argument("empty basis list for a listed degree");
        for (const std::string& name : names) {
            if (name.empty())
                throw std::invalid_argument("empty basis name");
            if (!seen.insert(name).second)
                throw std::invalid_argument("duplicate basis name: " + name);
        }
    }
    for (const auto& [degree, mat] : c.d) {
        if (mat.rows() != dim_in_degree(c, degree - 1)
            || mat.cols() != dim_in_degree(c, degree))
            throw std::invalid_argument("differential shape mismatch in degree "
                                        + std::to_string(degree));
    }
    for (const auto& [degree, mat] : c.d) {
        const RatMatrix composed = differential_matrix(c, degree - 1) * mat;
        if (!composed.is_zero())
            throw std::invalid_argument(
                "differential does not square to zero at degree "
                + std::to_string(degree));
    }
}

BasisRef basis_ref(const ChainComplex& c, const std::string& name)
{
    for (const auto& [degree, names] : c.basis)
        for (size_t k = 0; k < names.size(); ++k)
            if (names[k] == name)
                return BasisRef{degree, static_cast<int>(k)};
    throw std::invalid_argument("unknown basis name: " + name);
}

const std::string& basis_name(const ChainComplex& c, BasisRef ref)
{
    const auto it = c.basis.find(ref.degree);
    if (it == c.basis.end() || ref.index < 0
        || ref.index >= static_cast<int>(it->second.size()))
        throw std::out_of_range("basis reference outside the complex");
    return it->second[static_cast<size_t>(ref.index)];
}

void combination_add_term(Combination& x, BasisRef ref, const Rational& a)
{
    if (a == 0)
        return;
    const auto [it, fresh] = x.emplace(ref, a);
    if (!fresh) {
        it->second += a;
        if (it->second == 0)
            x.erase(it);
    }
}

Combination combination_sum(const Combination& a, const Combination& b)
{
    Combination out = a;
    for (const auto& [ref, coeff] : b)
        combination_add_term(out, ref, coeff);
    return out;
}

Combination combination_scale(const Rational& a, const Combination& x)
{
    Combination out;
    if (a == 0)
        return out;
    for (const auto& [ref, coeff] : x)
        out.emplace(ref, a * coeff);
    return out;
}

int combination_degree(const Combination& x)
{
    if (x.empty())
        throw std::invalid_argument("zero combination has no degree");
    const int degree = x.begin()->first.degree;
    for (const auto& [ref, coeff] : x)
        if (ref.degree != degree)
            throw std::invalid_argument("combination mixes degrees");
    return degree;
}

Combination apply_differential(const ChainComplex& c, const Combination& x)
{
    Combination out;
    for (const auto& [ref, coeff] : x) {
        const auto it = c.d.find(ref.degree);
        if (it == c.d.end())
            continue;
        const RatMatrix& mat = it->second;
        for (int row = 0; row < mat.rows(); ++row)
            combination_add_term(out, BasisRef{ref.degree - 1, row},
                                 coeff * mat.at(row, ref.index));
    }
    return out;
}

Combination apply_graded(const GradedMap& f, const Combination& x)
{
    Combination out;
    for (const auto& [ref, coeff] : x) {
        const auto it = f.mats.find(ref.degree);
        if (it == f.mats.end())
            continue;
        const RatMatrix& mat = it->second;
        for (int row = 0; row < mat.rows(); ++row)
            combination_add_term(out, BasisRef{ref.degree + f.shift, row},
                                 coeff * mat.at(row, ref.index));
    }
    return out;
}

std::string render_combination(const ChainComplex& c, const Combination& x)
{
    if (x.empty())
        return "0";
    std::ostringstream out;
    bool first = true;
    for (const auto& [ref, coeff] : x) {
        if (!first)
            out << " + ";
        first = false;
        out << rational_to_string(coeff) << ' ' << basis_name(c, ref);
    }
    return out.str();
}

}  // namespace operadkit
