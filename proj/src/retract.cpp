#include "operadkit/retract.hpp"

#include <set>
#include <stdexcept>

namespace operadkit {

namespace {

RatMatrix from_columns(const std::vector<RatVector>& cols, int dim)
{
    RatMatrix out(dim, static_cast<int>(cols.size()));
    for (size_t c = 0; c < cols.size(); ++c) {
        if (static_cast<int>(cols[c].size()) != dim)
            throw std::logic_error("column length mismatch");
        for (int r = 0; r < dim; ++r)
            out.at(r, static_cast<int>(c)) = cols[c][static_cast<size_t>(r)];
    }
    return out;
}

// Columns of `fill` completing the independent family `base` to a basis.
std::vector<RatVector> complete_basis(const std::vector<RatVector>& base,
                                      const std::vector<RatVector>& fill,
                                      int dim)
{
    std::vector<RatVector> cols = base;
    cols.insert(cols.end(), fill.begin(), fill.end());
    const RrefResult red = rref(from_columns(cols, dim));
    std::vector<RatVector> chosen;
    size_t expected = 0;
    for (const int pivot : red.pivots) {
        if (pivot < static_cast<int>(base.size())) {
            if (pivot != static_cast<int>(expected++))
                throw std::logic_error("base family is not independent");
            continue;
        }
        chosen.push_back(fill[static_cast<size_t>(pivot)
                              - base.size()]);
    }
    if (expected != base.size())
        throw std::logic_error("base family is not independent");
    return chosen;
}

std::vector<RatVector> standard_basis(int dim)
{
    std::vector<RatVector> cols;
    for (int k = 0; k < dim; ++k) {
        RatVector e(static_cast<size_t>(dim), Rational(0));
        e[static_cast<size_t>(k)] = 1;
        cols.push_back(std::move(e));
    }
    return cols;
}

RatMatrix mat_or_zero(const std::map<int, RatMatrix>& mats, int degree,
                      int rows, int cols)
{
    const auto it = mats.find(degree);
    if (it != mats.end())
        return it->second;
    return RatMatrix(rows, cols);
}

void store_if_nonempty(std::map<int, RatMatrix>& mats, int degree,
                       RatMatrix mat)
{
    if (mat.rows() > 0 && mat.cols() > 0)
        mats.emplace(degree, std::move(mat));
}

}  // namespace

DeformationRetract identity_retract(const ChainComplex& a)
{
    validate_complex(a);
    DeformationRetract r;
    r.big = a;
    r.small = a;
    r.incl.shift = 0;
    r.proj.shift = 0;
    r.htpy.shift = 1;
    for (const auto& [degree, names] : a.basis) {
        const RatMatrix id = RatMatrix::identity(static_cast<int>(names.size()));
        r.incl.mats.emplace(degree, id);
        r.proj.mats.emplace(degree, id);
    }
    return r;
}

DeformationRetract build_retract(const ChainComplex& a)
{
    validate_complex(a);

    // Pass 1: kernel of d in each degree and a complement of it.
    std::map<int, std::vector<RatVector>> kernel, complement;
    for (const auto& [degree, names] : a.basis) {
        const int dim = static_cast<int>(names.size());
        kernel[degree] = nullspace_basis(differential_matrix(a, degree));
        complement[degree] =
            complete_basis(kernel[degree], standard_basis(dim), dim);
    }

    // Pass 2: per degree, boundaries = d(complement above), homology
    // representatives extending them inside the kernel, and the maps.
    DeformationRetract r;
    r.big = a;
    r.incl.shift = 0;
    r.proj.shift = 0;
    r.htpy.shift = 1;
    for (const auto& [degree, names] : a.basis) {
        const int dim = static_cast<int>(names.size());

        std::vector<RatVector> boundaries;
        const auto above = complement.find(degree + 1);
        if (above != complement.end()) {
            const RatMatrix d_above = differential_matrix(a, degree + 1);
            for (const RatVector& source : above->second)
                boundaries.push_back(d_above.apply(source));
        }
        const std::vector<RatVector> homology =
            complete_basis(boundaries, kernel[degree], dim);

        std::vector<RatVector> columns = boundaries;
        columns.insert(columns.end(), homology.begin(), homology.end());
        columns.insert(columns.end(), complement[degree].begin(),
                       complement[degree].end());
        if (static_cast<int>(columns.size()) != dim)
            throw std::logic_error("decomposition does not fill the degree");
        const RatMatrix coords = inverse(from_columns(columns, dim));

        const int n_bound = static_cast<int>(boundaries.size());
        const int n_homology = static_cast<int>(homology.size());

        if (n_homology > 0) {
            std::vector<std::string> small_names;
            for (int k = 0; k < n_homology; ++k)
                small_names.push_back("v" + std::to_string(degree) + "_"
                                      + std::to_string(k));
            r.small.basis.emplace(degree, std::move(small_names));

            RatMatrix proj(n_homology, dim);
            for (int row = 0; row < n_homology; ++row)
                for (int col = 0; col < dim; ++col)
                    proj.at(row, col) = coords.at(n_bound + row, col);
            r.proj.mats.emplace(degree, std::move(proj));
            r.incl.mats.emplace(degree, from_columns(homology, dim));
        }

        if (n_bound > 0) {
            // The k-th boundary is d of the k-th complement vector one degree
            // up, so h sends it back there.
            RatMatrix bound_coords(n_bound, dim);
            for (int row = 0; row < n_bound; ++row)
                for (int col = 0; col < dim; ++col)
                    bound_coords.at(row, col) = coords.at(row, col);
            const RatMatrix lift = from_columns(
                above->second, dim_in_degree(a, degree + 1));
            store_if_nonempty(r.htpy.mats, degree, lift * bound_coords);
        }
    }
    return r;
}

std::string check_retract(const DeformationRetract& r)
{
    try {
        validate_complex(r.big);
    } catch (const std::invalid_argument& e) {
        return std::string("big complex invalid: ") + e.what();
    }
    try {
        validate_complex(r.small);
    } catch (const std::invalid_argument& e) {
        return std::string("small complex invalid: ") + e.what();
    }
    if (r.incl.shift != 0 || r.proj.shift != 0 || r.htpy.shift != 1)
        return "map degree shifts are wrong";

    std::set<int> degrees;
    for (const auto& [degree, names] : r.big.basis)
        degrees.insert(degree);
    for (const auto& [degree, names] : r.small.basis)
        degrees.insert(degree);

    for (const int n : degrees) {
        const int big_n = dim_in_degree(r.big, n);
        const int big_up = dim_in_degree(r.big, n + 1);
        const int big_down = dim_in_degree(r.big, n - 1);
        const int small_n = dim_in_degree(r.small, n);
        const int small_down = dim_in_degree(r.small, n - 1);
        const std::string at = " at degree " + std::to_string(n);

        const RatMatrix incl = mat_or_zero(r.incl.mats, n, big_n, small_n);
        const RatMatrix incl_down =
            mat_or_zero(r.incl.mats, n - 1, big_down, small_down);
        const RatMatrix proj = mat_or_zero(r.proj.mats, n, small_n, big_n);
        const RatMatrix proj_down =
            mat_or_zero(r.proj.mats, n - 1, small_down, big_down);
        const RatMatrix proj_up = mat_or_zero(r.proj.mats, n + 1,
                                              dim_in_degree(r.small, n + 1),
                                              big_up);
        const RatMatrix h = mat_or_zero(r.htpy.mats, n, big_up, big_n);
        const RatMatrix h_down =
            mat_or_zero(r.htpy.mats, n - 1, big_n, big_down);
        const RatMatrix h_up = mat_or_zero(
            r.htpy.mats, n + 1, dim_in_degree(r.big, n + 2), big_up);
        const RatMatrix d_big = differential_matrix(r.big, n);
        const RatMatrix d_big_up = differential_matrix(r.big, n + 1);
        const RatMatrix d_small = differential_matrix(r.small, n);

        if (proj * incl != RatMatrix::identity(small_n))
            return "proj.incl != id" + at;
        if (d_big * incl != incl_down * d_small)
            return "incl is not a chain map" + at;
        if (d_small * proj != proj_down * d_big)
            return "proj is not a chain map" + at;
        if (RatMatrix::identity(big_n) - incl * proj
            != d_big_up * h + h_down * d_big)
            return "id - incl.proj != d.h + h.d" + at;
        if (!(h_up * h).is_zero())
            return "h.h != 0" + at;
        if (!(h * incl).is_zero())
            return "h.incl != 0" + at;
        if (!(proj_up * h).is_zero())
            return "proj.h != 0" + at;
    }
    return "";
}

}  // namespace operadkit
