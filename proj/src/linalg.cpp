#include "operadkit/linalg.hpp"

#include <algorithm>
#include <stdexcept>

namespace operadkit {

RatMatrix::RatMatrix(int rows, int cols)
    : rows_(rows), cols_(cols), entries_(static_cast<size_t>(rows) * cols)
{
    if (rows < 0 || cols < 0)
        throw std::invalid_argument("negative matrix dimension");
}

RatMatrix::RatMatrix(int rows, int cols, std::vector<Rational> entries)
    : rows_(rows), cols_(cols), entries_(std::move(entries))
{
    if (rows < 0 || cols < 0)
        throw std::invalid_argument("negative matrix dimension");
    if (entries_.size() != static_cast<size_t>(rows) * cols)
        throw std::invalid_argument("entry count does not match dimensions");
}

RatMatrix RatMatrix::identity(int n)
{
    RatMatrix m(n, n);
    for (int i = 0; i < n; ++i)
        m.at(i, i) = 1;
    return m;
}

RatMatrix RatMatrix::from_rows(const std::vector<RatVector>& rows)
{
    if (rows.empty())
        return RatMatrix();
    const int cols = static_cast<int>(rows.front().size());
    RatMatrix m(static_cast<int>(rows.size()), cols);
    for (int r = 0; r < m.rows(); ++r) {
        if (static_cast<int>(rows[r].size()) != cols)
            throw std::invalid_argument("ragged row list");
        for (int c = 0; c < cols; ++c)
            m.at(r, c) = rows[r][c];
    }
    return m;
}

Rational& RatMatrix::at(int r, int c)
{
    if (r < 0 || r >= rows_ || c < 0 || c >= cols_)
        throw std::out_of_range("matrix index out of range");
    return entries_[static_cast<size_t>(r) * cols_ + c];
}

const Rational& RatMatrix::at(int r, int c) const
{
    if (r < 0 || r >= rows_ || c < 0 || c >= cols_)
        throw std::out_of_range("matrix index out of range");
    return entries_[static_cast<size_t>(r) * cols_ + c];
}

RatVector RatMatrix::row(int r) const
{
    RatVector out(cols_);
    for (int c = 0; c < cols_; ++c)
        out[c] = at(r, c);
    return out;
}

std::vector<RatVector> RatMatrix::row_list() const
{
    std::vector<RatVector> out;
    out.reserve(rows_);
    for (int r = 0; r < rows_; ++r)
        out.push_back(row(r));
    return out;
}

RatMatrix RatMatrix::operator*(const RatMatrix& other) const
{
    if (cols_ != other.rows_)
        throw std::invalid_argument("matrix product shape mismatch");
    RatMatrix out(rows_, other.cols_);
    for (int r = 0; r < rows_; ++r)
        for (int k = 0; k < cols_; ++k) {
            const Rational& x = at(r, k);
            if (x == 0)
                continue;
            for (int c = 0; c < other.cols_; ++c)
                out.at(r, c) += x * other.at(k, c);
        }
    return out;
}

RatMatrix RatMatrix::operator+(const RatMatrix& other) const
{
    if (rows_ != other.rows_ || cols_ != other.cols_)
        throw std::invalid_argument("matrix sum shape mismatch");
    RatMatrix out = *this;
    for (size_t i = 0; i < entries_.size(); ++i)
        out.entries_[i] += other.entries_[i];
    return out;
}

RatMatrix RatMatrix::operator-(const RatMatrix& other) const
{
    if (rows_ != other.rows_ || cols_ != other.cols_)
        throw std::invalid_argument("matrix difference shape mismatch");
    RatMatrix out = *this;
    for (size_t i = 0; i < entries_.size(); ++i)
        out.entries_[i] -= other.entries_[i];
    return out;
}

RatVector RatMatrix::apply(const RatVector& v) const
{
    if (static_cast<int>(v.size()) != cols_)
        throw std::invalid_argument("matrix-vector shape mismatch");
    RatVector out(rows_);
    for (int r = 0; r < rows_; ++r)
        for (int c = 0; c < cols_; ++c)
            if (at(r, c) != 0)
                out[r] += at(r, c) * v[c];
    return out;
}

RatMatrix RatMatrix::transposed() const
{
    RatMatrix out(cols_, rows_);
    for (int r = 0; r < rows_; ++r)
        for (int c = 0; c < cols_; ++c)
            out.at(c, r) = at(r, c);
    return out;
}

bool RatMatrix::is_zero() const
{
    return std::all_of(entries_.begin(), entries_.end(),
                       [](const Rational& q) { return q == 0; });
}

RrefResult rref(const RatMatrix& m)
{
    RrefResult res{m, {}};
    RatMatrix& a = res.mat;
    int lead = 0;
    for (int col = 0; col < a.cols() && lead < a.rows(); ++col) {
        int pivot = -1;
        for (int r = lead; r < a.rows(); ++r)
            if (a.at(r, col) != 0) {
                pivot = r;
                break;
            }
        if (pivot < 0)
            continue;
        if (pivot != lead)
            for (int c = 0; c < a.cols(); ++c)
                std::swap(a.at(pivot, c), a.at(lead, c));
        const Rational inv = Rational(1) / a.at(lead, col);
        for (int c = 0; c < a.cols(); ++c)
            a.at(lead, c) *= inv;
        for (int r = 0; r < a.rows(); ++r) {
            if (r == lead || a.at(r, col) == 0)
                continue;
            const Rational factor = a.at(r, col);
            for (int c = 0; c < a.cols(); ++c)
                a.at(r, c) -= factor * a.at(lead, c);
        }
        res.pivots.push_back(col);
        ++lead;
    }
    return res;
}

int rank(const RatMatrix& m)
{
    return static_cast<int>(rref(m).pivots.size());
}

std::vector<RatVector> nullspace_basis(const RatMatrix& m)
{
    const RrefResult r = rref(m);
    std::vector<bool> is_pivot(m.cols(), false);
    for (int p : r.pivots)
        is_pivot[p] = true;

    std::vector<RatVector> basis;
    for (int free_col = 0; free_col < m.cols(); ++free_col) {
        if (is_pivot[free_col])
            continue;
        RatVector v(m.cols());
        v[free_col] = 1;
        for (size_t i = 0; i < r.pivots.size(); ++i)
            v[r.pivots[i]] = -r.mat.at(static_cast<int>(i), free_col);
        basis.push_back(std::move(v));
    }
    return basis;
}

namespace {

// Nonzero rref rows; the canonical basis of the row space.
std::vector<RatVector> canonical_row_basis(const std::vector<RatVector>& vectors)
{
    if (vectors.empty())
        return {};
    const RrefResult r = rref(RatMatrix::from_rows(vectors));
    std::vector<RatVector> rows;
    for (size_t i = 0; i < r.pivots.size(); ++i)
        rows.push_back(r.mat.row(static_cast<int>(i)));
    return rows;
}

}  // namespace

bool span_equal(const std::vector<RatVector>& a, const std::vector<RatVector>& b)
{
    size_t dim = 0;
    bool have_dim = false;
    for (const auto* side : {&a, &b})
        for (const RatVector& v : *side) {
            if (!have_dim) {
                dim = v.size();
                have_dim = true;
            }
            else if (v.size() != dim) {
                throw std::invalid_argument("span_equal: mixed vector lengths");
            }
        }
    return canonical_row_basis(a) == canonical_row_basis(b);
}

bool in_row_space(const RatMatrix& m, const RatVector& v)
{
    if (static_cast<int>(v.size()) != m.cols())
        throw std::invalid_argument("in_row_space: length mismatch");
    std::vector<RatVector> rows = m.row_list();
    const int base = rank(m);
    rows.push_back(v);
    return rank(RatMatrix::from_rows(rows)) == base;
}

std::optional<RatVector> solve(const RatMatrix& a, const RatVector& b)
{
    if (static_cast<int>(b.size()) != a.rows())
        throw std::invalid_argument("solve: length mismatch");
    RatMatrix aug(a.rows(), a.cols() + 1);
    for (int r = 0; r < a.rows(); ++r) {
        for (int c = 0; c < a.cols(); ++c)
            aug.at(r, c) = a.at(r, c);
        aug.at(r, a.cols()) = b[r];
    }
    const RrefResult red = rref(aug);
    for (int p : red.pivots)
        if (p == a.cols())
            return std::nullopt;  // row [0 ... 0 | 1]: inconsistent
    RatVector x(a.cols());
    for (size_t i = 0; i < red.pivots.size(); ++i)
        x[red.pivots[i]] = red.mat.at(static_cast<int>(i), a.cols());
    return x;
}

RatMatrix inverse(const RatMatrix& m)
{
    if (m.rows() != m.cols())
        throw std::invalid_argument("inverse: matrix not square");
    const int n = m.rows();
    RatMatrix aug(n, 2 * n);
    for (int r = 0; r < n; ++r) {
        for (int c = 0; c < n; ++c)
            aug.at(r, c) = m.at(r, c);
        aug.at(r, n + r) = 1;
    }
    const RrefResult red = rref(aug);
    for (int i = 0; i < n; ++i)
        if (static_cast<int>(red.pivots.size()) <= i || red.pivots[i] != i)
            throw std::invalid_argument("inverse: matrix is singular");
    RatMatrix out(n, n);
    for (int r = 0; r < n; ++r)
        for (int c = 0; c < n; ++c)
            out.at(r, c) = red.mat.at(r, n + c);
    return out;
}

}  // namespace operadkit
