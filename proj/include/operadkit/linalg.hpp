#pragma once

#include "operadkit/rational.hpp"

#include <optional>
#include <vector>

namespace operadkit {

using RatVector = std::vector<Rational>;

/// Dense matrix over the rationals. Everything in this project is tiny
/// (at most a few hundred entries), so no sparsity and no pivot tricks.
class RatMatrix {
public:
    RatMatrix() = default;
    RatMatrix(int rows, int cols);
    RatMatrix(int rows, int cols, std::vector<Rational> entries);

    static RatMatrix identity(int n);
    static RatMatrix from_rows(const std::vector<RatVector>& rows);

    int rows() const { return rows_; }
    int cols() const { return cols_; }

    Rational& at(int r, int c);
    const Rational& at(int r, int c) const;

    RatVector row(int r) const;
    std::vector<RatVector> row_list() const;

    bool operator==(const RatMatrix& other) const = default;

    RatMatrix operator*(const RatMatrix& other) const;
    RatMatrix operator+(const RatMatrix& other) const;
    RatMatrix operator-(const RatMatrix& other) const;
    RatVector apply(const RatVector& v) const;
    RatMatrix transposed() const;
    bool is_zero() const;

private:
    int rows_ = 0;
    int cols_ = 0;
    std::vector<Rational> entries_;
};

struct RrefResult {
    RatMatrix mat;
    std::vector<int> pivots;  // pivot column of each nonzero row, in order
};

/// Gauss-Jordan reduction; the result is the canonical reduced row-echelon
/// form, so two matrices have equal row space iff their rref rows agree.
RrefResult rref(const RatMatrix& m);

int rank(const RatMatrix& m);

/// Basis of { v : m v = 0 }, one vector per free column of rref(m).
std::vector<RatVector> nullspace_basis(const RatMatrix& m);

/// True iff the rational spans of the two generating sets coincide.
/// All vectors must share one length; throws std::invalid_argument otherwise.
bool span_equal(const std::vector<RatVector>& a, const std::vector<RatVector>& b);

/// True iff v lies in the span of the rows of m.
bool in_row_space(const RatMatrix& m, const RatVector& v);

/// Solves a x = b exactly; empty when the system is inconsistent.
std::optional<RatVector> solve(const RatMatrix& a, const RatVector& b);

/// Inverse of a square matrix; throws std::invalid_argument if singular.
RatMatrix inverse(const RatMatrix& m);

}  // namespace operadkit
