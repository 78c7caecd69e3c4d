#pragma once

#include "operadkit/linalg.hpp"

#include <map>
#include <string>
#include <vector>

namespace operadkit {

// Reference to a basis vector of a graded space: degree plus position in the
// ordered basis of that degree.
struct BasisRef {
    int degree = 0;
    int index = 0;

    auto operator<=>(const BasisRef&) const = default;
};

// Sparse rational linear combination of basis vectors.  Invariant: no stored
// coefficient is zero.
using Combination = std::map<BasisRef, Rational>;

// Finite graded vector space over Q with a degree -1 differential.  d[n] is
// the matrix of d : C_n -> C_{n-1} in the ordered bases (rows indexed by the
// degree n-1 basis, columns by the degree n basis); an absent entry is the
// zero map.
struct ChainComplex {
    std::map<int, std::vector<std::string>> basis;
    std::map<int, RatMatrix> d;

    bool operator==(const ChainComplex&) const = default;
};

// Degree-homogeneous linear map between graded spaces.  mats[n] sends degree n
// to degree n + shift; an absent entry is the zero map.
struct GradedMap {
    int shift = 0;
    std::map<int, RatMatrix> mats;
};

int dim_in_degree(const ChainComplex& c, int degree);
int total_dim(const ChainComplex& c);

// Matrix of d : C_degree -> C_(degree-1), zero-filled when absent.
RatMatrix differential_matrix(const ChainComplex& c, int degree);

// Throws std::invalid_argument on duplicate or empty basis names, matrices
// whose shape disagrees with the graded basis, or d composed with d nonzero.
void validate_complex(const ChainComplex& c);

// Name lookup; names are unique across all degrees of a validated complex.
BasisRef basis_ref(const ChainComplex& c, const std::string& name);
const std::string& basis_name(const ChainComplex& c, BasisRef ref);

// Adds a*ref into x, erasing the entry if the total cancels.
void combination_add_term(Combination& x, BasisRef ref, const Rational& a);
Combination combination_sum(const Combination& a, const Combination& b);
Combination combination_scale(const Rational& a, const Combination& x);

// Common degree of the terms; throws std::invalid_argument if mixed or if x
// is zero (a zero combination has no degree).
int combination_degree(const Combination& x);

Combination apply_differential(const ChainComplex& c, const Combination& x);
Combination apply_graded(const GradedMap& f, const Combination& x);

// "3/2 u + -1/1 w" with terms in basis order; "0" for the zero combination.
std::string render_combination(const ChainComplex& c, const Combination& x);

}  // namespace operadkit
