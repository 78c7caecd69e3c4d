#pragma once

#include "operadkit/chain_complex.hpp"

#include <map>
#include <utility>

namespace operadkit {

// Degree-0 bilinear operation on a graded space, stored as a sparse table on
// basis pairs; an absent pair maps to zero.
struct BilinearOp {
    std::map<std::pair<BasisRef, BasisRef>, Combination> table;
};

Combination apply_bilinear(const BilinearOp& op, const Combination& x,
                           const Combination& y);
BilinearOp bilinear_sum(const BilinearOp& a, const BilinearOp& b);
BilinearOp bilinear_scale(const Rational& a, const BilinearOp& op);

// Chain complex with two products, each associative, each satisfying the
// graded Leibniz rule, and jointly satisfying
//   (x*y).z + (x.y)*z = x*(y.z) + x.(y*z).
struct DgAs2Algebra {
    ChainComplex complex;
    BilinearOp star;
    BilinearOp bullet;
};

// Empty string if `a` is a valid structure; otherwise a witness naming the
// first axiom that fails and the basis tuple where it fails.
std::string check_dg_as2(const DgAs2Algebra& a);

// Associativity of lambda*star + mu*bullet on all basis triples; empty string
// or a witness.  Any blend of the two products of a valid algebra passes.
std::string check_blend_associative(const DgAs2Algebra& a,
                                    const Rational& lambda,
                                    const Rational& mu);

// Seeded random valid algebra with the requested basis dimension in each
// degree (basis names "a<degree>_<k>").  The differential pairs off random
// basis vectors; the products are drawn from the solution space of the
// Leibniz constraints over a square-zero multiplication ansatz, which makes
// associativity and the compatibility relation automatic.  Always passes
// check_dg_as2.
DgAs2Algebra random_dg_as2(unsigned seed, const std::map<int, int>& dims);

}  // namespace operadkit
