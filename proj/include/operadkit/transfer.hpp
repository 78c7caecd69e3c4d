#pragma once

#include "operadkit/cobar.hpp"
#include "operadkit/dg_algebra.hpp"
#include "operadkit/retract.hpp"

#include <map>
#include <string>
#include <utility>
#include <vector>

namespace operadkit {

// Largest weight (= arity - 1) the transfer engine will populate.
inline constexpr int kTransferMaxWeight = 6;

// Per-vertex sign in the tree recursion: a vertex whose left and right
// subtrees take l and r inputs contributes (-1)^(alpha*l + beta*r +
// gamma*l*r + delta).  The default (-1)^(l+1) is the Merkulov-style
// convention; it passes verify_infinity_relations through arity 5 on every
// fixture and generated algebra, which is the binding requirement.
// Conventions that weigh l and r symmetrically (alpha == beta) fail that
// check, so the asymmetry is essential, not a normalization choice.
struct TransferSigns {
    int alpha = 1;
    int beta = 0;
    int gamma = 0;
    int delta = 1;
};

// Table of one multilinear operation on basis tuples; tuples mapped to zero
// are omitted.
using TupleTable = std::map<std::vector<BasisRef>, Combination>;

// The transferred operations m_ij : V^(i+j+1) -> V of degree i+j-1, for all
// 1 <= i+j <= max_weight, on the retract target V.
struct TransferredStructure {
    ChainComplex small;
    int max_weight = 0;
    std::map<std::pair<int, int>, TupleTable> ops;
};

// Multilinear extension: args[k] substituted into slot k of the operation.
Combination apply_op(const TupleTable& table,
                     const std::vector<Combination>& args);

// Homotopy transfer along the retract: m_ij = proj . lambda_ij where
// lambda_00 is incl on a single input and lambda_ij sums, over a root
// product (star spends one unit of i, bullet one of j) and a split of the
// rest, the compositions root(H lambda_left, H lambda_right) with H = htpy
// except directly incl on single-input leaves; signs are the per-vertex
// factor above times the Koszul sign from moving the right branch (degree =
// its weight) past the left branch's inputs.  Throws std::invalid_argument
// if the algebra and retract disagree or the weight is out of range.
TransferredStructure transfer(const DgAs2Algebra& alg,
                              const DeformationRetract& r, int max_weight);
TransferredStructure transfer_with(const DgAs2Algebra& alg,
                                   const DeformationRetract& r,
                                   int max_weight,
                                   const TransferSigns& signs);

struct VerifyResult {
    bool ok = true;
    std::string witness;
};

// Checks, for every 2 <= i+j+1 <= max_arity and every basis tuple, that
//   d_V m_ij - (-1)^(i+j-1) sum_k m_ij(..., d_V applied in slot k, ...)
// equals the signed sum of m_ab(id^p, m_cd, id^r) given by the differential
// of m[i,j]; on failure the witness names (i,j), the tuple, and both sides.
VerifyResult verify_infinity_relations(const TransferredStructure& t,
                                       const ChainComplex& v, int max_arity);

}  // namespace operadkit
