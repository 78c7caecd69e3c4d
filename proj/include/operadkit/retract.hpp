#pragma once

#include "operadkit/chain_complex.hpp"

namespace operadkit {

// Deformation-retract data exhibiting `small` as a homotopy summand of `big`:
//   proj . incl = id,   id - incl . proj = d h + h d,
// with incl and proj chain maps, plus the side conditions
//   h h = 0,   h incl = 0,   proj h = 0.
struct DeformationRetract {
    ChainComplex big;
    ChainComplex small;
    GradedMap incl;  // small -> big, degree 0
    GradedMap proj;  // big -> small, degree 0
    GradedMap htpy;  // big -> big, degree +1
};

// The trivial retract of a complex onto itself (incl = proj = id, h = 0).
DeformationRetract identity_retract(const ChainComplex& a);

// Retract onto the homology of `a`, carried by a complex with zero
// differential and basis names "v<degree>_<k>".  Built degreewise by exact
// Gaussian elimination: each degree splits as boundaries + chosen homology
// representatives + a complement mapped isomorphically onto the boundaries
// below, and h inverts d on that complement.  Deterministic in the basis
// order; all retract identities including the side conditions hold exactly.
DeformationRetract build_retract(const ChainComplex& a);

// Empty string if every retract identity holds; otherwise a witness naming
// the first identity and degree that fail.
std::string check_retract(const DeformationRetract& r);

}  // namespace operadkit
