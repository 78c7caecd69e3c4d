#pragma once

#include "operadkit/dg_algebra.hpp"

// Shared hand-built algebras used across the test files.
namespace fixtures {

using namespace operadkit;

// Four-dimensional truncated polynomial algebra with one odd generator:
// basis 1, x in degree 0 and th, xth in degree 1, with d th = x, star the
// truncated product (x.x = 0, th.th = 0) and bullet u.x.v.
inline DgAs2Algebra four_dim()
{
    DgAs2Algebra alg;
    alg.complex.basis[0] = {"one", "x"};
    alg.complex.basis[1] = {"th", "xth"};
    RatMatrix d1(2, 2);
    d1.at(1, 0) = 1;  // d th = x
    alg.complex.d.emplace(1, std::move(d1));

    const BasisRef one{0, 0}, x{0, 1}, th{1, 0}, xth{1, 1};
    auto put = [](BilinearOp& op, BasisRef a, BasisRef b, BasisRef value) {
        op.table[{a, b}] = Combination{{value, Rational(1)}};
    };
    put(alg.star, one, one, one);
    put(alg.star, one, x, x);
    put(alg.star, x, one, x);
    put(alg.star, one, th, th);
    put(alg.star, th, one, th);
    put(alg.star, one, xth, xth);
    put(alg.star, xth, one, xth);
    put(alg.star, x, th, xth);
    put(alg.star, th, x, xth);

    put(alg.bullet, one, one, x);
    put(alg.bullet, one, th, xth);
    put(alg.bullet, th, one, xth);
    return alg;
}

// Eleven-dimensional associative algebra (bullet zero) whose homology has a
// triple Massey product: a.b and b.c bound (d P = ab, d Q = bc) while the
// cycle P.c + a.Q does not, so the transferred ternary operation is nonzero.
inline DgAs2Algebra massey()
{
    DgAs2Algebra alg;
    alg.complex.basis[0] = {"one"};
    alg.complex.basis[1] = {"a", "b", "c"};
    alg.complex.basis[2] = {"ab", "bc"};
    alg.complex.basis[3] = {"P", "Q", "w"};
    alg.complex.basis[4] = {"s", "t"};
    RatMatrix d3(2, 3);
    d3.at(0, 0) = 1;  // d P = ab
    d3.at(1, 1) = 1;  // d Q = bc
    alg.complex.d.emplace(3, std::move(d3));
    RatMatrix d4(3, 2);
    d4.at(2, 0) = 1;   // d s = w
    d4.at(2, 1) = -1;  // d t = -w
    alg.complex.d.emplace(4, std::move(d4));

    const BasisRef one{0, 0}, a{1, 0}, b{1, 1}, c{1, 2};
    const BasisRef ab{2, 0}, bc{2, 1};
    const BasisRef P{3, 0}, Q{3, 1}, w{3, 2};
    const BasisRef s{4, 0}, t{4, 1};
    auto put = [](BilinearOp& op, BasisRef u, BasisRef v, BasisRef value) {
        op.table[{u, v}] = Combination{{value, Rational(1)}};
    };
    for (const BasisRef r : {a, b, c, ab, bc, P, Q, w, s, t}) {
        put(alg.star, one, r, r);
        put(alg.star, r, one, r);
    }
    put(alg.star, one, one, one);
    put(alg.star, a, b, ab);
    put(alg.star, b, c, bc);
    put(alg.star, ab, c, w);  // both associations of a.b.c
    put(alg.star, a, bc, w);
    put(alg.star, P, c, s);
    put(alg.star, a, Q, t);
    return alg;
}

}  // namespace fixtures
