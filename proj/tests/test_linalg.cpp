#include <doctest.h>

#include "operadkit/linalg.hpp"
#include "operadkit/rational.hpp"

#include <random>

using namespace operadkit;

namespace {

Rational q(long long n, long long d = 1) { return Rational(n, d); }

// Independent membership check used to cross-validate span_equal: v is in the
// row space of m iff appending v does not raise the rank.
bool member(const std::vector<RatVector>& rows, const RatVector& v)
{
    if (rows.empty()) {
        for (const Rational& x : v)
            if (x != 0)
                return false;
        return true;
    }
    return in_row_space(RatMatrix::from_rows(rows), v);
}

bool mutual_spans(const std::vector<RatVector>& a, const std::vector<RatVector>& b)
{
    for (const RatVector& v : a)
        if (!member(b, v))
            return false;
    for (const RatVector& v : b)
        if (!member(a, v))
            return false;
    return true;
}

RatMatrix random_matrix(std::mt19937& rng, int rows, int cols)
{
    std::uniform_int_distribution<int> num(-5, 5);
    std::uniform_int_distribution<int> den(1, 4);
    RatMatrix m(rows, cols);
    for (int r = 0; r < rows; ++r)
        for (int c = 0; c < cols; ++c)
            m.at(r, c) = Rational(num(rng), den(rng));
    return m;
}

}  // namespace

TEST_CASE("rational string round trip")
{
    CHECK(rational_to_string(rational_from_string("5")) == "5/1");
    CHECK(rational_to_string(rational_from_string("-3/6")) == "-1/2");
    CHECK(rational_to_string(rational_from_string("4/-6")) == "-2/3");
    CHECK(rational_from_string("0/7") == 0);
    CHECK_THROWS_AS(rational_from_string(""), std::invalid_argument);
    CHECK_THROWS_AS(rational_from_string("1/0"), std::invalid_argument);
    CHECK_THROWS_AS(rational_from_string("x"), std::invalid_argument);
}

TEST_CASE("rref of identity is identity")
{
    const RatMatrix id = RatMatrix::identity(2);
    const RrefResult r = rref(id);
    CHECK(r.mat == id);
    CHECK(r.pivots == std::vector<int>{0, 1});
}

TEST_CASE("rref collapses dependent rows")
{
    const RatMatrix m = RatMatrix::from_rows({{q(1), q(1)}, {q(1), q(1)}});
    const RrefResult r = rref(m);
    CHECK(r.mat == RatMatrix::from_rows({{q(1), q(1)}, {q(0), q(0)}}));
    CHECK(r.pivots == std::vector<int>{0});
}

TEST_CASE("rref is idempotent and preserves row space")
{
    std::mt19937 rng(20240811);
    for (int trial = 0; trial < 25; ++trial) {
        const RatMatrix m = random_matrix(rng, 4, 6);
        const RrefResult once = rref(m);
        const RrefResult twice = rref(once.mat);
        CHECK(once.mat == twice.mat);
        CHECK(once.pivots == twice.pivots);

        std::vector<RatVector> reduced;
        for (size_t i = 0; i < once.pivots.size(); ++i)
            reduced.push_back(once.mat.row(static_cast<int>(i)));
        CHECK(mutual_spans(m.row_list(), reduced));
    }
}

TEST_CASE("nullspace examples")
{
    SUBCASE("zero matrix: whole space")
    {
        const auto basis = nullspace_basis(RatMatrix(2, 3));
        REQUIRE(basis.size() == 3);
        CHECK(span_equal(basis, {{q(1), q(0), q(0)},
                                 {q(0), q(1), q(0)},
                                 {q(0), q(0), q(1)}}));
    }
    SUBCASE("one equation x = y")
    {
        const auto basis = nullspace_basis(RatMatrix::from_rows({{q(1), q(-1)}}));
        REQUIRE(basis.size() == 1);
        CHECK(span_equal(basis, {{q(1), q(1)}}));
    }
    SUBCASE("dependent equations")
    {
        const auto basis =
            nullspace_basis(RatMatrix::from_rows({{q(1), q(2)}, {q(2), q(4)}}));
        REQUIRE(basis.size() == 1);
        CHECK(span_equal(basis, {{q(-2), q(1)}}));
    }
}

TEST_CASE("rank-nullity over random matrices")
{
    std::mt19937 rng(77);
    for (int trial = 0; trial < 25; ++trial) {
        const RatMatrix m = random_matrix(rng, 3, 5);
        const auto basis = nullspace_basis(m);
        CHECK(rank(m) + static_cast<int>(basis.size()) == m.cols());
        for (const RatVector& v : basis) {
            const RatVector image = m.apply(v);
            for (const Rational& x : image)
                CHECK(x == 0);
        }
    }
}

TEST_CASE("span_equal examples")
{
    CHECK(span_equal({{q(1), q(0)}, {q(0), q(1)}}, {{q(1), q(1)}, {q(1), q(-1)}}));
    CHECK_FALSE(span_equal({{q(1), q(0)}}, {{q(1), q(1)}}));
    CHECK(span_equal({}, {{q(0), q(0), q(0)}}));
    CHECK_THROWS_AS(span_equal({{q(1)}}, {{q(1), q(0)}}), std::invalid_argument);
}

TEST_CASE("span_equal agrees with mutual membership on random spans")
{
    std::mt19937 rng(4242);
    for (int trial = 0; trial < 40; ++trial) {
        const RatMatrix a = random_matrix(rng, 3, 6);
        const RatMatrix b = random_matrix(rng, 3, 6);
        CHECK(span_equal(a.row_list(), b.row_list())
              == mutual_spans(a.row_list(), b.row_list()));

        // A scaled/shuffled copy of a must span the same space.
        std::vector<RatVector> scaled;
        scaled.push_back(a.row(2));
        for (int r = 0; r < 3; ++r) {
            RatVector v = a.row(r);
            for (Rational& x : v)
                x *= q(-3, 2);
            scaled.push_back(std::move(v));
        }
        CHECK(span_equal(a.row_list(), scaled));
    }
}

TEST_CASE("solve and inverse")
{
    const RatMatrix a = RatMatrix::from_rows({{q(2), q(1)}, {q(1), q(3)}});
    const auto x = solve(a, {q(5), q(10)});
    REQUIRE(x.has_value());
    CHECK(a.apply(*x) == RatVector{q(5), q(10)});

    const RatMatrix inv = inverse(a);
    CHECK(a * inv == RatMatrix::identity(2));
    CHECK(inv * a == RatMatrix::identity(2));

    const RatMatrix singular = RatMatrix::from_rows({{q(1), q(2)}, {q(2), q(4)}});
    CHECK_THROWS_AS(inverse(singular), std::invalid_argument);
    CHECK_FALSE(solve(singular, {q(1), q(0)}).has_value());
    CHECK(solve(singular, {q(1), q(2)}).has_value());
}

TEST_CASE("inverse of random invertible matrices")
{
    std::mt19937 rng(99);
    int done = 0;
    while (done < 10) {
        const RatMatrix m = random_matrix(rng, 4, 4);
        if (rank(m) != 4)
            continue;
        CHECK(m * inverse(m) == RatMatrix::identity(4));
        ++done;
    }
}
