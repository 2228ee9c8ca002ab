#include <limits>
#include <random>
#include <vector>

#include "doctest.h"
#include "helpers.hpp"
#include "qubokit/qubo.hpp"

using namespace qubokit;
using testing::naive_energy;
using testing::nth_assignment;

namespace {

// Evaluates a LinearExpr the slow way.
Coeff expr_value(const LinearExpr& e, const Assignment& a) {
    Coeff v = e.constant();
    for (const auto& [i, c] : e.terms())
        if (a[i]) v += c;
    return v;
}

LinearExpr random_expr(testing::Rng& rng, Index num_vars, int max_terms) {
    LinearExpr e = LinearExpr::constant(testing::rand_int(rng, -3, 3));
    int terms = testing::rand_int(rng, 0, max_terms);
    for (int t = 0; t < terms; ++t)
        e.add_term(static_cast<Index>(testing::rand_int(rng, 0, static_cast<int>(num_vars) - 1)),
                   testing::rand_int(rng, -3, 3));
    return e;
}

}  // namespace

TEST_CASE("model accumulates and prunes coefficients") {
    QuboModel m(3);
    m.add_offset(5);
    m.add_linear(0, 2);
    m.add_linear(0, -2);
    m.add_quadratic(2, 1, 4);
    m.add_quadratic(1, 2, -4);
    CHECK(m.num_linear_nonzero() == 0);
    CHECK(m.num_quadratic_nonzero() == 0);
    CHECK(m.offset() == 5);
    m.add_product(1, 1, 3);  // a square is linear
    CHECK(m.linear(1) == 3);
    CHECK_THROWS_AS(m.add_linear(3, 1), DimensionError);
    CHECK_THROWS_AS(m.add_quadratic(0, 0, 1), DimensionError);
}

TEST_CASE("energy matches a naive evaluation on random models") {
    testing::Rng rng(11);
    for (int trial = 0; trial < 50; ++trial) {
        Index n = static_cast<Index>(testing::rand_int(rng, 1, 8));
        QuboModel m(n);
        m.add_offset(testing::rand_int(rng, -5, 5));
        for (Index i = 0; i < n; ++i) m.add_linear(i, testing::rand_int(rng, -6, 6));
        for (Index i = 0; i < n; ++i)
            for (Index j = i + 1; j < n; ++j)
                if (testing::rand_bool(rng, 0.5))
                    m.add_quadratic(i, j, testing::rand_int(rng, -6, 6));
        for (std::uint64_t k = 0; k < (1ull << n); ++k) {
            Assignment a = nth_assignment(n, k);
            CHECK(energy(m, a) == naive_energy(m, a));
        }
    }
}

TEST_CASE("energy rejects dimension mismatches") {
    QuboModel m(2);
    CHECK_THROWS_AS(energy(m, Assignment{1}), DimensionError);
}

TEST_CASE("expression emission: linear, product, square") {
    testing::Rng rng(23);
    const Index n = 5;
    for (int trial = 0; trial < 80; ++trial) {
        LinearExpr a = random_expr(rng, n, 4);
        LinearExpr b = random_expr(rng, n, 4);
        Coeff w = testing::rand_int(rng, 1, 3);

        QuboModel linear(n), product(n), square(n);
        add_linear_expr(linear, a, w);
        add_product_expr(product, a, b, w);
        add_square_expr(square, a, w);

        for (std::uint64_t k = 0; k < (1ull << n); ++k) {
            Assignment x = nth_assignment(n, k);
            Coeff va = expr_value(a, x);
            Coeff vb = expr_value(b, x);
            CHECK(energy(linear, x) == w * va);
            CHECK(energy(product, x) == w * va * vb);
            CHECK(energy(square, x) == w * va * va);
        }
    }
}

TEST_CASE("half products require even coefficients") {
    // size * (size - 1) always has even coefficients for integer expressions.
    testing::Rng rng(31);
    const Index n = 4;
    for (int trial = 0; trial < 60; ++trial) {
        LinearExpr size = random_expr(rng, n, 3);
        LinearExpr minus_one = size;
        minus_one.add_constant(-1);
        QuboModel m(n);
        add_half_product_expr(m, size, minus_one, 2);
        for (std::uint64_t k = 0; k < (1ull << n); ++k) {
            Assignment x = nth_assignment(n, k);
            Coeff v = expr_value(size, x);
            CHECK(energy(m, x) == v * (v - 1));
        }
    }

    QuboModel m(2);
    LinearExpr odd = LinearExpr::variable(0);  // x0 * x1 has coefficient 1
    CHECK_THROWS_AS(add_half_product_expr(m, odd, LinearExpr::variable(1), 1), OverflowError);
}

TEST_CASE("spin image is exact on every assignment") {
    testing::Rng rng(47);
    for (int trial = 0; trial < 30; ++trial) {
        Index n = static_cast<Index>(testing::rand_int(rng, 1, 6));
        QuboModel m(n);
        m.add_offset(testing::rand_int(rng, -4, 4));
        for (Index i = 0; i < n; ++i) m.add_linear(i, testing::rand_int(rng, -5, 5));
        for (Index i = 0; i < n; ++i)
            for (Index j = i + 1; j < n; ++j)
                if (testing::rand_bool(rng, 0.6))
                    m.add_quadratic(i, j, testing::rand_int(rng, -5, 5));

        IsingModel ising = to_ising(m);
        for (std::uint64_t k = 0; k < (1ull << n); ++k) {
            Assignment x = nth_assignment(n, k);
            std::vector<int> spins(n);
            for (Index i = 0; i < n; ++i) spins[i] = x[i] ? 1 : -1;
            CHECK(ising_energy(ising, spins) == Rational(energy(m, x)));
        }
    }
}

TEST_CASE("quadratic degree classification") {
    QuboModel constant(2);
    constant.add_offset(7);
    CHECK(max_quadratic_degree(constant) == 0);
    QuboModel linear(2);
    linear.add_linear(1, 3);
    CHECK(max_quadratic_degree(linear) == 1);
    QuboModel quadratic(2);
    quadratic.add_quadratic(0, 1, -2);
    CHECK(max_quadratic_degree(quadratic) == 2);
}

TEST_CASE("rational arithmetic stays normalized") {
    Rational half(1, 2);
    Rational quarter(1, 4);
    CHECK((half + quarter) == Rational(3, 4));
    CHECK((half * quarter) == Rational(1, 8));
    CHECK((half - half) == Rational(0));
    CHECK(Rational(2, 4) == half);
    CHECK(Rational(1, -2).den() == 2);
    CHECK(Rational(1, -2).num() == -1);
    CHECK(Rational(3, 4).str() == "3/4");
    CHECK(Rational(8, 4).str() == "2");
    CHECK_THROWS(Rational(1, 0));
}

TEST_CASE("checked arithmetic raises on overflow") {
    Coeff big = std::numeric_limits<Coeff>::max();
    CHECK_THROWS_AS(checked_add(big, 1), OverflowError);
    CHECK_THROWS_AS(checked_mul(big, 2), OverflowError);
    CHECK(checked_sub(big, big) == 0);
}
