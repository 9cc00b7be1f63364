#include <doctest.h>

#include <random>
#include <variant>
#include <vector>

#include "cohomcheck/zlinalg.hpp"
#include "property_suites.hpp"

using namespace cohomcheck;

namespace {

IntMatrix from_rows(const std::vector<std::vector<long>>& rows) {
    IntMatrix a(rows.size(), rows.empty() ? 0 : rows[0].size());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j)
            a.at(i, j) = Int(rows[i][j]);
    return a;
}

// Cofactor-expansion determinant: the independent oracle for Bareiss.
Int det_oracle(const IntMatrix& a) {
    const std::size_t n = a.rows();
    if (n == 1) return a.at(0, 0);
    Int total(0);
    for (std::size_t j = 0; j < n; ++j) {
        IntMatrix minor(n - 1, n - 1);
        for (std::size_t r = 1; r < n; ++r) {
            std::size_t cc = 0;
            for (std::size_t c = 0; c < n; ++c) {
                if (c == j) continue;
                minor.at(r - 1, cc++) = a.at(r, c);
            }
        }
        Int term = a.at(0, j) * det_oracle(minor);
        if (j % 2 == 0) total += term; else total -= term;
    }
    return total;
}

} // namespace

TEST_SUITE("zlinalg") {

TEST_CASE("matrix basics") {
    IntMatrix a = from_rows({{1, 2}, {3, 4}, {5, 6}});
    CHECK(a.rows() == 3);
    CHECK(a.cols() == 2);
    IntMatrix t = a.transpose();
    CHECK(t.rows() == 2);
    CHECK(t.at(0, 2) == 5);
    CHECK(t.transpose() == a);

    IntMatrix id = IntMatrix::identity(3);
    CHECK(id * a == a);
    CHECK(a * IntMatrix::identity(2) == a);

    std::vector<Int> v = {Int(1), Int(-1)};
    std::vector<Int> av = a * v;
    REQUIRE(av.size() == 3);
    CHECK(av[0] == -1);
    CHECK(av[1] == -1);
    CHECK(av[2] == -1);
}

TEST_CASE("fixed Hermite forms") {
    // Lattice spanned by (4,6) and (2,4) is 2Z x 2Z after reduction.
    HnfResult r = hnf(from_rows({{4, 6}, {2, 4}}));
    CHECK(r.h == from_rows({{2, 0}, {0, 2}}));
    CHECK(r.rank == 2);
    CHECK(r.pivot_cols == std::vector<std::size_t>{0, 1});

    // A rank-1 example: both rows collapse onto one generator.
    HnfResult s = hnf(from_rows({{2, 4, 6}, {1, 2, 3}}));
    CHECK(s.h == from_rows({{1, 2, 3}, {0, 0, 0}}));
    CHECK(s.rank == 1);

    // Above-pivot entries are reduced into [0, pivot): 7 - 2*3 = 1.
    HnfResult t = hnf(from_rows({{5, 7}, {0, 3}}));
    CHECK(t.rank == 2);
    CHECK(t.h == from_rows({{5, 1}, {0, 3}}));
    CHECK(t.u * from_rows({{5, 7}, {0, 3}}) == t.h);
}

TEST_CASE("determinant against cofactor expansion") {
    CHECK(determinant(from_rows({{7}})) == 7);
    CHECK(determinant(from_rows({{2, 1}, {1, 2}})) == 3);
    CHECK(determinant(from_rows({{1, 2}, {2, 4}})) == 0);

    std::mt19937_64 rng(2024);
    std::uniform_int_distribution<long> entry(-9, 9);
    for (int it = 0; it < 60; ++it) {
        std::size_t n = 1 + static_cast<std::size_t>(it % 5);
        IntMatrix a(n, n);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j)
                a.at(i, j) = Int(entry(rng));
        CHECK(determinant(a) == det_oracle(a));
    }
    CHECK_THROWS_AS(determinant(IntMatrix(2, 3)), DimensionMismatchError);
}

TEST_CASE("diophantine solver on fixed systems") {
    // 2x = 6 has x = 3; 2x = 5 fails on divisibility.
    auto ok = solve_diophantine(from_rows({{2}}), {Int(6)});
    REQUIRE(std::holds_alternative<std::vector<Int>>(ok));
    CHECK(std::get<std::vector<Int>>(ok) == std::vector<Int>{Int(3)});

    auto bad = solve_diophantine(from_rows({{2}}), {Int(5)});
    REQUIRE(std::holds_alternative<NoSolutionCertificate>(bad));
    const auto& cert = std::get<NoSolutionCertificate>(bad);
    CHECK(std::holds_alternative<DivisibilityWitness>(cert.witness));
    CHECK(!cert.describe().empty());

    // x = 1 and x = 2 simultaneously: rationally inconsistent, so the
    // certificate is a kernel row u = (1, -1) (up to sign/scale).
    auto incons = solve_diophantine(from_rows({{1}, {1}}), {Int(1), Int(2)});
    REQUIRE(std::holds_alternative<NoSolutionCertificate>(incons));
    const auto& cert2 = std::get<NoSolutionCertificate>(incons);
    REQUIRE(std::holds_alternative<KernelWitness>(cert2.witness));
    const auto& u = std::get<KernelWitness>(cert2.witness).u;
    REQUIRE(u.size() == 2);
    CHECK(u[0] + u[1] == 0);
    CHECK(u[0] * Int(1) + u[1] * Int(2) != 0);
    CHECK(!cert2.describe().empty());

    // Mixed system with a unique solution.
    auto mixed = solve_diophantine(from_rows({{1, 2}, {3, 4}}), {Int(5), Int(11)});
    REQUIRE(std::holds_alternative<std::vector<Int>>(mixed));
    auto sol = std::get<std::vector<Int>>(mixed);
    CHECK(sol == std::vector<Int>{Int(1), Int(2)});

    CHECK_THROWS_AS(solve_diophantine(from_rows({{1, 2}}), {Int(1), Int(2)}),
                    DimensionMismatchError);
}

TEST_CASE("hnf and solver property suite") {
    auto r = cohomcheck::testing::hnf_suite(0xfeedu, 110);
    INFO(r.first_failure);
    CHECK(r.failures == 0);
    CHECK(r.checks >= 500);
}

} // TEST_SUITE
