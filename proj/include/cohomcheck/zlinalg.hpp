#ifndef COHOMCHECK_ZLINALG_HPP
#define COHOMCHECK_ZLINALG_HPP

#include <cstddef>
#include <string>
#include <variant>
#include <vector>

#include "cohomcheck/polyring.hpp" // Int

namespace cohomcheck {

/// Dense matrix over Z, row-major. Sized for desk-scale certificates
/// (hundreds of rows/columns); entry growth during elimination is accepted.
class IntMatrix {
public:
    IntMatrix(std::size_t rows, std::size_t cols);
    static IntMatrix identity(std::size_t n);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    Int& at(std::size_t i, std::size_t j);
    const Int& at(std::size_t i, std::size_t j) const;

    IntMatrix transpose() const;
    IntMatrix operator*(const IntMatrix& o) const;
    std::vector<Int> operator*(const std::vector<Int>& v) const;
    bool operator==(const IntMatrix& o) const = default;

    void swap_rows(std::size_t i, std::size_t j);

private:
    std::size_t rows_, cols_;
    std::vector<Int> a_;
};

/**
 * Row Hermite normal form: H = U * A with U unimodular, H in row-echelon
 * staircase with positive pivots and entries above each pivot reduced into
 * [0, pivot). Zero rows sit at the bottom; rank is the number of nonzero
 * rows and pivot_cols lists the pivot column of each.
 */
struct HnfResult {
    IntMatrix h;
    IntMatrix u;
    std::size_t rank;
    std::vector<std::size_t> pivot_cols;
};

HnfResult hnf(const IntMatrix& a);

/// Determinant by fraction-free (Bareiss) elimination; square input only.
/// Used by tests to confirm |det U| == 1.
Int determinant(const IntMatrix& a);

/// u with u*A == 0 and u*b != 0: b is not even in the rational column span.
struct KernelWitness {
    std::vector<Int> u;
};

/// Forced coefficient at a pivot of the column-lattice HNF fails to be
/// integral: value/pivot is not an integer, so b lies outside the lattice.
struct DivisibilityWitness {
    std::size_t pivot_row;
    std::size_t pivot_col;
    Int pivot;
    Int value;
};

struct NoSolutionCertificate {
    std::variant<KernelWitness, DivisibilityWitness> witness;
    std::string describe() const;
};

using DiophantineResult = std::variant<std::vector<Int>, NoSolutionCertificate>;

/**
 * Solve A x = b over the integers. Returns a solution vector, or a
 * NoSolutionCertificate whose witness is machine-checked before being
 * returned (kernel row: u*A == 0 and u*b != 0; divisibility: the forced
 * pivot coefficient is non-integral). Solutions are verified by
 * re-multiplication on every call.
 */
DiophantineResult solve_diophantine(const IntMatrix& a, const std::vector<Int>& b);

} // namespace cohomcheck

#endif
