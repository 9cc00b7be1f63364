#include "cohomcheck/zlinalg.hpp"

#include <algorithm>
#include <stdexcept>

namespace cohomcheck {

IntMatrix::IntMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), a_(rows * cols) {}

IntMatrix IntMatrix::identity(std::size_t n) {
    IntMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
}

Int& IntMatrix::at(std::size_t i, std::size_t j) {
    if (i >= rows_ || j >= cols_) throw DimensionMismatchError("index out of range");
    return a_[i * cols_ + j];
}

const Int& IntMatrix::at(std::size_t i, std::size_t j) const {
    if (i >= rows_ || j >= cols_) throw DimensionMismatchError("index out of range");
    return a_[i * cols_ + j];
}

IntMatrix IntMatrix::transpose() const {
    IntMatrix t(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) t.at(j, i) = at(i, j);
    return t;
}

IntMatrix IntMatrix::operator*(const IntMatrix& o) const {
    if (cols_ != o.rows_) throw DimensionMismatchError("matrix product shape mismatch");
    IntMatrix r(rows_, o.cols_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t k = 0; k < cols_; ++k) {
            const Int& aik = at(i, k);
            if (aik == 0) continue;
            for (std::size_t j = 0; j < o.cols_; ++j) r.at(i, j) += aik * o.at(k, j);
        }
    return r;
}

std::vector<Int> IntMatrix::operator*(const std::vector<Int>& v) const {
    if (v.size() != cols_) throw DimensionMismatchError("matrix-vector shape mismatch");
    std::vector<Int> r(rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j)
            if (at(i, j) != 0) r[i] += at(i, j) * v[j];
    return r;
}

void IntMatrix::swap_rows(std::size_t i, std::size_t j) {
    if (i == j) return;
    for (std::size_t c = 0; c < cols_; ++c) std::swap(at(i, c), at(j, c));
}

namespace {

// row_i -= q * row_r, applied to H and U in lockstep so H = U*A stays true.
void row_axpy(IntMatrix& h, IntMatrix& u, std::size_t i, std::size_t r, const Int& q) {
    if (q == 0) return;
    for (std::size_t c = 0; c < h.cols(); ++c) h.at(i, c) -= q * h.at(r, c);
    for (std::size_t c = 0; c < u.cols(); ++c) u.at(i, c) -= q * u.at(r, c);
}

void negate_row(IntMatrix& h, IntMatrix& u, std::size_t i) {
    for (std::size_t c = 0; c < h.cols(); ++c) h.at(i, c) = -h.at(i, c);
    for (std::size_t c = 0; c < u.cols(); ++c) u.at(i, c) = -u.at(i, c);
}

Int floor_div(const Int& a, const Int& b) {
    Int q;
    mpz_fdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return q;
}

} // namespace

HnfResult hnf(const IntMatrix& a) {
    const std::size_t m = a.rows(), n = a.cols();
    IntMatrix h = a;
    IntMatrix u = IntMatrix::identity(m);
    std::vector<std::size_t> pivot_cols;
    std::size_t r = 0;

    for (std::size_t c = 0; c < n && r < m; ++c) {
        // Euclidean elimination below row r in column c: repeatedly move the
        // minimal-magnitude nonzero entry into the pivot slot and reduce the
        // others by it. Terminates because the pivot magnitude strictly
        // decreases between rounds.
        while (true) {
            std::size_t piv = m;
            for (std::size_t i = r; i < m; ++i) {
                if (h.at(i, c) == 0) continue;
                if (piv == m || cmp(abs(h.at(i, c)), abs(h.at(piv, c))) < 0) piv = i;
            }
            if (piv == m) break; // column is clear below r
            h.swap_rows(r, piv);
            u.swap_rows(r, piv);
            bool clean = true;
            for (std::size_t i = r + 1; i < m; ++i) {
                if (h.at(i, c) == 0) continue;
                Int q = Int(h.at(i, c) / h.at(r, c)); // truncated: |remainder| < |pivot|
                row_axpy(h, u, i, r, q);
                if (h.at(i, c) != 0) clean = false;
            }
            if (clean) break;
        }
        if (h.at(r, c) == 0) continue; // no pivot in this column

        if (h.at(r, c) < 0) negate_row(h, u, r);
        // entries above the pivot land in [0, pivot)
        for (std::size_t i = 0; i < r; ++i)
            row_axpy(h, u, i, r, floor_div(h.at(i, c), h.at(r, c)));
        pivot_cols.push_back(c);
        ++r;
    }
    return HnfResult{std::move(h), std::move(u), r, std::move(pivot_cols)};
}

Int determinant(const IntMatrix& a) {
    if (a.rows() != a.cols()) throw DimensionMismatchError("determinant of non-square matrix");
    const std::size_t n = a.rows();
    if (n == 0) return 1;
    IntMatrix b = a;
    int sign = 1;
    Int prev = 1;
    // Bareiss fraction-free elimination: every division below is exact.
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (b.at(k, k) == 0) {
            std::size_t s = k + 1;
            while (s < n && b.at(s, k) == 0) ++s;
            if (s == n) return 0;
            b.swap_rows(k, s);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i)
            for (std::size_t j = k + 1; j < n; ++j) {
                Int num = b.at(i, j) * b.at(k, k) - b.at(i, k) * b.at(k, j);
                mpz_divexact(b.at(i, j).get_mpz_t(), num.get_mpz_t(), prev.get_mpz_t());
            }
        prev = b.at(k, k);
    }
    return sign * b.at(n - 1, n - 1);
}

std::string NoSolutionCertificate::describe() const {
    if (std::holds_alternative<KernelWitness>(witness)) {
        const auto& k = std::get<KernelWitness>(witness);
        std::string s = "kernel row u with u*A = 0, u*b != 0; u = [";
        for (std::size_t i = 0; i < k.u.size(); ++i) {
            if (i) s += ", ";
            s += k.u[i].get_str();
        }
        return s + "]";
    }
    const auto& d = std::get<DivisibilityWitness>(witness);
    return "pivot non-divisibility at lattice row " + std::to_string(d.pivot_row) +
           ", coordinate " + std::to_string(d.pivot_col) + ": forced coefficient " +
           d.value.get_str() + "/" + d.pivot.get_str() + " is not an integer";
}

DiophantineResult solve_diophantine(const IntMatrix& a, const std::vector<Int>& b) {
    const std::size_t m = a.rows(), n = a.cols();
    if (b.size() != m) throw DimensionMismatchError("rhs length does not match rows");

    // b must be an integer combination of the columns of A. The rows of
    // H = U * A^T generate that column lattice; reduce b greedily against
    // the pivots. The pivot structure forces each coefficient uniquely, so
    // a failed division or a nonzero residue is a genuine refutation.
    const HnfResult lattice = hnf(a.transpose());
    std::vector<Int> residue = b;
    std::vector<Int> t(lattice.rank);
    for (std::size_t j = 0; j < lattice.rank; ++j) {
        const std::size_t c = lattice.pivot_cols[j];
        const Int& piv = lattice.h.at(j, c);
        if (!mpz_divisible_p(residue[c].get_mpz_t(), piv.get_mpz_t()))
            return NoSolutionCertificate{DivisibilityWitness{j, c, piv, residue[c]}};
        Int q;
        mpz_divexact(q.get_mpz_t(), residue[c].get_mpz_t(), piv.get_mpz_t());
        if (q != 0)
            for (std::size_t cc = 0; cc < m; ++cc) residue[cc] -= q * lattice.h.at(j, cc);
        t[j] = std::move(q);
    }

    const bool clear = std::all_of(residue.begin(), residue.end(),
                                   [](const Int& x) { return x == 0; });
    if (clear) {
        // b = sum_j t_j H[j] = sum_j t_j (U A^T)[j], hence x = U^T t solves A x = b.
        std::vector<Int> x(n);
        for (std::size_t j = 0; j < lattice.rank; ++j) {
            if (t[j] == 0) continue;
            for (std::size_t i = 0; i < n; ++i) x[i] += t[j] * lattice.u.at(j, i);
        }
        if (a * x != b)
            throw std::logic_error("diophantine solver produced an invalid solution");
        return x;
    }

    // All forced coefficients were integral yet something is left over, so b
    // is outside the rational column span and a left-kernel row of A must
    // separate it. Verify the witness before handing it out.
    const HnfResult rowform = hnf(a);
    for (std::size_t j = rowform.rank; j < m; ++j) {
        Int dot = 0;
        for (std::size_t i = 0; i < m; ++i) dot += rowform.u.at(j, i) * b[i];
        if (dot == 0) continue;
        std::vector<Int> u(m);
        for (std::size_t i = 0; i < m; ++i) u[i] = rowform.u.at(j, i);
        for (std::size_t cc = 0; cc < n; ++cc) {
            Int s = 0;
            for (std::size_t i = 0; i < m; ++i) s += u[i] * a.at(i, cc);
            if (s != 0) throw std::logic_error("kernel witness fails u*A = 0");
        }
        return NoSolutionCertificate{KernelWitness{std::move(u)}};
    }
    throw std::logic_error("inconsistent system without kernel witness");
}

} // namespace cohomcheck
