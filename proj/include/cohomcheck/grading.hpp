#ifndef COHOMCHECK_GRADING_HPP
#define COHOMCHECK_GRADING_HPP

#include <array>
#include <cstdint>
#include <optional>
#include <vector>

#include "cohomcheck/polyring.hpp"

namespace cohomcheck {

/// A degree in the rank-4 grading lattice. Componentwise arithmetic only.
struct MultiDegree {
    std::array<std::int64_t, 4> d{0, 0, 0, 0};

    std::int64_t operator[](std::size_t i) const { return d.at(i); }
    bool operator==(const MultiDegree&) const = default;

    MultiDegree operator+(const MultiDegree& o) const;
    MultiDegree operator-(const MultiDegree& o) const;
    MultiDegree operator*(std::int64_t n) const;
    bool is_nonnegative() const;
};

std::string to_string(const MultiDegree& d);

/**
 * An N^4 grading on a polynomial ring: one weight vector per variable.
 * Monomial degrees are the weight sums; a polynomial is homogeneous when
 * all its monomials share one degree.
 */
class Grading {
public:
    Grading(VarContextPtr ctx, std::vector<MultiDegree> weights);

    const VarContextPtr& context() const { return ctx_; }
    const MultiDegree& weight(std::size_t var) const { return weights_.at(var); }

    /// Degree of a monomial. Laurent monomials (negative exponents) are
    /// rejected: the grading is defined on the polynomial ring only.
    MultiDegree degree_of_monomial(const Monomial& m) const;

    /// Common degree of all terms, or nullopt when terms disagree.
    /// Throws ZeroPolynomialError on the zero polynomial, whose degree
    /// is not defined.
    std::optional<MultiDegree> homogeneous_degree(const Polynomial& f) const;

    /**
     * All monomials of the given degree, in ascending lex order. The
     * search is a DFS over variables bounding each exponent by the
     * residual degree; it is exhaustive and terminates because no weight
     * vector may be zero (UnboundedSearchError otherwise). Monomials
     * divisible by `exclude`, when given, are dropped.
     */
    std::vector<Monomial> enumerate_monomials(
        const MultiDegree& degree,
        const std::optional<Monomial>& exclude = std::nullopt) const;

private:
    VarContextPtr ctx_;
    std::vector<MultiDegree> weights_;
};

/**
 * Preset on variables (u, v, w, x, y, z): the grading in which the 2x3
 * determinantal data is multihomogeneous. Weights:
 *   u (1,0,0,0)  v (0,1,0,0)  w (0,0,1,0)
 *   x (1,0,0,1)  y (0,1,0,1)  z (0,0,1,1)
 */
Grading det_grading(const VarContextPtr& ctx);

/**
 * Preset on variables (u, v, w, x, y, z): the grading in which the
 * hypersurface relation u*x + v*y + w*z is homogeneous of degree
 * (1,1,1,1). Weights:
 *   u (0,1,1,1)  v (1,0,1,1)  w (1,1,0,1)
 *   x (1,0,0,0)  y (0,1,0,0)  z (0,0,1,0)
 */
Grading hyp_grading(const VarContextPtr& ctx);

/// Shared plain context with variables (u, v, w, x, y, z), indices 0..5.
VarContextPtr uvwxyz_context();

} // namespace cohomcheck

#endif
