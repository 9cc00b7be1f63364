#pragma once

#include <string>
#include <variant>
#include <vector>

#include "cohomcheck/grading.hpp"
#include "cohomcheck/polyring.hpp"
#include "cohomcheck/zlinalg.hpp"

namespace cohomcheck {

// Hypersurface side of the workbench: the quotient ring
//   R = Z[u,v,w,x,y,z] / (u x + v y + w z).
// Classes are handled through canonical normal forms: w z rewrites to
// -(u x) - (v y), so a normal form contains no monomial divisible by w*z,
// and two polynomials represent the same class exactly when their normal
// forms are equal. The headline computation: for every prime p the class
//   lambda = ((u x)^p + (v y)^p + (w z)^p) / p
// satisfies p * lambda in (x^p, y^p, z^p) R, yet lambda (x y z)^k stays
// outside (x^(p+k), y^(p+k), z^(p+k)) R, with an exact linear-algebra
// refutation certificate over the relevant graded piece.

/// Canonical representative: every w z is rewritten away. One pass per term.
Polynomial normal_form(const Polynomial& f);
bool is_normal_form(const Polynomial& f);

/// Product in the quotient ring: multiply, then reduce.
Polynomial hyp_mul(const Polynomial& a, const Polynomial& b);

/// ((u x)^p + (v y)^p + (w z)^p) / p as a normal form; exact for prime p.
Polynomial torsion_lambda(long p);

// Size guards; force overrides (the bounds keep default runs quick, they are
// not mathematical limits).
inline constexpr long kMaxTorsionK = 20;
inline constexpr long kMaxTorsionOracleP = 7;
inline constexpr long kMaxTorsionOracleK = 5;

struct AnnihilationCheck {
    long p = 0;
    bool lambda_normal = false; // construction produced a normal form
    bool product_ok = false;    // p*lambda == u^p x^p + v^p y^p + w^p z^p in R
    bool all_ok() const { return lambda_normal && product_ok; }
};

/// p * lambda lies in (x^p, y^p, z^p) R with explicit cofactors u^p, v^p, w^p.
AnnihilationCheck verify_p_annihilation(long p);

struct CofactorSupportReport {
    long p = 0;
    long k = 0;
    // In a homogeneous membership lambda (x y z)^k = c1 x^(p+k) + ..., each
    // cofactor degree admits exactly one normal-form monomial:
    //   c1: u^p y^k z^k,   c2: v^p x^k z^k,   c3: w^p x^k y^k.
    bool unique1 = false;
    bool unique2 = false;
    bool unique3 = false;
    // u^p y^k z^k * x^(p+k) == (x y z)^k * (u x)^p, the monomial identity
    // that turns the forced cofactors back into multiples of (u x)^p.
    bool shift_identity_ok = false;
    std::string witness;

    bool all_ok() const {
        return unique1 && unique2 && unique3 && shift_identity_ok;
    }
};

CofactorSupportReport cofactor_support(long p, long k, bool force = false);

struct SpecializationReport {
    long p = 0;
    bool substitution_matches = false; // u,v,w -> 1, z -> -x-y lands on the
                                       // closed two-variable form
    bool coefficient_ok = false;       // coefficient of x^(p-1) y is (-1)^p
    bool nonmember_ok = false;         // hence not in (p, x^p, y^p) Z[x,y]
    std::string witness;               // the blocking monomial

    bool all_ok() const {
        return substitution_matches && coefficient_ok && nonmember_ok;
    }
};

/**
 * Specialize u, v, w -> 1 (so z -> -x-y) and check that the image of lambda,
 *   (x^p + y^p + (-1)^p (x+y)^p) / p,
 * is not in (p, x^p, y^p) Z[x,y]: membership there holds exactly when every
 * monomial x^a y^b with a < p and b < p has coefficient divisible by p, and
 * x^(p-1) y has coefficient (-1)^p.
 */
SpecializationReport specialization_nonvanishing(long p);

/**
 * Membership test in R for homogeneous normal forms: is `target_nf` an
 * R-linear combination of `gens_nf`? Solved exactly over the graded piece:
 * cofactor candidates are the normal-form monomials of the forced degree,
 * and the integer system either yields cofactors (returned, re-verified) or
 * a machine-checked refutation certificate.
 */
std::variant<std::vector<Polynomial>, NoSolutionCertificate>
hyp_graded_membership(const Polynomial& target_nf,
                      const std::vector<Polynomial>& gens_nf);

struct TorsionRefutation {
    long p = 0;
    long k = 0;
    bool refuted = false;    // expected outcome: the membership fails
    std::string certificate; // solver witness description
    std::string witness;     // set when a solution unexpectedly exists
};

/// Asks hyp_graded_membership whether lambda (x y z)^k lies in
/// (x^(p+k), y^(p+k), z^(p+k)) R; the expected answer is no.
TorsionRefutation membership_refutation_oracle(long p, long k, bool force = false);

} // namespace cohomcheck
