#pragma once

#include <string>
#include <variant>

#include "cohomcheck/grading.hpp"
#include "cohomcheck/polyring.hpp"
#include "cohomcheck/zlinalg.hpp"

namespace cohomcheck {

// The determinantal side of the workbench: Z[u,v,w,x,y,z] carries the 2x3
// matrix with rows (u, v, w) and (x, y, z), whose 2x2 minors are
//   d1 = v z - w y,   d2 = w x - u z,   d3 = u y - v x.
// For a prime power q = p^e the element
//   lambda_q = ((u d1)^q + (v d2)^q + (w d3)^q) / p
// is an exact integer polynomial, and the membership
//   lambda_q (d1 d2 d3)^k  in  (d1^(q+k), d2^(q+k), d3^(q+k))      with k = q-1
// is certified by explicit cofactors and cross-checked by an integer linear
// solve over the graded piece that such cofactors must occupy.

struct DeterminantalData {
    VarContextPtr ctx; // u, v, w, x, y, z at indices 0..5
    Polynomial d1;
    Polynomial d2;
    Polynomial d3;
};

DeterminantalData determinantal_data();

struct SyzygyCheck {
    bool top_row_ok = false;      // u d1 + v d2 + w d3 == 0
    bool bottom_row_ok = false;   // x d1 + y d2 + z d3 == 0
    bool partial_nonzero = false; // u d1 + v d2 != 0: the relations are not an
                                  // artifact of the minors collapsing
    bool all_ok() const { return top_row_ok && bottom_row_ok && partial_nonzero; }
};

SyzygyCheck syzygy_check();

/// Exact integer polynomial ((u d1)^q + (v d2)^q + (w d3)^q) / p, q = p^e.
Polynomial lambda_q(long p, long e);

// Construction beyond these sizes is refused without force; the bound keeps
// default runs at desk scale rather than marking a mathematical limit.
inline constexpr long kMaxCertificateQ = 16;
inline constexpr long kMaxOracleQ = 9;

/**
 * The six-variable membership target equals the three-variable target pushed
 * through the Laurent substitution A = z/w - x/u, B = x/u - y/v, T = -x/u
 * and cleared by (u v w)^(q+2k):
 *   lambda_q (d1 d2 d3)^k == (u v w)^(q+2k) *
 *       image of (1/p)((A+B)^q + (-A)^q + (-B)^q) ((A+B) A B)^k.
 */
struct BridgeCheck {
    long p = 0;
    long e = 0;
    long q = 0;
    long k = 0;
    bool equal = false;
};

BridgeCheck bridge_to_three_vars(long p, long e, bool force = false);

struct MembershipCertificate {
    long p = 0;
    long e = 0;
    long q = 0;
    long k = 0;
    Polynomial c1;
    Polynomial c2;
    Polynomial c3;
    bool residual_zero = false;  // lambda_q (d1 d2 d3)^k - sum c_i d_i^(q+k) == 0
    bool homogeneous_ok = false; // deg c1 = (q+2k, k, k, 2k) and its rotations
    bool support_ok = false;     // c_i supported on its bracket-family monomials
    std::string witness;

    bool all_ok() const { return residual_zero && homogeneous_ok && support_ok; }
};

/**
 * Build the cofactors from the divided three-variable decomposition, clear
 * denominators, and verify residual, homogeneity and support. Everything is
 * exact; a false flag means the construction genuinely failed.
 */
MembershipCertificate build_and_verify_certificate(long p, long e, bool force = false);

/**
 * Independent route: solve the membership as an integer linear system over
 * all candidate cofactor monomials of the forced multidegrees. Returns a
 * verified certificate, or the solver's refutation certificate if the
 * membership were to fail.
 */
std::variant<MembershipCertificate, NoSolutionCertificate>
oracle_membership(long p, long e, bool force = false);

} // namespace cohomcheck
