#pragma once

#include <functional>
#include <string>
#include <vector>

#include "cohomcheck/polyring.hpp"

namespace cohomcheck {

// Everything in this header lives in the three-variable ring Z[A,B,T].
// The central object is the equational identity
//
//   (A+B)^(2k+1) * sum_{n=0}^k C(k,n) T^n
//       sum_{i=0}^n (-1)^(k+i) A^(k-i) B^(k-n+i) C(k+i,k) C(k+n-i,k)
//   - A^(2k+1) * sum_{n=0}^k C(k,n) (-1)^n (T+B)^n
//       sum_{i=0}^n (A+B)^(k-i) B^(k-n+i) C(k+i,k) C(k+n-i,k)
//   - B^(2k+1) * sum_{n=0}^k C(k,n) (T-A)^n
//       sum_{i=0}^n (A+B)^(k-i) A^(k-n+i) C(k+i,k) C(k+n-i,k)  =  0,
//
// valid for every integer k >= 0.  Expanding it and checking for the zero
// polynomial is one verification route; verify_coefficient_cases replays the
// coefficient-by-coefficient argument that proves it.

// Shared context with variables A, B, T (indices 0, 1, 2).
VarContextPtr abt_context();

// Injectable binomial coefficient, used by negative-control tests to confirm
// that a perturbed C(k+i,k) breaks the identity.
using BinomFn = std::function<Int(long, long)>;

// The three expanded sums; the identity asserts s1 - s2 - s3 == 0.
struct IdentitySummands {
    Polynomial s1;
    Polynomial s2;
    Polynomial s3;
};

IdentitySummands build_identity_summands(long k, const BinomFn& binomial);
IdentitySummands build_identity_summands(long k);

// s1 - s2 - s3, fully expanded.
Polynomial build_identity_lhs(long k, const BinomFn& binomial);
Polynomial build_identity_lhs(long k);

struct IdentityCheck {
    long k = 0;
    bool zero = false;
    // Leading term of the residual when nonzero, empty otherwise.
    std::string witness;
};

IdentityCheck verify_identity(long k);
IdentityCheck verify_identity(long k, const BinomFn& binomial);

// Replays the proof of the identity for the T^m coefficient:
//  1. extract the T^m part of each expanded sum and match it against the
//     collected single-sum displays,
//  2. divide out the common factor C(k,m) * (AB)^(k-m) (which exists by the
//     product identity C(k,m) C(k-m,n-m) = C(k,n) C(n,m)), leaving a
//     homogeneous polynomial R_m of degree 2k+m+1 in A and B,
//  3. check every coefficient of R_m against the closed forms coming from
//     the three binomial lemmas, in three bands that cover all of R_m:
//     A-exponent in [k+1, k+m] (plain vanishing), [k+m+1, 2k+m+1] (two
//     lemma evaluations that cancel), and [0, k] (mirror symmetry
//     R_m(B,A) = (-1)^m R_m(A,B)).
struct CoefficientCaseReport {
    long k = 0;
    long m = 0;
    bool extraction_ok = false;     // step 1
    bool product_identity_ok = false;
    bool division_ok = false;       // step 2
    bool homogeneous_ok = false;    // R_m homogeneous of degree 2k+m+1
    bool vanishing_band_ok = false; // A-exponent k+1 .. k+m
    bool lemma_band_ok = false;     // A-exponent k+m+1 .. 2k+m+1
    bool mirror_ok = false;         // A-exponent 0 .. k via symmetry
    bool reduced_zero = false;      // R_m == 0, checked directly as well
    long coefficients_checked = 0;
    std::string witness;

    bool all_ok() const {
        return extraction_ok && product_identity_ok && division_ok &&
               homogeneous_ok && vanishing_band_ok && lemma_band_ok &&
               mirror_ok && reduced_zero;
    }
};

CoefficientCaseReport verify_coefficient_cases(long k, long m);

// Dividing the k = q-1 instance of the identity by the prime p:  the n = 0
// terms assemble into
//
//   D = (1/p) ((-1)^k (A+B)^(k+1) - A^(k+1) - B^(k+1)) * (A B (A+B))^k
//
// and the n >= 1 terms, whose coefficients C(k,n) C(k+i,k) C(k+n-i,k) are all
// divisible by p when k = p^e - 1, divide into three sums S1, S2, S3 with
//
//   D = -(A+B)^(2k+1) S1 + A^(2k+1) S2 + B^(2k+1) S3.
struct ModPDecomposition {
    long p = 0;
    long e = 0; // exponent with k = p^e - 1, or -1 when k is not of that form
    long q = 0; // k + 1
    long k = 0;
    Polynomial s1;
    Polynomial s2;
    Polynomial s3;
    Polynomial target; // D, exact over Z
};

// Attempts the division for any k >= 1.  The interior coefficients are all
// multiples of p exactly when k = p^e - 1; otherwise this throws
// NotDivisibleError naming the first offending (n, i) and its coefficient.
// The assembled decomposition is checked before returning.
ModPDecomposition mod_p_decomposition_for_k(long p, long k);
ModPDecomposition build_mod_p_decomposition(long p, long e);

// Checks that S1, S2, S3 land in the monomial families that the determinantal
// substitution needs:
//   S1 inside the span of  T^i A^(k-i) * T^j B^(k-j),   0 <= i, j <= k,
//   S2 inside the span of  T^i B^(k-i) * (T+B)^j (A+B)^(k-j),
//   S3 inside the span of  T^i A^(k-i) * (T-A)^j (A+B)^(k-j).
// For S1 the family elements are single monomials, so the check is a direct
// support predicate; for S2 and S3 it is an exact integer linear solve whose
// refutation certificate, if any, is reported in the witness.
struct FamilySupportReport {
    long p = 0;
    long e = 0;
    long k = 0;
    bool s1_ok = false;
    bool s2_ok = false;
    bool s3_ok = false;
    std::string witness;

    bool all_ok() const { return s1_ok && s2_ok && s3_ok; }
};

FamilySupportReport verify_family_support(long p, long e);

} // namespace cohomcheck
