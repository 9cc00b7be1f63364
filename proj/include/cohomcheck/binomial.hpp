#ifndef COHOMCHECK_BINOMIAL_HPP
#define COHOMCHECK_BINOMIAL_HPP

#include <string>
#include <vector>

#include "cohomcheck/polyring.hpp" // Int

namespace cohomcheck {

/**
 * Binomial coefficient C(n, k) by the multiplicative formula, exact.
 * Convention: C(n, k) = 0 when k < 0 or k > n. A negative upper index is
 * outside every use in this project and is rejected (OutOfRangeError).
 */
Int binom(long n, long k);

/**
 * Convention-extended binomial for summation sweeps: additionally maps a
 * negative upper index to 0. Such arguments only arise in summands that
 * are structurally zero (the lower index is then automatically out of
 * range), never as genuine values.
 */
Int binom_ext(long n, long k);

/// Deterministic trial-division primality test (inputs here are tiny).
bool is_prime(long n);

/// The first n primes, ascending.
std::vector<long> first_primes(std::size_t n);

/// v_p(C(n,k)) via Legendre's factorial valuation. Requires p prime and
/// 0 <= k <= n.
long padic_valuation_binom(long p, long n, long k);

/// Number of carries when adding a and b in base p (a, b >= 0). By
/// Kummer's theorem this equals padic_valuation_binom(p, a+b, a); the
/// tests cross-check the two routes.
long carry_count(long p, long a, long b);

// ---------------------------------------------------------------------------
// The divisibility family behind the integral certificates:
//   p | C(p^e - 1 + r, p^e - 1)  for 1 <= r <= p^e - 1.

struct DivisibilityFailure {
    long r;
    Int value;
};

struct DivisibilityFamilyReport {
    long p = 0;
    long e = 0;
    long q = 0; // p^e
    long checked = 0;
    std::vector<DivisibilityFailure> failures;
    bool passed() const { return failures.empty(); }
};

/// Check p | C(q-1+r, q-1) for every r in [1, q-1], both by direct
/// division and by positive p-adic valuation. Failures are reported, not
/// thrown.
DivisibilityFamilyReport verify_divisibility_family(long p, long e);

// ---------------------------------------------------------------------------
// Closed-form summation identities. Each evaluator computes the sum
// directly in exact arithmetic and independently evaluates the closed
// form; callers compare the two. Out-of-range parameters throw
// OutOfRangeError rather than guessing a value.

struct LemmaValue {
    Int lhs;
    Int rhs;
    bool holds() const { return lhs == rhs; }
};

/**
 * sum_{i=0}^{m} (-1)^i C(2k+1, s+i) C(k+i, k) C(k+m-i, k)
 *   = C(m+s-k-1, m) * C(2k+m+1, m+s)   when s > k
 *   = 0                                when k >= s >= k+1-m
 * Range: k, m >= 0 and s in one of the two cases above; s < k+1-m has no
 * stated value and is refused.
 */
LemmaValue eval_alternating_triple(long k, long s, long m);

/**
 * sum_{j=0}^{s} (-1)^j C(s, j) C(a+j, k) = (-1)^s C(a, k-s)
 * Range: s, a, k >= 0.
 */
LemmaValue eval_signed_transform(long s, long a, long k);

/**
 * sum_{i=0}^{s} C(k-i, k-s) C(k+i, k) C(k+m-i, m) = C(k+m-s, m) * C(2k+m+1, s)
 * Range: k, m >= 0 and 0 <= s <= k (beyond k the summand's first factor
 * has a negative upper index; refused).
 */
LemmaValue eval_positive_triple(long k, long s, long m);

/// Direct sums alone (no closed form), used when assembling coefficient
/// comparisons elsewhere. Same summation bounds as the evaluators but no
/// range restriction on s: out-of-support summands vanish by convention.
Int alternating_triple_sum(long k, long s, long m);
Int positive_triple_sum(long k, long s, long m);

// ---------------------------------------------------------------------------
// Certificate sweeps: the rational-certificate pairs (F, G) behind the
// three identities satisfy first-order relations that mechanically verify
// the closed forms. Each relation carries denominators; verification
// multiplies them out and checks the equality over Z at every integer
// point of a box, skipping exactly the points where a cleared denominator
// vanishes.

struct SweepFailure {
    std::string relation;
    std::vector<long> point;
};

struct CertificateSweep {
    std::string name;
    long points_checked = 0;
    long points_excluded = 0;
    std::vector<SweepFailure> failures;
    bool passed() const { return failures.empty(); }
};

/// Box: k <= k_max, s <= 2k+2, m <= k+2, i <= k+2, all >= 0.
CertificateSweep sweep_certificate_alternating_triple(long k_max);
/// Box: k <= k_max, a <= 2k+2, s <= 2k+2, j <= k+2, all >= 0.
CertificateSweep sweep_certificate_signed_transform(long k_max);
/// Box: k <= k_max, m <= k+2, s <= 2k+2, i <= k+2, all >= 0.
CertificateSweep sweep_certificate_positive_triple(long k_max);

} // namespace cohomcheck

#endif
