#pragma once

#include <string>
#include <utility>
#include <vector>

#include "cohomcheck/report.hpp"

namespace cohomcheck {

// Configuration for the verification suites. Defaults match the standard
// run: every knob is exact-arithmetic work, so the bounds trade time only.
struct RunConfig {
    std::string command = "all"; // hochster | identity | lemmas | torsion | all

    // Prime powers q = p^e for the determinantal certificates.
    std::vector<std::pair<long, long>> prime_powers = {
        {2, 1}, {2, 2}, {2, 3}, {3, 1}, {3, 2}, {5, 1}, {7, 1}};
    bool with_oracle = true; // cross-check memberships by linear solve

    long identity_k_max = 12; // expand-and-cancel bound
    long case_k_max = 8;      // coefficient-case bound (all m <= k)

    long lemma_k_max = 8;         // lemma evaluation and certificate sweeps
    long divisibility_q_max = 128; // q bound for the divisibility family

    std::vector<long> torsion_primes; // empty: first ten primes
    long torsion_k_max = 20;          // cofactor uniqueness sweep
    long oracle_p_max = 5;            // refutation oracle bounds
    long oracle_k_max = 3;

    bool force = false; // override the library size guards
};

VerificationReport run_hochster(const RunConfig& cfg);
VerificationReport run_identity(const RunConfig& cfg);
VerificationReport run_lemmas(const RunConfig& cfg);
VerificationReport run_torsion(const RunConfig& cfg);

/// Dispatch on cfg.command ("all" concatenates the four suites).
VerificationReport run(const RunConfig& cfg);

} // namespace cohomcheck
