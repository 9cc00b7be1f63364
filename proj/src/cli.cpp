#include "cohomcheck/cli.hpp"

#include <algorithm>
#include <chrono>
#include <functional>
#include <sstream>

#include "cohomcheck/binomial.hpp"
#include "cohomcheck/errors.hpp"
#include "cohomcheck/grading.hpp"
#include "cohomcheck/hochster.hpp"
#include "cohomcheck/identity.hpp"
#include "cohomcheck/torsion.hpp"

namespace cohomcheck {

namespace {

struct Outcome {
    Status status = Status::kFail;
    std::string witness;
};

// Run one check, catching library errors into an honest failure row.
ReportRow timed_row(const std::string& claim,
                    const std::function<Outcome()>& body) {
    auto start = std::chrono::steady_clock::now();
    Outcome out;
    try {
        out = body();
    } catch (const Error& err) {
        out.status = Status::kFail;
        out.witness = std::string("error: ") + err.what();
    }
    auto stop = std::chrono::steady_clock::now();
    double millis =
        std::chrono::duration<double, std::milli>(stop - start).count();
    return make_row(claim, out.status, std::move(out.witness), millis);
}

std::string pe_list(const std::vector<std::pair<long, long>>& pes) {
    std::ostringstream out;
    for (std::size_t i = 0; i < pes.size(); ++i) {
        if (i) out << ",";
        out << pes[i].first << "^" << pes[i].second;
    }
    return out.str();
}

std::string long_list(const std::vector<long>& xs) {
    std::ostringstream out;
    for (std::size_t i = 0; i < xs.size(); ++i) {
        if (i) out << ",";
        out << xs[i];
    }
    return out.str();
}

std::vector<long> torsion_primes_of(const RunConfig& cfg) {
    if (!cfg.torsion_primes.empty()) return cfg.torsion_primes;
    return first_primes(10);
}

Outcome pass_or_fail(bool ok, std::string witness) {
    return Outcome{ok ? Status::kPass : Status::kFail, std::move(witness)};
}

} // namespace

VerificationReport run_hochster(const RunConfig& cfg) {
    VerificationReport rep;
    rep.command = "verify hochster";
    rep.parameters = {{"prime_powers", pe_list(cfg.prime_powers)},
                      {"with_oracle", cfg.with_oracle ? "true" : "false"},
                      {"force", cfg.force ? "true" : "false"}};

    rep.rows.push_back(timed_row("determinantal.syzygies", [] {
        SyzygyCheck c = syzygy_check();
        return pass_or_fail(c.all_ok(), c.all_ok() ? "" : "a syzygy row failed");
    }));

    for (const auto& [p, e] : cfg.prime_powers) {
        std::ostringstream tag;
        tag << "p=" << p << " e=" << e;
        const std::string at = tag.str();

        rep.rows.push_back(timed_row("determinantal.lambda", [&, p = p, e = e] {
            Polynomial lam = lambda_q(p, e);
            long q = 1;
            for (long i = 0; i < e; ++i) q *= p;
            auto deg = det_grading(lam.context()).homogeneous_degree(lam);
            bool ok = deg.has_value() && *deg == MultiDegree{q, q, q, q};
            std::ostringstream w;
            w << at << ": " << lam.term_count() << " terms";
            return pass_or_fail(ok, w.str());
        }));

        rep.rows.push_back(timed_row("determinantal.bridge", [&, p = p, e = e] {
            BridgeCheck c = bridge_to_three_vars(p, e, cfg.force);
            return pass_or_fail(c.equal, at);
        }));

        rep.rows.push_back(timed_row("identity.decomposition", [&, p = p, e = e] {
            ModPDecomposition dec = build_mod_p_decomposition(p, e);
            std::ostringstream w;
            w << at << ": S1/S2/S3 have " << dec.s1.term_count() << "/"
              << dec.s2.term_count() << "/" << dec.s3.term_count() << " terms";
            return pass_or_fail(true, w.str());
        }));

        rep.rows.push_back(timed_row("identity.family_support", [&, p = p, e = e] {
            FamilySupportReport r = verify_family_support(p, e);
            return pass_or_fail(r.all_ok(), r.all_ok() ? at : at + ": " + r.witness);
        }));

        rep.rows.push_back(timed_row("determinantal.certificate", [&, p = p, e = e] {
            MembershipCertificate cert = build_and_verify_certificate(p, e, cfg.force);
            std::ostringstream w;
            w << at << ": cofactor term counts " << cert.c1.term_count() << "/"
              << cert.c2.term_count() << "/" << cert.c3.term_count()
              << ", fingerprint "
              << hex64(fnv1a64(to_string(cert.c1) + "|" + to_string(cert.c2) +
                               "|" + to_string(cert.c3)));
            return pass_or_fail(cert.all_ok(),
                                cert.all_ok() ? w.str() : at + ": " + cert.witness);
        }));

        rep.rows.push_back(timed_row("determinantal.oracle", [&, p = p, e = e] {
            long q = 1;
            for (long i = 0; i < e; ++i) q *= p;
            if (!cfg.with_oracle)
                return Outcome{Status::kSkipped, at + ": oracle disabled"};
            if (q > kMaxOracleQ && !cfg.force)
                return Outcome{Status::kSkipped, at + ": q beyond oracle bound"};
            auto res = oracle_membership(p, e, cfg.force);
            if (auto* cert = std::get_if<MembershipCertificate>(&res)) {
                std::ostringstream w;
                w << at << ": solver cofactor term counts "
                  << cert->c1.term_count() << "/" << cert->c2.term_count()
                  << "/" << cert->c3.term_count();
                return pass_or_fail(cert->residual_zero && cert->homogeneous_ok &&
                                        cert->support_ok,
                                    w.str());
            }
            return Outcome{Status::kFail,
                           at + ": solver refuted the membership: " +
                               std::get<NoSolutionCertificate>(res).describe()};
        }));
    }
    return rep;
}

VerificationReport run_identity(const RunConfig& cfg) {
    VerificationReport rep;
    rep.command = "verify identity";
    rep.parameters = {{"identity_k_max", std::to_string(cfg.identity_k_max)},
                      {"case_k_max", std::to_string(cfg.case_k_max)}};

    for (long k = 0; k <= cfg.identity_k_max; ++k) {
        rep.rows.push_back(timed_row("identity.zero", [k] {
            IdentityCheck c = verify_identity(k);
            std::ostringstream w;
            w << "k=" << k;
            if (!c.zero) w << ": " << c.witness;
            return pass_or_fail(c.zero, w.str());
        }));
    }
    for (long k = 0; k <= cfg.case_k_max; ++k) {
        rep.rows.push_back(timed_row("identity.cases", [k] {
            long coeffs = 0;
            for (long m = 0; m <= k; ++m) {
                CoefficientCaseReport r = verify_coefficient_cases(k, m);
                coeffs += r.coefficients_checked;
                if (!r.all_ok())
                    return pass_or_fail(false, "k=" + std::to_string(k) + " m=" +
                                                   std::to_string(m) + ": " +
                                                   r.witness);
            }
            std::ostringstream w;
            w << "k=" << k << ": all m, " << coeffs << " coefficients";
            return pass_or_fail(true, w.str());
        }));
    }
    return rep;
}

VerificationReport run_lemmas(const RunConfig& cfg) {
    VerificationReport rep;
    rep.command = "verify lemmas";
    rep.parameters = {
        {"lemma_k_max", std::to_string(cfg.lemma_k_max)},
        {"divisibility_q_max", std::to_string(cfg.divisibility_q_max)}};
    const long kmax = cfg.lemma_k_max;

    for (long p : {2L, 3L, 5L, 7L}) {
        rep.rows.push_back(timed_row("binomial.divisibility", [&, p] {
            std::ostringstream w;
            w << "p=" << p << ", q in {";
            bool first = true;
            long q = p;
            for (long e = 1; q <= cfg.divisibility_q_max; ++e, q *= p) {
                DivisibilityFamilyReport r = verify_divisibility_family(p, e);
                if (!r.passed())
                    return pass_or_fail(false, "failed at q=" + std::to_string(q));
                if (!first) w << ",";
                w << q;
                first = false;
            }
            w << "}";
            return pass_or_fail(true, w.str());
        }));
    }

    rep.rows.push_back(timed_row("lemma.alternating_triple", [kmax] {
        long points = 0;
        for (long k = 0; k <= kmax; ++k)
            for (long m = 0; m <= k; ++m)
                for (long s = std::max(0L, k + 1 - m); s <= 2 * k + 2; ++s) {
                    if (!eval_alternating_triple(k, s, m).holds())
                        return pass_or_fail(false, "failed at k=" + std::to_string(k) +
                                                       " s=" + std::to_string(s) +
                                                       " m=" + std::to_string(m));
                    ++points;
                }
        return pass_or_fail(true, std::to_string(points) + " points");
    }));

    rep.rows.push_back(timed_row("lemma.signed_transform", [kmax] {
        long points = 0;
        for (long k = 0; k <= kmax; ++k)
            for (long s = 0; s <= k; ++s)
                for (long a = 0; a <= 2 * k; ++a) {
                    if (!eval_signed_transform(s, a, k).holds())
                        return pass_or_fail(false, "failed at s=" + std::to_string(s) +
                                                       " a=" + std::to_string(a) +
                                                       " k=" + std::to_string(k));
                    ++points;
                }
        return pass_or_fail(true, std::to_string(points) + " points");
    }));

    rep.rows.push_back(timed_row("lemma.positive_triple", [kmax] {
        long points = 0;
        for (long k = 0; k <= kmax; ++k)
            for (long m = 0; m <= k; ++m)
                for (long s = 0; s <= k; ++s) {
                    if (!eval_positive_triple(k, s, m).holds())
                        return pass_or_fail(false, "failed at k=" + std::to_string(k) +
                                                       " s=" + std::to_string(s) +
                                                       " m=" + std::to_string(m));
                    ++points;
                }
        return pass_or_fail(true, std::to_string(points) + " points");
    }));

    struct SweepSpec {
        const char* claim;
        CertificateSweep (*fn)(long);
    };
    const SweepSpec sweeps[] = {
        {"certpair.alternating_triple", sweep_certificate_alternating_triple},
        {"certpair.signed_transform", sweep_certificate_signed_transform},
        {"certpair.positive_triple", sweep_certificate_positive_triple},
    };
    for (const auto& spec : sweeps) {
        rep.rows.push_back(timed_row(spec.claim, [&spec, kmax] {
            CertificateSweep s = spec.fn(kmax);
            std::ostringstream w;
            w << s.points_checked << " points checked, " << s.points_excluded
              << " excluded at denominator zeros";
            if (!s.passed())
                return pass_or_fail(false, s.failures.front().relation + " failed");
            return pass_or_fail(true, w.str());
        }));
    }
    return rep;
}

VerificationReport run_torsion(const RunConfig& cfg) {
    VerificationReport rep;
    rep.command = "verify torsion";
    const std::vector<long> primes = torsion_primes_of(cfg);
    rep.parameters = {{"primes", long_list(primes)},
                      {"torsion_k_max", std::to_string(cfg.torsion_k_max)},
                      {"oracle_p_max", std::to_string(cfg.oracle_p_max)},
                      {"oracle_k_max", std::to_string(cfg.oracle_k_max)},
                      {"force", cfg.force ? "true" : "false"}};

    rep.rows.push_back(timed_row("torsion.annihilation", [&] {
        for (long p : primes) {
            AnnihilationCheck c = verify_p_annihilation(p);
            if (!c.all_ok())
                return pass_or_fail(false, "failed at p=" + std::to_string(p));
        }
        return pass_or_fail(true, "p in {" + long_list(primes) + "}");
    }));

    rep.rows.push_back(timed_row("torsion.cofactors", [&] {
        for (long p : primes)
            for (long k = 0; k <= cfg.torsion_k_max; ++k) {
                CofactorSupportReport r = cofactor_support(p, k, cfg.force);
                if (!r.all_ok())
                    return pass_or_fail(false, "failed at p=" + std::to_string(p) +
                                                   " k=" + std::to_string(k) + ": " +
                                                   r.witness);
            }
        return pass_or_fail(true, "all p, k <= " + std::to_string(cfg.torsion_k_max));
    }));

    rep.rows.push_back(timed_row("torsion.specialization", [&] {
        std::string last;
        for (long p : primes) {
            SpecializationReport r = specialization_nonvanishing(p);
            if (!r.all_ok())
                return pass_or_fail(false, "failed at p=" + std::to_string(p));
            last = r.witness;
        }
        return pass_or_fail(true, "p in {" + long_list(primes) +
                                      "}, last blocking term " + last);
    }));

    rep.rows.push_back(timed_row("torsion.refutation", [&] {
        long runs = 0;
        std::string last;
        for (long p : primes) {
            if (p > cfg.oracle_p_max) continue;
            for (long k = 0; k <= cfg.oracle_k_max; ++k) {
                TorsionRefutation r = membership_refutation_oracle(p, k, cfg.force);
                if (!r.refuted)
                    return pass_or_fail(false, "membership held at p=" +
                                                   std::to_string(p) + " k=" +
                                                   std::to_string(k) + ": " +
                                                   r.witness);
                last = r.certificate;
                ++runs;
            }
        }
        return Outcome{Status::kRefuted,
                       std::to_string(runs) + " memberships refuted; last: " + last};
    }));

    rep.rows.push_back(timed_row("torsion.control", [&] {
        auto ctx = uvwxyz_context();
        long runs = 0;
        for (long p : primes) {
            if (p > cfg.oracle_p_max) continue;
            for (long k = 0; k <= cfg.oracle_k_max; ++k) {
                std::vector<std::int32_t> texp{0, 0, 0,
                                               static_cast<std::int32_t>(p + 2 * k),
                                               static_cast<std::int32_t>(k),
                                               static_cast<std::int32_t>(k)};
                Polynomial target = Polynomial::term(ctx, Monomial(texp), Int(1));
                std::vector<Polynomial> gens;
                for (std::size_t v = 3; v < 6; ++v)
                    gens.push_back(Polynomial::term(
                        ctx, Monomial::var(6, v, static_cast<std::int32_t>(p + k)),
                        Int(1)));
                auto res = hyp_graded_membership(target, gens);
                if (!std::holds_alternative<std::vector<Polynomial>>(res))
                    return pass_or_fail(false, "control not recovered at p=" +
                                                   std::to_string(p) + " k=" +
                                                   std::to_string(k));
                ++runs;
            }
        }
        return pass_or_fail(true, std::to_string(runs) + " plants recovered");
    }));
    return rep;
}

VerificationReport run(const RunConfig& cfg) {
    if (cfg.command == "hochster") return run_hochster(cfg);
    if (cfg.command == "identity") return run_identity(cfg);
    if (cfg.command == "lemmas") return run_lemmas(cfg);
    if (cfg.command == "torsion") return run_torsion(cfg);
    if (cfg.command != "all")
        throw OutOfRangeError("unknown command: " + cfg.command);

    VerificationReport rep;
    rep.command = "verify all";
    for (const VerificationReport& sub :
         {run_hochster(cfg), run_identity(cfg), run_lemmas(cfg), run_torsion(cfg)}) {
        for (const auto& param : sub.parameters) rep.parameters.push_back(param);
        for (const auto& row : sub.rows) rep.rows.push_back(row);
    }
    return rep;
}

} // namespace cohomcheck
