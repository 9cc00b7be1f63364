#include "cohomcheck/hochster.hpp"

#include <map>
#include <sstream>
#include <stdexcept>
#include <vector>

#include "cohomcheck/binomial.hpp"
#include "cohomcheck/errors.hpp"
#include "cohomcheck/identity.hpp"

namespace cohomcheck {

namespace {

constexpr std::size_t kU = 0, kV = 1, kW = 2, kX = 3, kY = 4, kZ = 5;

Monomial m6(long u, long v, long w, long x, long y, long z) {
    return Monomial({static_cast<std::int32_t>(u), static_cast<std::int32_t>(v),
                     static_cast<std::int32_t>(w), static_cast<std::int32_t>(x),
                     static_cast<std::int32_t>(y), static_cast<std::int32_t>(z)});
}

long prime_power(long p, long e) {
    if (!is_prime(p)) throw OutOfRangeError("p must be prime");
    if (e < 1) throw OutOfRangeError("need e >= 1");
    long q = 1;
    for (long i = 0; i < e; ++i) {
        if (q > (1L << 40) / p) throw SizeGuardError("prime power overflows the guard");
        q *= p;
    }
    return q;
}

void guard_q(long q, long bound, bool force, const char* what) {
    if (!force && q > bound) {
        std::ostringstream msg;
        msg << what << " refused for q = " << q << " > " << bound
            << " (pass force to override)";
        throw SizeGuardError(msg.str());
    }
}

// Laurent context and the substitution images of A, B, T.
struct LaurentBridge {
    VarContextPtr ctx;
    std::vector<Polynomial> images; // indexed like (A, B, T)
};

LaurentBridge laurent_bridge() {
    LaurentBridge br;
    br.ctx = make_context({"u", "v", "w", "x", "y", "z"}, /*laurent=*/true);
    auto term = [&](const Monomial& m) { return Polynomial::term(br.ctx, m, Int(1)); };
    Polynomial zw = term(m6(0, 0, -1, 0, 0, 1)); // z/w
    Polynomial xu = term(m6(-1, 0, 0, 1, 0, 0)); // x/u
    Polynomial yv = term(m6(0, -1, 0, 0, 1, 0)); // y/v
    br.images = {zw - xu, xu - yv, -xu};
    return br;
}

Int sgn(long x) { return (x % 2 == 0) ? Int(1) : Int(-1); }

// Membership target lambda_q (d1 d2 d3)^k in the six-variable ring.
Polynomial membership_target(const DeterminantalData& d, long p, long e, long k) {
    return lambda_q(p, e) * pow(d.d1 * d.d2 * d.d3, k);
}

// Support predicate for a certificate cofactor: every monomial must be one
// of the (k+1)^2 bracket products. The table row for cofactor `which` gives
// the variable whose exponent plays i, the one playing j, and the checks
//   c1: u^(q+i+j) v^(k-i) w^(k-j) x^(2k-i-j) y^i z^j
//   c2: v^(q+i+j) w^(k-i) u^(k-j) y^(2k-i-j) z^i x^j
//   c3: w^(q+i+j) u^(k-i) v^(k-j) z^(2k-i-j) x^i y^j
bool cofactor_support_ok(const Polynomial& c, int which, long q, long k) {
    struct Slots {
        std::size_t i_var, j_var, q_var, ki_var, kj_var, rest_var;
    };
    static constexpr Slots table[3] = {
        {kY, kZ, kU, kV, kW, kX},
        {kZ, kX, kV, kW, kU, kY},
        {kX, kY, kW, kU, kV, kZ},
    };
    const Slots& s = table[which];
    for (const auto& [mono, coeff] : c.terms()) {
        long i = mono.exp(s.i_var), j = mono.exp(s.j_var);
        if (i < 0 || i > k || j < 0 || j > k) return false;
        if (mono.exp(s.q_var) != q + i + j) return false;
        if (mono.exp(s.ki_var) != k - i) return false;
        if (mono.exp(s.kj_var) != k - j) return false;
        if (mono.exp(s.rest_var) != 2 * k - i - j) return false;
    }
    return true;
}

bool cofactor_degrees_ok(const Grading& g, const Polynomial& c1,
                         const Polynomial& c2, const Polynomial& c3, long q,
                         long k) {
    auto expect = [&](const Polynomial& c, const MultiDegree& want) {
        if (c.is_zero()) return true; // vacuously homogeneous of any degree
        auto got = g.homogeneous_degree(c);
        return got.has_value() && *got == want;
    };
    return expect(c1, MultiDegree{q + 2 * k, k, k, 2 * k}) &&
           expect(c2, MultiDegree{k, q + 2 * k, k, 2 * k}) &&
           expect(c3, MultiDegree{k, k, q + 2 * k, 2 * k});
}

MembershipCertificate finish_certificate(const DeterminantalData& d, long p,
                                         long e, long q, long k, Polynomial c1,
                                         Polynomial c2, Polynomial c3) {
    MembershipCertificate cert{p,  e,  q,  k, std::move(c1), std::move(c2),
                               std::move(c3), false, false,  false,
                               std::string()};

    Polynomial residual = membership_target(d, p, e, k) -
                          cert.c1 * pow(d.d1, q + k) -
                          cert.c2 * pow(d.d2, q + k) -
                          cert.c3 * pow(d.d3, q + k);
    cert.residual_zero = residual.is_zero();
    if (!cert.residual_zero) {
        auto [mono, coeff] = residual.leading_term();
        cert.witness = "residual leading term " + coeff.get_str() + "*" +
                       to_string(*d.ctx, mono);
    }
    cert.homogeneous_ok =
        cofactor_degrees_ok(det_grading(d.ctx), cert.c1, cert.c2, cert.c3, q, k);
    cert.support_ok = cofactor_support_ok(cert.c1, 0, q, k) &&
                      cofactor_support_ok(cert.c2, 1, q, k) &&
                      cofactor_support_ok(cert.c3, 2, q, k);
    if (cert.witness.empty() && !(cert.homogeneous_ok && cert.support_ok))
        cert.witness = "cofactor degree or support check failed";
    return cert;
}

} // namespace

DeterminantalData determinantal_data() {
    auto ctx = uvwxyz_context();
    auto var = [&](std::size_t i) { return Polynomial::variable(ctx, i); };
    Polynomial u = var(kU), v = var(kV), w = var(kW);
    Polynomial x = var(kX), y = var(kY), z = var(kZ);
    return DeterminantalData{ctx, v * z - w * y, w * x - u * z, u * y - v * x};
}

SyzygyCheck syzygy_check() {
    DeterminantalData d = determinantal_data();
    auto var = [&](std::size_t i) { return Polynomial::variable(d.ctx, i); };
    SyzygyCheck out;
    out.top_row_ok =
        (var(kU) * d.d1 + var(kV) * d.d2 + var(kW) * d.d3).is_zero();
    out.bottom_row_ok =
        (var(kX) * d.d1 + var(kY) * d.d2 + var(kZ) * d.d3).is_zero();
    out.partial_nonzero = !(var(kU) * d.d1 + var(kV) * d.d2).is_zero();
    return out;
}

Polynomial lambda_q(long p, long e) {
    long q = prime_power(p, e);
    DeterminantalData d = determinantal_data();
    auto var = [&](std::size_t i) { return Polynomial::variable(d.ctx, i); };
    Polynomial sum = pow(var(kU) * d.d1, q) + pow(var(kV) * d.d2, q) +
                     pow(var(kW) * d.d3, q);
    return divide_by_int(sum, Int(p));
}

BridgeCheck bridge_to_three_vars(long p, long e, bool force) {
    BridgeCheck out;
    out.p = p;
    out.e = e;
    out.q = prime_power(p, e);
    guard_q(out.q, kMaxCertificateQ, force, "bridge");
    out.k = out.q - 1;
    const long q = out.q, k = out.k;

    // Three-variable target, assembled directly from its closed form so the
    // comparison does not depend on the mod-p decomposition.
    auto abt = abt_context();
    Polynomial a = Polynomial::variable(abt, 0);
    Polynomial b = Polynomial::variable(abt, 1);
    Polynomial target3 = divide_by_int(
        (pow(a + b, q) + pow(-a, q) + pow(-b, q)) * pow((a + b) * a * b, k),
        Int(p));

    LaurentBridge br = laurent_bridge();
    Polynomial image = substitute(target3, br.ctx, br.images);
    Polynomial cleared =
        monomial_shift(image, m6(q + 2 * k, q + 2 * k, q + 2 * k, 0, 0, 0));

    DeterminantalData d = determinantal_data();
    out.equal = in_context(cleared, d.ctx) == membership_target(d, p, e, k);
    return out;
}

MembershipCertificate build_and_verify_certificate(long p, long e, bool force) {
    long q = prime_power(p, e);
    guard_q(q, kMaxCertificateQ, force, "certificate construction");
    ModPDecomposition dec = build_mod_p_decomposition(p, e);
    const long k = dec.k;

    LaurentBridge br = laurent_bridge();
    DeterminantalData d = determinantal_data();
    const Int sign = sgn(k + 1);

    // Cofactors: push each divided sum through the substitution and clear
    // its denominator; the quotient by the minor powers is exactly the
    // monomial prefactor recorded here.
    Polynomial c1L = monomial_shift(substitute(dec.s1, br.ctx, br.images),
                                    m6(q + 2 * k, k, k, 0, 0, 0)) * sign;
    Polynomial c2L = monomial_shift(substitute(dec.s2, br.ctx, br.images),
                                    m6(k, q + 2 * k, k, 0, 0, 0)) * sign;
    Polynomial c3L = monomial_shift(substitute(dec.s3, br.ctx, br.images),
                                    m6(k, k, q + 2 * k, 0, 0, 0)) * sign;

    return finish_certificate(d, p, e, q, k, in_context(c1L, d.ctx),
                              in_context(c2L, d.ctx), in_context(c3L, d.ctx));
}

std::variant<MembershipCertificate, NoSolutionCertificate>
oracle_membership(long p, long e, bool force) {
    long q = prime_power(p, e);
    guard_q(q, kMaxOracleQ, force, "membership oracle");
    const long k = q - 1;
    DeterminantalData d = determinantal_data();
    Grading grading = det_grading(d.ctx);

    Polynomial target = membership_target(d, p, e, k);
    MultiDegree target_deg{q + 2 * k, q + 2 * k, q + 2 * k, q + 3 * k};
    {
        auto got = grading.homogeneous_degree(target);
        if (!got || !(*got == target_deg))
            throw std::logic_error("membership target has unexpected degree");
    }

    const Polynomial gens[3] = {pow(d.d1, q + k), pow(d.d2, q + k),
                                pow(d.d3, q + k)};
    const MultiDegree gen_degs[3] = {
        MultiDegree{0, q + k, q + k, q + k},
        MultiDegree{q + k, 0, q + k, q + k},
        MultiDegree{q + k, q + k, 0, q + k},
    };

    std::map<Monomial, std::size_t> row_of;
    for (const Monomial& mono : grading.enumerate_monomials(target_deg))
        row_of.emplace(mono, row_of.size());

    std::vector<std::vector<Monomial>> candidates(3);
    std::size_t cols = 0;
    for (int g = 0; g < 3; ++g) {
        candidates[g] = grading.enumerate_monomials(target_deg - gen_degs[g]);
        cols += candidates[g].size();
    }

    IntMatrix mat(row_of.size(), cols);
    std::size_t col = 0;
    for (int g = 0; g < 3; ++g) {
        for (const Monomial& cand : candidates[g]) {
            Polynomial shifted = monomial_shift(gens[g], cand);
            for (const auto& [mono, coeff] : shifted.terms())
                mat.at(row_of.at(mono), col) = coeff;
            ++col;
        }
    }
    std::vector<Int> rhs(row_of.size());
    for (const auto& [mono, coeff] : target.terms())
        rhs[row_of.at(mono)] = coeff;

    DiophantineResult res = solve_diophantine(mat, rhs);
    if (auto* cert = std::get_if<NoSolutionCertificate>(&res)) return *cert;

    const std::vector<Int>& sol = std::get<std::vector<Int>>(res);
    Polynomial cof[3] = {Polynomial::zero(d.ctx), Polynomial::zero(d.ctx),
                         Polynomial::zero(d.ctx)};
    col = 0;
    for (int g = 0; g < 3; ++g)
        for (const Monomial& cand : candidates[g]) cof[g].add_term(cand, sol[col++]);

    MembershipCertificate cert =
        finish_certificate(d, p, e, q, k, cof[0], cof[1], cof[2]);
    if (!cert.residual_zero)
        throw std::logic_error("oracle solution failed re-verification");
    return cert;
}

} // namespace cohomcheck
