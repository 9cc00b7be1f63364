#include "cohomcheck/torsion.hpp"

#include <algorithm>
#include <map>
#include <sstream>
#include <stdexcept>

#include "cohomcheck/binomial.hpp"
#include "cohomcheck/errors.hpp"

namespace cohomcheck {

namespace {

constexpr std::size_t kU = 0, kV = 1, kW = 2, kX = 3, kY = 4, kZ = 5;

Monomial m6(long u, long v, long w, long x, long y, long z) {
    return Monomial({static_cast<std::int32_t>(u), static_cast<std::int32_t>(v),
                     static_cast<std::int32_t>(w), static_cast<std::int32_t>(x),
                     static_cast<std::int32_t>(y), static_cast<std::int32_t>(z)});
}

void require_hyp_context(const Polynomial& f) {
    if (!(*f.context() == *uvwxyz_context()))
        throw ContextMismatchError("quotient-ring operation needs the (u..z) context");
}

long require_prime(long p) {
    if (!is_prime(p)) throw OutOfRangeError("p must be prime");
    return p;
}

// -(u x) - (v y), the image of w z.
Polynomial wz_image() {
    auto ctx = uvwxyz_context();
    Polynomial f = Polynomial::zero(ctx);
    f.add_term(m6(1, 0, 0, 1, 0, 0), Int(-1));
    f.add_term(m6(0, 1, 0, 0, 1, 0), Int(-1));
    return f;
}

} // namespace

Polynomial normal_form(const Polynomial& f) {
    require_hyp_context(f);
    if (!f.is_polynomial())
        throw NegativeExponentError("normal form is defined on polynomials only");
    auto ctx = f.context();
    Polynomial out = Polynomial::zero(ctx);
    const Polynomial image = wz_image();
    std::vector<Polynomial> image_pow{Polynomial::constant(ctx, 1)};
    auto image_power = [&](long s) -> const Polynomial& {
        while (static_cast<long>(image_pow.size()) <= s)
            image_pow.push_back(image_pow.back() * image);
        return image_pow[static_cast<std::size_t>(s)];
    };
    // One pass suffices: the rewrite w z -> -(u x) - (v y) removes every
    // shared w/z pair of a term and introduces none.
    for (const auto& [mono, coeff] : f.terms()) {
        long s = std::min<long>(mono.exp(kW), mono.exp(kZ));
        if (s == 0) {
            out.add_term(mono, coeff);
        } else {
            Monomial reduced = mono * m6(0, 0, -s, 0, 0, -s);
            out = out + monomial_shift(image_power(s), reduced) * coeff;
        }
    }
    return out;
}

bool is_normal_form(const Polynomial& f) {
    require_hyp_context(f);
    for (const auto& [mono, coeff] : f.terms())
        if (mono.exp(kW) >= 1 && mono.exp(kZ) >= 1) return false;
    return true;
}

Polynomial hyp_mul(const Polynomial& a, const Polynomial& b) {
    return normal_form(a * b);
}

Polynomial torsion_lambda(long p) {
    require_prime(p);
    auto ctx = uvwxyz_context();
    Polynomial sum = Polynomial::zero(ctx);
    sum.add_term(m6(p, 0, 0, p, 0, 0), Int(1));
    sum.add_term(m6(0, p, 0, 0, p, 0), Int(1));
    sum.add_term(m6(0, 0, p, 0, 0, p), Int(1));
    return divide_by_int(normal_form(sum), Int(p));
}

AnnihilationCheck verify_p_annihilation(long p) {
    AnnihilationCheck out;
    out.p = require_prime(p);
    Polynomial lambda = torsion_lambda(p);
    out.lambda_normal = is_normal_form(lambda);

    auto ctx = uvwxyz_context();
    // u^p * x^p + v^p * y^p + w^p * z^p: the cofactors (u^p, v^p, w^p) on the
    // generators (x^p, y^p, z^p).
    Polynomial combo = Polynomial::zero(ctx);
    combo.add_term(m6(p, 0, 0, p, 0, 0), Int(1));
    combo.add_term(m6(0, p, 0, 0, p, 0), Int(1));
    combo.add_term(m6(0, 0, p, 0, 0, p), Int(1));
    out.product_ok = (lambda * Int(p)) == normal_form(combo);
    return out;
}

CofactorSupportReport cofactor_support(long p, long k, bool force) {
    CofactorSupportReport rep;
    rep.p = require_prime(p);
    rep.k = k;
    if (k < 0) throw OutOfRangeError("need k >= 0");
    if (!force && k > kMaxTorsionK)
        throw SizeGuardError("cofactor support refused for k > 20 (pass force)");

    auto ctx = uvwxyz_context();
    Grading g = hyp_grading(ctx);
    const Monomial wz = m6(0, 0, 1, 0, 0, 1);

    auto unique_piece = [&](const MultiDegree& deg, const Monomial& expect,
                            bool& flag, const char* name) {
        auto monos = g.enumerate_monomials(deg, wz);
        flag = (monos.size() == 1 && monos[0] == expect);
        if (!flag && rep.witness.empty()) {
            std::ostringstream msg;
            msg << name << " piece has " << monos.size() << " monomials";
            rep.witness = msg.str();
        }
    };
    unique_piece(MultiDegree{0, p + k, p + k, p}, m6(p, 0, 0, 0, k, k),
                 rep.unique1, "first cofactor");
    unique_piece(MultiDegree{p + k, 0, p + k, p}, m6(0, p, 0, k, 0, k),
                 rep.unique2, "second cofactor");
    unique_piece(MultiDegree{p + k, p + k, 0, p}, m6(0, 0, p, k, k, 0),
                 rep.unique3, "third cofactor");

    rep.shift_identity_ok =
        m6(p, 0, 0, 0, k, k) * m6(0, 0, 0, p + k, 0, 0) ==
        m6(0, 0, 0, k, k, k) * m6(p, 0, 0, p, 0, 0);
    return rep;
}

SpecializationReport specialization_nonvanishing(long p) {
    SpecializationReport rep;
    rep.p = require_prime(p);

    static const VarContextPtr ctx2 = make_context({"x", "y"});
    Polynomial x = Polynomial::variable(ctx2, 0);
    Polynomial y = Polynomial::variable(ctx2, 1);
    Polynomial one = Polynomial::constant(ctx2, 1);

    Polynomial lambda = torsion_lambda(p);
    std::vector<Polynomial> images{one, one, one, x, y, -x - y};
    Polynomial spec = substitute(lambda, ctx2, images);

    Polynomial direct =
        divide_by_int(pow(x, p) + pow(y, p) + pow(-x - y, p), Int(p));
    rep.substitution_matches = (spec == direct);

    const Int want = (p % 2 == 0) ? Int(1) : Int(-1);
    rep.coefficient_ok =
        direct.coefficient_of(Monomial({static_cast<std::int32_t>(p - 1), 1})) ==
        want;

    // Membership in (p, x^p, y^p) Z[x,y] holds exactly when every monomial
    // with both exponents below p has coefficient divisible by p; the first
    // violation refutes it.
    const Int prime(p);
    for (const auto& [mono, coeff] : direct.terms()) {
        if (mono.exp(0) < p && mono.exp(1) < p &&
            !mpz_divisible_p(coeff.get_mpz_t(), prime.get_mpz_t())) {
            rep.nonmember_ok = true;
            rep.witness = coeff.get_str() + "*" + to_string(*ctx2, mono);
            break;
        }
    }
    return rep;
}

std::variant<std::vector<Polynomial>, NoSolutionCertificate>
hyp_graded_membership(const Polynomial& target_nf,
                      const std::vector<Polynomial>& gens_nf) {
    require_hyp_context(target_nf);
    if (!is_normal_form(target_nf))
        throw OutOfRangeError("membership target must be a normal form");
    if (target_nf.is_zero())
        return std::vector<Polynomial>(gens_nf.size(),
                                       Polynomial::zero(target_nf.context()));
    auto ctx = target_nf.context();
    Grading g = hyp_grading(ctx);
    const Monomial wz = m6(0, 0, 1, 0, 0, 1);

    auto target_deg = g.homogeneous_degree(target_nf);
    if (!target_deg)
        throw OutOfRangeError("membership target must be homogeneous");

    std::map<Monomial, std::size_t> row_of;
    for (const Monomial& mono : g.enumerate_monomials(*target_deg, wz))
        row_of.emplace(mono, row_of.size());

    std::vector<std::vector<Monomial>> candidates;
    std::size_t cols = 0;
    for (const auto& gen : gens_nf) {
        require_hyp_context(gen);
        if (!is_normal_form(gen) || gen.is_zero())
            throw OutOfRangeError("generators must be nonzero normal forms");
        auto gd = g.homogeneous_degree(gen);
        if (!gd) throw OutOfRangeError("generators must be homogeneous");
        MultiDegree cof = *target_deg - *gd;
        std::vector<Monomial> cand;
        if (cof.is_nonnegative()) cand = g.enumerate_monomials(cof, wz);
        cols += cand.size();
        candidates.push_back(std::move(cand));
    }

    IntMatrix mat(row_of.size(), cols);
    std::size_t col = 0;
    for (std::size_t gi = 0; gi < gens_nf.size(); ++gi) {
        for (const Monomial& cand : candidates[gi]) {
            Polynomial prod = normal_form(monomial_shift(gens_nf[gi], cand));
            for (const auto& [mono, coeff] : prod.terms())
                mat.at(row_of.at(mono), col) = coeff;
            ++col;
        }
    }
    std::vector<Int> rhs(row_of.size());
    for (const auto& [mono, coeff] : target_nf.terms())
        rhs[row_of.at(mono)] = coeff;

    DiophantineResult res = solve_diophantine(mat, rhs);
    if (auto* cert = std::get_if<NoSolutionCertificate>(&res)) return *cert;

    const std::vector<Int>& sol = std::get<std::vector<Int>>(res);
    std::vector<Polynomial> cofs(gens_nf.size(), Polynomial::zero(ctx));
    col = 0;
    for (std::size_t gi = 0; gi < gens_nf.size(); ++gi)
        for (const Monomial& cand : candidates[gi])
            cofs[gi].add_term(cand, sol[col++]);

    Polynomial residual = target_nf;
    for (std::size_t gi = 0; gi < gens_nf.size(); ++gi)
        residual = residual - cofs[gi] * gens_nf[gi];
    if (!normal_form(residual).is_zero())
        throw std::logic_error("membership solution failed re-verification");
    return cofs;
}

TorsionRefutation membership_refutation_oracle(long p, long k, bool force) {
    TorsionRefutation rep;
    rep.p = require_prime(p);
    rep.k = k;
    if (k < 0) throw OutOfRangeError("need k >= 0");
    if (!force && (p > kMaxTorsionOracleP || k > kMaxTorsionOracleK))
        throw SizeGuardError(
            "refutation oracle refused beyond p = 7, k = 5 (pass force)");

    auto ctx = uvwxyz_context();
    Polynomial target =
        normal_form(monomial_shift(torsion_lambda(p), m6(0, 0, 0, k, k, k)));
    std::vector<Polynomial> gens{
        Polynomial::term(ctx, m6(0, 0, 0, p + k, 0, 0), Int(1)),
        Polynomial::term(ctx, m6(0, 0, 0, 0, p + k, 0), Int(1)),
        Polynomial::term(ctx, m6(0, 0, 0, 0, 0, p + k), Int(1)),
    };
    auto res = hyp_graded_membership(target, gens);
    if (auto* cert = std::get_if<NoSolutionCertificate>(&res)) {
        rep.refuted = true;
        rep.certificate = cert->describe();
    } else {
        rep.refuted = false;
        const auto& cofs = std::get<std::vector<Polynomial>>(res);
        std::ostringstream msg;
        msg << "unexpected membership with cofactors";
        for (const auto& c : cofs) msg << " [" << to_string(c) << "]";
        rep.witness = msg.str();
    }
    return rep;
}

} // namespace cohomcheck
