#ifndef COHOMCHECK_POLYRING_HPP
#define COHOMCHECK_POLYRING_HPP

#include <compare>
#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <gmpxx.h>

#include "cohomcheck/errors.hpp"

namespace cohomcheck {

/// Exact arbitrary-precision integer scalar.
using Int = mpz_class;

/**
 * A variable context fixes the variable names, their order, and whether
 * negative exponents are admitted (Laurent mode). Polynomials are only
 * compatible when their contexts are structurally equal; every binary
 * operation checks this.
 */
class VarContext {
public:
    VarContext(std::vector<std::string> names, bool laurent);

    std::size_t arity() const { return names_.size(); }
    const std::string& name(std::size_t i) const { return names_.at(i); }
    const std::vector<std::string>& names() const { return names_; }
    bool laurent() const { return laurent_; }

    /// Index of a variable by name, or nullopt when absent.
    std::optional<std::size_t> index_of(std::string_view name) const;

    bool operator==(const VarContext& o) const {
        return laurent_ == o.laurent_ && names_ == o.names_;
    }

private:
    std::vector<std::string> names_;
    bool laurent_;
};

using VarContextPtr = std::shared_ptr<const VarContext>;

/// Create a context. Names must be nonempty, distinct, and start with a letter.
VarContextPtr make_context(std::vector<std::string> names, bool laurent = false);

/**
 * An exponent vector. Monomials are context-free data; validity against a
 * context (arity, sign of exponents) is enforced by Polynomial. Exponents
 * may be negative, which Laurent contexts accept and plain contexts reject.
 *
 * The canonical monomial order used everywhere (term maps, serialization,
 * enumeration output) is lexicographic on the exponent vector.
 */
class Monomial {
public:
    explicit Monomial(std::vector<std::int32_t> exps) : e_(std::move(exps)) {}

    /// Monomial 1 in `arity` variables.
    static Monomial unit(std::size_t arity);
    /// var_i^e as a monomial in `arity` variables.
    static Monomial var(std::size_t arity, std::size_t i, std::int32_t e = 1);

    std::size_t arity() const { return e_.size(); }
    std::int32_t exp(std::size_t i) const { return e_.at(i); }
    const std::vector<std::int32_t>& exps() const { return e_; }

    bool is_unit() const;
    /// True when every exponent is >= 0.
    bool is_nonnegative() const;
    /// Total degree (sum of exponents).
    std::int64_t total_degree() const;

    /// Exponent-wise sum; arities must agree.
    Monomial operator*(const Monomial& o) const;
    /// True when this divides o exponent-wise (both assumed nonnegative).
    bool divides(const Monomial& o) const;

    bool operator==(const Monomial& o) const { return e_ == o.e_; }
    std::strong_ordering operator<=>(const Monomial& o) const;

private:
    std::vector<std::int32_t> e_;
};

/**
 * Sparse multivariate polynomial over Z with exact coefficients.
 *
 * Representation invariant: the term map holds no zero coefficients, every
 * key has arity equal to the context arity, and in a non-Laurent context
 * every exponent is nonnegative. All operations preserve canonical form,
 * so equality of polynomials is equality of term maps.
 *
 * Values are immutable in practice: every operation returns a new
 * polynomial and never mutates its inputs, so sharing across threads is
 * safe without locks.
 */
class Polynomial {
public:
    using TermMap = std::map<Monomial, Int>;

    explicit Polynomial(VarContextPtr ctx);

    static Polynomial zero(const VarContextPtr& ctx) { return Polynomial(ctx); }
    static Polynomial constant(const VarContextPtr& ctx, Int c);
    static Polynomial variable(const VarContextPtr& ctx, std::size_t i);
    static Polynomial term(const VarContextPtr& ctx, Monomial m, Int c);
    /// Adopt a prebuilt term map, canonicalizing it (zero coefficients
    /// swept, every key validated against the context).
    static Polynomial from_terms(VarContextPtr ctx, TermMap terms);

    const VarContextPtr& context() const { return ctx_; }
    const TermMap& terms() const { return t_; }
    std::size_t term_count() const { return t_.size(); }
    bool is_zero() const { return t_.empty(); }
    /// True when no exponent is negative (always true outside Laurent mode).
    bool is_polynomial() const;

    /// Coefficient of m, zero when absent.
    Int coefficient_of(const Monomial& m) const;
    /// Lex-largest term. Throws ZeroPolynomialError on the zero polynomial.
    std::pair<Monomial, Int> leading_term() const;

    /// Add c * m to the polynomial being built (the one mutating entry point;
    /// used by the factories and the arithmetic kernels).
    void add_term(const Monomial& m, const Int& c);

    Polynomial operator-() const;
    Polynomial operator+(const Polynomial& o) const;
    Polynomial operator-(const Polynomial& o) const;
    Polynomial operator*(const Polynomial& o) const;
    Polynomial operator*(const Int& c) const;
    friend Polynomial operator*(const Int& c, const Polynomial& f) { return f * c; }

    bool operator==(const Polynomial& o) const;

private:
    void check_term(const Monomial& m) const;

    VarContextPtr ctx_;
    TermMap t_;
};

/// Context equality check shared by all binary operations.
void require_same_context(const Polynomial& a, const Polynomial& b);

/// Reference implementation of the product: sequential term accumulation.
Polynomial mul_serial(const Polynomial& a, const Polynomial& b);

/**
 * OpenMP product kernel: slices of the left factor are accumulated into
 * per-thread term maps and merged in thread order. Exact integer addition
 * is associative and commutative, so the result is identical to
 * mul_serial term-for-term; tests compare the two on random inputs.
 * Falls back to mul_serial when built without OpenMP.
 */
Polynomial mul_parallel(const Polynomial& a, const Polynomial& b);

/// f^n by binary powering. n must be >= 0; f^0 == 1.
Polynomial pow(const Polynomial& f, long n);

/// Exact coefficient-wise division by d != 0; NotDivisibleError otherwise.
Polynomial divide_by_int(const Polynomial& f, const Int& d);

/**
 * Multiply by a monomial whose exponents may be negative. In a non-Laurent
 * context the shifted exponents must all stay nonnegative
 * (NegativeExponentError otherwise).
 */
Polynomial monomial_shift(const Polynomial& f, const Monomial& shift);

/// Terms whose exponent of variable `var` equals e, with that exponent
/// cleared: the coefficient of var^e viewed in the same context.
Polynomial coefficient_in(const Polynomial& f, std::size_t var, std::int32_t e);

/**
 * Simultaneous substitution into a possibly different context:
 * variable i of f is replaced by images[i]. All images must live in
 * `target`. f must be exponent-nonnegative (substitution does not invert).
 */
Polynomial substitute(const Polynomial& f, const VarContextPtr& target,
                      const std::vector<Polynomial>& images);

/**
 * Build an image vector for `substitute` by variable name: names present in
 * `by_name` get the given image, all others map to the same-named variable
 * of the target context (ContextMismatchError when absent there).
 */
std::vector<Polynomial> substitution_images(
    const VarContextPtr& source, const VarContextPtr& target,
    const std::map<std::string, Polynomial>& by_name);

/// Move f to a structurally different context carrying the same variable
/// names (e.g. Laurent -> plain). Exponents must be valid in `target`.
Polynomial in_context(const Polynomial& f, const VarContextPtr& target);

/**
 * Canonical textual form: terms in descending lex order joined by " + " /
 * " - ", coefficient magnitude elided when 1 (except for the constant
 * term), exponent elided when 1, factors joined by "*". The zero
 * polynomial prints as "0". parse_polynomial inverts this exactly
 * (round-trips are bit-exact) and accepts arbitrary whitespace.
 */
std::string to_string(const Polynomial& f);
std::string to_string(const VarContext& ctx, const Monomial& m);
Polynomial parse_polynomial(const VarContextPtr& ctx, std::string_view text);

} // namespace cohomcheck

#endif
