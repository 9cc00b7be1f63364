#include "cohomcheck/polyring.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>
#include <utility>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace cohomcheck {

// ---------------------------------------------------------------- VarContext

VarContext::VarContext(std::vector<std::string> names, bool laurent)
    : names_(std::move(names)), laurent_(laurent) {
    if (names_.empty())
        throw Error("variable context needs at least one variable");
    for (const auto& n : names_) {
        if (n.empty() || !(std::isalpha(static_cast<unsigned char>(n[0])) || n[0] == '_'))
            throw Error("invalid variable name '" + n + "'");
        for (char c : n)
            if (!(std::isalnum(static_cast<unsigned char>(c)) || c == '_'))
                throw Error("invalid variable name '" + n + "'");
    }
    for (std::size_t i = 0; i < names_.size(); ++i)
        for (std::size_t j = i + 1; j < names_.size(); ++j)
            if (names_[i] == names_[j])
                throw Error("duplicate variable name '" + names_[i] + "'");
}

std::optional<std::size_t> VarContext::index_of(std::string_view name) const {
    for (std::size_t i = 0; i < names_.size(); ++i)
        if (names_[i] == name) return i;
    return std::nullopt;
}

VarContextPtr make_context(std::vector<std::string> names, bool laurent) {
    return std::make_shared<const VarContext>(std::move(names), laurent);
}

// ------------------------------------------------------------------ Monomial

Monomial Monomial::unit(std::size_t arity) {
    return Monomial(std::vector<std::int32_t>(arity, 0));
}

Monomial Monomial::var(std::size_t arity, std::size_t i, std::int32_t e) {
    std::vector<std::int32_t> v(arity, 0);
    v.at(i) = e;
    return Monomial(std::move(v));
}

bool Monomial::is_unit() const {
    return std::all_of(e_.begin(), e_.end(), [](std::int32_t x) { return x == 0; });
}

bool Monomial::is_nonnegative() const {
    return std::all_of(e_.begin(), e_.end(), [](std::int32_t x) { return x >= 0; });
}

std::int64_t Monomial::total_degree() const {
    std::int64_t d = 0;
    for (std::int32_t x : e_) d += x;
    return d;
}

Monomial Monomial::operator*(const Monomial& o) const {
    if (e_.size() != o.e_.size())
        throw DimensionMismatchError("monomial arity mismatch");
    std::vector<std::int32_t> v(e_.size());
    for (std::size_t i = 0; i < e_.size(); ++i) v[i] = e_[i] + o.e_[i];
    return Monomial(std::move(v));
}

bool Monomial::divides(const Monomial& o) const {
    if (e_.size() != o.e_.size())
        throw DimensionMismatchError("monomial arity mismatch");
    for (std::size_t i = 0; i < e_.size(); ++i)
        if (e_[i] > o.e_[i]) return false;
    return true;
}

std::strong_ordering Monomial::operator<=>(const Monomial& o) const {
    return std::lexicographical_compare_three_way(e_.begin(), e_.end(),
                                                  o.e_.begin(), o.e_.end());
}

// ---------------------------------------------------------------- Polynomial

Polynomial::Polynomial(VarContextPtr ctx) : ctx_(std::move(ctx)) {
    if (!ctx_) throw Error("null variable context");
}

Polynomial Polynomial::constant(const VarContextPtr& ctx, Int c) {
    Polynomial f(ctx);
    f.add_term(Monomial::unit(ctx->arity()), c);
    return f;
}

Polynomial Polynomial::variable(const VarContextPtr& ctx, std::size_t i) {
    Polynomial f(ctx);
    f.add_term(Monomial::var(ctx->arity(), i), 1);
    return f;
}

Polynomial Polynomial::term(const VarContextPtr& ctx, Monomial m, Int c) {
    Polynomial f(ctx);
    f.add_term(m, c);
    return f;
}

Polynomial Polynomial::from_terms(VarContextPtr ctx, TermMap terms) {
    Polynomial f(std::move(ctx));
    for (auto it = terms.begin(); it != terms.end();) {
        f.check_term(it->first);
        if (it->second == 0)
            it = terms.erase(it);
        else
            ++it;
    }
    f.t_ = std::move(terms);
    return f;
}

void Polynomial::check_term(const Monomial& m) const {
    if (m.arity() != ctx_->arity())
        throw DimensionMismatchError("monomial arity does not match context");
    if (!ctx_->laurent() && !m.is_nonnegative())
        throw NegativeExponentError("negative exponent in non-Laurent context");
}

void Polynomial::add_term(const Monomial& m, const Int& c) {
    check_term(m);
    if (c == 0) return;
    auto it = t_.find(m);
    if (it == t_.end()) {
        t_.emplace(m, c);
    } else {
        it->second += c;
        if (it->second == 0) t_.erase(it);
    }
}

bool Polynomial::is_polynomial() const {
    return std::all_of(t_.begin(), t_.end(),
                       [](const auto& t) { return t.first.is_nonnegative(); });
}

Int Polynomial::coefficient_of(const Monomial& m) const {
    auto it = t_.find(m);
    return it == t_.end() ? Int(0) : it->second;
}

std::pair<Monomial, Int> Polynomial::leading_term() const {
    if (t_.empty())
        throw ZeroPolynomialError("leading term of the zero polynomial");
    return *t_.rbegin();
}

Polynomial Polynomial::operator-() const {
    TermMap r = t_;
    for (auto& [m, c] : r) c = -c;
    Polynomial f(ctx_);
    f.t_ = std::move(r);
    return f;
}

Polynomial Polynomial::operator+(const Polynomial& o) const {
    require_same_context(*this, o);
    TermMap r = t_;
    for (const auto& [m, c] : o.t_) {
        auto it = r.find(m);
        if (it == r.end()) {
            r.emplace(m, c);
        } else {
            it->second += c;
            if (it->second == 0) r.erase(it);
        }
    }
    Polynomial f(ctx_);
    f.t_ = std::move(r);
    return f;
}

Polynomial Polynomial::operator-(const Polynomial& o) const { return *this + (-o); }

Polynomial Polynomial::operator*(const Int& c) const {
    if (c == 0) return Polynomial(ctx_);
    TermMap r = t_;
    for (auto& [m, v] : r) v *= c;
    Polynomial f(ctx_);
    f.t_ = std::move(r);
    return f;
}

bool Polynomial::operator==(const Polynomial& o) const {
    return *ctx_ == *o.ctx_ && t_ == o.t_;
}

void require_same_context(const Polynomial& a, const Polynomial& b) {
    if (!(*a.context() == *b.context()))
        throw ContextMismatchError("operands live in different variable contexts");
}

// ------------------------------------------------------------------ products

namespace {

void accumulate(Polynomial::TermMap& acc, Monomial m, Int c) {
    auto it = acc.find(m);
    if (it == acc.end())
        acc.emplace(std::move(m), std::move(c));
    else
        it->second += c;
}

void merge_into(Polynomial::TermMap& acc, Polynomial::TermMap& part) {
    for (auto& [m, c] : part) accumulate(acc, m, std::move(c));
    part.clear();
}

void sweep_zeros(Polynomial::TermMap& acc) {
    for (auto it = acc.begin(); it != acc.end();)
        it = (it->second == 0) ? acc.erase(it) : std::next(it);
}

} // namespace

Polynomial mul_serial(const Polynomial& a, const Polynomial& b) {
    require_same_context(a, b);
    Polynomial::TermMap r;
    for (const auto& [ma, ca] : a.terms())
        for (const auto& [mb, cb] : b.terms())
            accumulate(r, ma * mb, ca * cb);
    sweep_zeros(r);
    return Polynomial::from_terms(a.context(), std::move(r));
}

Polynomial mul_parallel(const Polynomial& a, const Polynomial& b) {
    require_same_context(a, b);
#ifndef _OPENMP
    return mul_serial(a, b);
#else
    if (a.is_zero() || b.is_zero()) return Polynomial::zero(a.context());

    std::vector<const std::pair<const Monomial, Int>*> at;
    at.reserve(a.term_count());
    for (const auto& t : a.terms()) at.push_back(&t);

    const int nthreads = std::max(1, omp_get_max_threads());
    std::vector<Polynomial::TermMap> part(static_cast<std::size_t>(nthreads));

#pragma omp parallel num_threads(nthreads)
    {
        Polynomial::TermMap& mine = part[static_cast<std::size_t>(omp_get_thread_num())];
#pragma omp for schedule(static)
        for (long idx = 0; idx < static_cast<long>(at.size()); ++idx) {
            const auto& [ma, ca] = *at[static_cast<std::size_t>(idx)];
            for (const auto& [mb, cb] : b.terms())
                accumulate(mine, ma * mb, ca * cb);
        }
    }

    // Exact integer sums commute, so merging the per-thread maps in any
    // fixed order reproduces the sequential result term-for-term.
    Polynomial::TermMap r;
    for (auto& p : part) merge_into(r, p);
    sweep_zeros(r);
    return Polynomial::from_terms(a.context(), std::move(r));
#endif
}

Polynomial Polynomial::operator*(const Polynomial& o) const {
    // Work threshold below which threading overhead dominates.
    static constexpr std::size_t kParallelCutoff = 1u << 12;
#ifdef _OPENMP
    if (term_count() * o.term_count() >= kParallelCutoff && omp_get_max_threads() > 1)
        return mul_parallel(*this, o);
#endif
    return mul_serial(*this, o);
}

Polynomial pow(const Polynomial& f, long n) {
    if (n < 0) throw OutOfRangeError("negative polynomial power");
    Polynomial acc = Polynomial::constant(f.context(), 1);
    if (n == 0) return acc;
    Polynomial base = f;
    // Binary powering; the final squaring is skipped.
    while (true) {
        if (n & 1) acc = acc * base;
        n >>= 1;
        if (n == 0) break;
        base = base * base;
    }
    return acc;
}

Polynomial divide_by_int(const Polynomial& f, const Int& d) {
    if (d == 0) throw OutOfRangeError("division by zero");
    Polynomial::TermMap r = f.terms();
    for (auto& [m, c] : r) {
        if (!mpz_divisible_p(c.get_mpz_t(), d.get_mpz_t()))
            throw NotDivisibleError("coefficient " + c.get_str() + " of " +
                                    to_string(*f.context(), m) +
                                    " is not divisible by " + d.get_str());
        mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), d.get_mpz_t());
    }
    return Polynomial::from_terms(f.context(), std::move(r));
}

Polynomial monomial_shift(const Polynomial& f, const Monomial& shift) {
    Polynomial::TermMap r;
    for (const auto& [m, c] : f.terms()) r.emplace(m * shift, c);
    // from_terms re-validates, rejecting negative exponents outside Laurent mode
    return Polynomial::from_terms(f.context(), std::move(r));
}

Polynomial coefficient_in(const Polynomial& f, std::size_t var, std::int32_t e) {
    if (var >= f.context()->arity())
        throw DimensionMismatchError("variable index out of range");
    Polynomial::TermMap r;
    for (const auto& [m, c] : f.terms()) {
        if (m.exp(var) != e) continue;
        std::vector<std::int32_t> v = m.exps();
        v[var] = 0;
        r.emplace(Monomial(std::move(v)), c);
    }
    return Polynomial::from_terms(f.context(), std::move(r));
}

Polynomial substitute(const Polynomial& f, const VarContextPtr& target,
                      const std::vector<Polynomial>& images) {
    const std::size_t n = f.context()->arity();
    if (images.size() != n)
        throw DimensionMismatchError("need one image per source variable");
    for (const auto& g : images)
        if (!(*g.context() == *target))
            throw ContextMismatchError("substitution image in wrong context");
    if (!f.is_polynomial())
        throw NegativeExponentError("cannot substitute into negative exponents");

    // Power cache per variable: exponents repeat heavily across terms.
    std::vector<std::map<std::int32_t, Polynomial>> cache(n);
    auto power = [&](std::size_t i, std::int32_t e) -> const Polynomial& {
        auto it = cache[i].find(e);
        if (it == cache[i].end())
            it = cache[i].emplace(e, pow(images[i], e)).first;
        return it->second;
    };

    Polynomial acc = Polynomial::zero(target);
    for (const auto& [m, c] : f.terms()) {
        Polynomial t = Polynomial::constant(target, c);
        for (std::size_t i = 0; i < n; ++i)
            if (m.exp(i) != 0) t = t * power(i, m.exp(i));
        acc = acc + t;
    }
    return acc;
}

std::vector<Polynomial> substitution_images(
    const VarContextPtr& source, const VarContextPtr& target,
    const std::map<std::string, Polynomial>& by_name) {
    std::vector<Polynomial> images;
    images.reserve(source->arity());
    for (std::size_t i = 0; i < source->arity(); ++i) {
        const std::string& nm = source->name(i);
        auto it = by_name.find(nm);
        if (it != by_name.end()) {
            if (!(*it->second.context() == *target))
                throw ContextMismatchError("image of '" + nm + "' in wrong context");
            images.push_back(it->second);
        } else {
            auto j = target->index_of(nm);
            if (!j)
                throw ContextMismatchError("variable '" + nm +
                                           "' has no image and no counterpart");
            images.push_back(Polynomial::variable(target, *j));
        }
    }
    return images;
}

Polynomial in_context(const Polynomial& f, const VarContextPtr& target) {
    if (f.context()->names() != target->names())
        throw ContextMismatchError("contexts carry different variables");
    return Polynomial::from_terms(target, Polynomial::TermMap(f.terms()));
}

// ------------------------------------------------------------- serialization

std::string to_string(const VarContext& ctx, const Monomial& m) {
    if (m.arity() != ctx.arity())
        throw DimensionMismatchError("monomial arity does not match context");
    std::string s;
    for (std::size_t i = 0; i < m.arity(); ++i) {
        const std::int32_t e = m.exp(i);
        if (e == 0) continue;
        if (!s.empty()) s += '*';
        s += ctx.name(i);
        if (e != 1) {
            s += '^';
            s += std::to_string(e);
        }
    }
    return s.empty() ? "1" : s;
}

std::string to_string(const Polynomial& f) {
    if (f.is_zero()) return "0";
    const VarContext& ctx = *f.context();
    std::string out;
    // descending lex: leading term first
    for (auto it = f.terms().rbegin(); it != f.terms().rend(); ++it) {
        const auto& [m, c] = *it;
        const bool neg = c < 0;
        if (out.empty())
            out += neg ? "-" : "";
        else
            out += neg ? " - " : " + ";
        const Int a = abs(c);
        if (m.is_unit()) {
            out += a.get_str();
        } else {
            if (a != 1) {
                out += a.get_str();
                out += '*';
            }
            for (std::size_t i = 0, first = 1; i < m.arity(); ++i) {
                const std::int32_t e = m.exp(i);
                if (e == 0) continue;
                if (!first) out += '*';
                first = 0;
                out += ctx.name(i);
                if (e != 1) {
                    out += '^';
                    out += std::to_string(e);
                }
            }
        }
    }
    return out;
}

namespace {

struct Cursor {
    std::string_view s;
    std::size_t i = 0;

    void skip_ws() {
        while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
    }
    bool done() const { return i >= s.size(); }
    char peek() const { return s[i]; }
    [[noreturn]] void fail(const std::string& msg) const {
        throw ParseError(msg + " at offset " + std::to_string(i));
    }
};

bool is_name_start(char c) {
    return std::isalpha(static_cast<unsigned char>(c)) || c == '_';
}
bool is_name_char(char c) {
    return std::isalnum(static_cast<unsigned char>(c)) || c == '_';
}

Int parse_natural(Cursor& cur) {
    std::string digits;
    while (!cur.done() && std::isdigit(static_cast<unsigned char>(cur.peek())))
        digits += cur.s[cur.i++];
    if (digits.empty()) cur.fail("expected digits");
    return Int(digits);
}

std::int32_t parse_exponent(Cursor& cur) {
    cur.skip_ws();
    bool neg = false;
    if (!cur.done() && cur.peek() == '-') {
        neg = true;
        ++cur.i;
        cur.skip_ws();
    }
    Int v = parse_natural(cur);
    if (v > 1000000) cur.fail("exponent too large");
    auto e = static_cast<std::int32_t>(v.get_si());
    return neg ? -e : e;
}

} // namespace

Polynomial parse_polynomial(const VarContextPtr& ctx, std::string_view text) {
    Cursor cur{text};
    Polynomial f(ctx);

    cur.skip_ws();
    if (cur.done()) cur.fail("empty polynomial");

    int sign = 1;
    if (cur.peek() == '+' || cur.peek() == '-') {
        sign = cur.peek() == '-' ? -1 : 1;
        ++cur.i;
    }

    while (true) {
        // one term: '*'-joined integer and variable-power factors
        Int coef = 1;
        std::vector<std::int32_t> exps(ctx->arity(), 0);
        while (true) {
            cur.skip_ws();
            if (cur.done()) cur.fail("expected factor");
            if (std::isdigit(static_cast<unsigned char>(cur.peek()))) {
                coef *= parse_natural(cur);
            } else if (is_name_start(cur.peek())) {
                std::string name;
                while (!cur.done() && is_name_char(cur.peek())) name += cur.s[cur.i++];
                auto idx = ctx->index_of(name);
                if (!idx) cur.fail("unknown variable '" + name + "'");
                std::int32_t e = 1;
                cur.skip_ws();
                if (!cur.done() && cur.peek() == '^') {
                    ++cur.i;
                    e = parse_exponent(cur);
                }
                exps[*idx] += e;
            } else {
                cur.fail("expected factor");
            }
            cur.skip_ws();
            if (!cur.done() && cur.peek() == '*') {
                ++cur.i;
                continue;
            }
            break;
        }
        f.add_term(Monomial(std::move(exps)), sign * coef);

        cur.skip_ws();
        if (cur.done()) break;
        if (cur.peek() == '+' || cur.peek() == '-') {
            sign = cur.peek() == '-' ? -1 : 1;
            ++cur.i;
        } else {
            cur.fail("expected '+' or '-'");
        }
    }
    return f;
}

} // namespace cohomcheck
