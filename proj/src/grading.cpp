#include "cohomcheck/grading.hpp"

#include <algorithm>
#include <limits>

namespace cohomcheck {

MultiDegree MultiDegree::operator+(const MultiDegree& o) const {
    MultiDegree r;
    for (std::size_t i = 0; i < 4; ++i) r.d[i] = d[i] + o.d[i];
    return r;
}

MultiDegree MultiDegree::operator-(const MultiDegree& o) const {
    MultiDegree r;
    for (std::size_t i = 0; i < 4; ++i) r.d[i] = d[i] - o.d[i];
    return r;
}

MultiDegree MultiDegree::operator*(std::int64_t n) const {
    MultiDegree r;
    for (std::size_t i = 0; i < 4; ++i) r.d[i] = d[i] * n;
    return r;
}

bool MultiDegree::is_nonnegative() const {
    return std::all_of(d.begin(), d.end(), [](std::int64_t x) { return x >= 0; });
}

std::string to_string(const MultiDegree& d) {
    std::string s = "(";
    for (std::size_t i = 0; i < 4; ++i) {
        if (i) s += ",";
        s += std::to_string(d[i]);
    }
    return s + ")";
}

Grading::Grading(VarContextPtr ctx, std::vector<MultiDegree> weights)
    : ctx_(std::move(ctx)), weights_(std::move(weights)) {
    if (!ctx_) throw Error("null variable context");
    if (weights_.size() != ctx_->arity())
        throw DimensionMismatchError("need one weight vector per variable");
    for (const auto& w : weights_)
        if (!w.is_nonnegative())
            throw Error("grading weights must be nonnegative");
}

MultiDegree Grading::degree_of_monomial(const Monomial& m) const {
    if (m.arity() != ctx_->arity())
        throw DimensionMismatchError("monomial arity does not match context");
    if (!m.is_nonnegative())
        throw NegativeExponentError("degree of a Laurent monomial is undefined");
    MultiDegree deg;
    for (std::size_t i = 0; i < m.arity(); ++i)
        if (m.exp(i) != 0) deg = deg + weights_[i] * m.exp(i);
    return deg;
}

std::optional<MultiDegree> Grading::homogeneous_degree(const Polynomial& f) const {
    if (!(*f.context() == *ctx_))
        throw ContextMismatchError("polynomial context does not match grading");
    if (f.is_zero())
        throw ZeroPolynomialError("degree of the zero polynomial is undefined");
    std::optional<MultiDegree> deg;
    for (const auto& [m, c] : f.terms()) {
        MultiDegree dm = degree_of_monomial(m);
        if (!deg)
            deg = dm;
        else if (!(*deg == dm))
            return std::nullopt;
    }
    return deg;
}

std::vector<Monomial> Grading::enumerate_monomials(
    const MultiDegree& degree, const std::optional<Monomial>& exclude) const {
    for (std::size_t i = 0; i < weights_.size(); ++i)
        if (weights_[i] == MultiDegree{})
            throw UnboundedSearchError("variable '" + ctx_->name(i) +
                                       "' has weight zero; fiber is infinite");
    if (exclude && exclude->arity() != ctx_->arity())
        throw DimensionMismatchError("exclusion monomial arity mismatch");

    std::vector<Monomial> out;
    if (!degree.is_nonnegative()) return out;

    std::vector<std::int32_t> exps(ctx_->arity(), 0);

    // DFS in variable order with ascending exponents yields ascending lex
    // output with no post-sort.
    auto rec = [&](auto&& self, std::size_t var, const MultiDegree& residual) -> void {
        if (var == ctx_->arity()) {
            if (residual == MultiDegree{}) {
                Monomial m{std::vector<std::int32_t>(exps)};
                if (!exclude || !exclude->divides(m)) out.push_back(std::move(m));
            }
            return;
        }
        const MultiDegree& w = weights_[var];
        std::int64_t emax = std::numeric_limits<std::int64_t>::max();
        for (std::size_t c = 0; c < 4; ++c)
            if (w[c] > 0) emax = std::min(emax, residual[c] / w[c]);
        for (std::int64_t e = 0; e <= emax; ++e) {
            exps[var] = static_cast<std::int32_t>(e);
            MultiDegree rem = residual - w * e;
            if (rem.is_nonnegative()) self(self, var + 1, rem);
            exps[var] = 0;
        }
    };
    rec(rec, 0, degree);
    return out;
}

namespace {

VarContextPtr require_uvwxyz(const VarContextPtr& ctx) {
    const std::vector<std::string> expected{"u", "v", "w", "x", "y", "z"};
    if (ctx->names() != expected)
        throw ContextMismatchError("grading preset needs variables (u,v,w,x,y,z)");
    return ctx;
}

} // namespace

Grading det_grading(const VarContextPtr& ctx) {
    require_uvwxyz(ctx);
    return Grading(ctx, {
                            MultiDegree{1, 0, 0, 0}, // u
                            MultiDegree{0, 1, 0, 0}, // v
                            MultiDegree{0, 0, 1, 0}, // w
                            MultiDegree{1, 0, 0, 1}, // x
                            MultiDegree{0, 1, 0, 1}, // y
                            MultiDegree{0, 0, 1, 1}, // z
                        });
}

VarContextPtr uvwxyz_context() {
    static const VarContextPtr ctx = make_context({"u", "v", "w", "x", "y", "z"});
    return ctx;
}

Grading hyp_grading(const VarContextPtr& ctx) {
    require_uvwxyz(ctx);
    return Grading(ctx, {
                            MultiDegree{0, 1, 1, 1}, // u
                            MultiDegree{1, 0, 1, 1}, // v
                            MultiDegree{1, 1, 0, 1}, // w
                            MultiDegree{1, 0, 0, 0}, // x
                            MultiDegree{0, 1, 0, 0}, // y
                            MultiDegree{0, 0, 1, 0}, // z
                        });
}

} // namespace cohomcheck
