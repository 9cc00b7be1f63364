#include <doctest.h>

#include <algorithm>
#include <cstdint>
#include <vector>

#include "cohomcheck/grading.hpp"
#include "cohomcheck/polyring.hpp"

using namespace cohomcheck;

namespace {

// Independent enumeration oracle: scan the full exponent box bounded by the
// target coordinates and keep monomials whose weight sum matches.
std::vector<Monomial> brute_force_enumerate(const Grading& g,
                                            const MultiDegree& target) {
    const std::size_t arity = g.context()->arity();
    std::int64_t cap = 0;
    for (std::size_t i = 0; i < 4; ++i) cap = std::max(cap, target[i]);
    std::vector<Monomial> out;
    std::vector<std::int32_t> exps(arity, 0);
    while (true) {
        Monomial m(exps);
        if (g.degree_of_monomial(m) == target) out.push_back(m);
        std::size_t pos = arity;
        while (pos > 0) {
            --pos;
            if (exps[pos] < cap) {
                ++exps[pos];
                std::fill(exps.begin() + static_cast<long>(pos) + 1, exps.end(), 0);
                break;
            }
            if (pos == 0) return out; // odometer wrapped: box exhausted
        }
    }
}

} // namespace

TEST_SUITE("grading") {

TEST_CASE("preset weights") {
    auto ctx = uvwxyz_context();
    REQUIRE(ctx->arity() == 6);
    CHECK(ctx->name(0) == "u");
    CHECK(ctx->name(5) == "z");
    // The same pointer comes back every call: contexts compare structurally,
    // but sharing avoids needless allocation.
    CHECK(uvwxyz_context().get() == ctx.get());

    Grading det = det_grading(ctx);
    CHECK(det.weight(0) == MultiDegree{{1, 0, 0, 0}});
    CHECK(det.weight(3) == MultiDegree{{1, 0, 0, 1}});
    CHECK(det.weight(5) == MultiDegree{{0, 0, 1, 1}});

    Grading hyp = hyp_grading(ctx);
    CHECK(hyp.weight(0) == MultiDegree{{0, 1, 1, 1}});
    CHECK(hyp.weight(3) == MultiDegree{{1, 0, 0, 0}});

    // u*x + v*y + w*z is homogeneous of degree (1,1,1,1) in the second
    // grading and inhomogeneous in the first.
    Polynomial rel = parse_polynomial(ctx, "u*x + v*y + w*z");
    CHECK(hyp.homogeneous_degree(rel) == MultiDegree{{1, 1, 1, 1}});
    CHECK(!det.homogeneous_degree(rel).has_value());
}

TEST_CASE("multidegree arithmetic") {
    MultiDegree a{{1, 2, 3, 4}}, b{{0, 2, 1, 4}};
    CHECK(a + b == MultiDegree{{1, 4, 4, 8}});
    CHECK(a - b == MultiDegree{{1, 0, 2, 0}});
    CHECK(a * 3 == MultiDegree{{3, 6, 9, 12}});
    CHECK((a - b).is_nonnegative());
    CHECK(!(b - a).is_nonnegative());
    CHECK(to_string(a) == "(1,2,3,4)");
}

TEST_CASE("monomial degrees add under multiplication") {
    auto ctx = uvwxyz_context();
    Grading det = det_grading(ctx);
    Monomial m1({1, 0, 2, 0, 1, 0}), m2({0, 3, 0, 1, 0, 2});
    CHECK(det.degree_of_monomial(m1 * m2) ==
          det.degree_of_monomial(m1) + det.degree_of_monomial(m2));
    CHECK_THROWS_AS(det.degree_of_monomial(Monomial({-1, 0, 0, 0, 0, 0})),
                    NegativeExponentError);
}

TEST_CASE("homogeneity detection") {
    auto ctx = uvwxyz_context();
    Grading det = det_grading(ctx);
    Polynomial minor = parse_polynomial(ctx, "v*z - w*y");
    auto deg = det.homogeneous_degree(minor);
    REQUIRE(deg.has_value());
    CHECK(*deg == MultiDegree{{0, 1, 1, 1}});
    CHECK(!det.homogeneous_degree(minor + Polynomial::variable(ctx, 0)).has_value());
    CHECK_THROWS_AS(det.homogeneous_degree(Polynomial::zero(ctx)),
                    ZeroPolynomialError);
}

TEST_CASE("enumeration matches brute force and is sorted") {
    auto ctx = uvwxyz_context();
    const std::vector<MultiDegree> targets = {
        MultiDegree{{1, 1, 1, 1}}, MultiDegree{{2, 1, 0, 2}},
        MultiDegree{{2, 2, 2, 2}}, MultiDegree{{0, 0, 0, 0}},
        MultiDegree{{3, 1, 2, 4}},
    };
    for (const Grading& g : {det_grading(ctx), hyp_grading(ctx)}) {
        for (const auto& target : targets) {
            auto fast = g.enumerate_monomials(target);
            auto slow = brute_force_enumerate(g, target);
            CHECK(fast == slow);
            CHECK(std::is_sorted(fast.begin(), fast.end()));
        }
    }
}

TEST_CASE("enumeration respects the divisor exclusion") {
    auto ctx = uvwxyz_context();
    Grading hyp = hyp_grading(ctx);
    MultiDegree target{{2, 2, 2, 2}};
    Monomial wz = Monomial::var(6, 2) * Monomial::var(6, 5);
    auto all = hyp.enumerate_monomials(target);
    auto reduced = hyp.enumerate_monomials(target, wz);
    CHECK(reduced.size() < all.size());
    for (const auto& m : reduced) CHECK(!wz.divides(m));
    for (const auto& m : all)
        if (!wz.divides(m))
            CHECK(std::find(reduced.begin(), reduced.end(), m) != reduced.end());
}

TEST_CASE("zero-weight variables make enumeration unbounded") {
    auto ctx = make_context({"x", "y"});
    Grading g(ctx, {MultiDegree{{1, 0, 0, 0}}, MultiDegree{{0, 0, 0, 0}}});
    CHECK_THROWS_AS(g.enumerate_monomials(MultiDegree{{1, 0, 0, 0}}),
                    UnboundedSearchError);
}

TEST_CASE("grading construction validates arity") {
    auto ctx = make_context({"x", "y"});
    CHECK_THROWS_AS(Grading(ctx, {MultiDegree{{1, 0, 0, 0}}}),
                    DimensionMismatchError);
}

} // TEST_SUITE
