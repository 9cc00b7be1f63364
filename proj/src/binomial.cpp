#include "cohomcheck/binomial.hpp"

#include "cohomcheck/errors.hpp"

namespace cohomcheck {

Int binom(long n, long k) {
    if (n < 0) throw OutOfRangeError("binomial with negative upper index");
    if (k < 0 || k > n) return 0;
    if (k > n - k) k = n - k;
    // multiplicative formula; each intermediate division is exact
    Int r = 1;
    for (long i = 1; i <= k; ++i) {
        r *= n - k + i;
        mpz_divexact_ui(r.get_mpz_t(), r.get_mpz_t(), static_cast<unsigned long>(i));
    }
    return r;
}

Int binom_ext(long n, long k) {
    if (k < 0 || n < 0 || k > n) return 0;
    return binom(n, k);
}

bool is_prime(long n) {
    if (n < 2) return false;
    if (n % 2 == 0) return n == 2;
    for (long d = 3; d * d <= n; d += 2)
        if (n % d == 0) return false;
    return true;
}

std::vector<long> first_primes(std::size_t n) {
    std::vector<long> ps;
    for (long c = 2; ps.size() < n; ++c)
        if (is_prime(c)) ps.push_back(c);
    return ps;
}

namespace {

long factorial_valuation(long p, long n) {
    // Legendre: v_p(n!) = sum_{t>=1} floor(n / p^t)
    long v = 0;
    while (n > 0) {
        n /= p;
        v += n;
    }
    return v;
}

} // namespace

long padic_valuation_binom(long p, long n, long k) {
    if (!is_prime(p)) throw OutOfRangeError("p must be prime");
    if (k < 0 || n < 0 || k > n) throw OutOfRangeError("need 0 <= k <= n");
    return factorial_valuation(p, n) - factorial_valuation(p, k) -
           factorial_valuation(p, n - k);
}

long carry_count(long p, long a, long b) {
    if (!is_prime(p)) throw OutOfRangeError("p must be prime");
    if (a < 0 || b < 0) throw OutOfRangeError("need a, b >= 0");
    long carries = 0, carry = 0;
    while (a > 0 || b > 0 || carry > 0) {
        long s = a % p + b % p + carry;
        carry = s >= p ? 1 : 0;
        carries += carry;
        a /= p;
        b /= p;
        if (a == 0 && b == 0 && carry == 0) break;
    }
    return carries;
}

DivisibilityFamilyReport verify_divisibility_family(long p, long e) {
    if (!is_prime(p)) throw OutOfRangeError("p must be prime");
    if (e < 1) throw OutOfRangeError("need e >= 1");
    DivisibilityFamilyReport rep;
    rep.p = p;
    rep.e = e;
    rep.q = 1;
    for (long t = 0; t < e; ++t) rep.q *= p;
    const long k = rep.q - 1;
    for (long r = 1; r <= k; ++r) {
        Int c = binom(k + r, k);
        const bool direct = mpz_divisible_ui_p(c.get_mpz_t(), static_cast<unsigned long>(p)) != 0;
        const bool valued = padic_valuation_binom(p, k + r, k) >= 1;
        ++rep.checked;
        if (!(direct && valued)) rep.failures.push_back({r, std::move(c)});
    }
    return rep;
}

// ------------------------------------------------------------------- lemmas

Int alternating_triple_sum(long k, long s, long m) {
    Int acc = 0;
    for (long i = 0; i <= m; ++i) {
        Int t = binom_ext(2 * k + 1, s + i) * binom_ext(k + i, k) * binom_ext(k + m - i, k);
        if (i % 2) acc -= t;
        else acc += t;
    }
    return acc;
}

Int positive_triple_sum(long k, long s, long m) {
    Int acc = 0;
    for (long i = 0; i <= s; ++i)
        acc += binom_ext(k - i, k - s) * binom_ext(k + i, k) * binom_ext(k + m - i, m);
    return acc;
}

LemmaValue eval_alternating_triple(long k, long s, long m) {
    if (k < 0 || m < 0 || s < 0)
        throw OutOfRangeError("alternating triple sum needs k, s, m >= 0");
    Int rhs;
    if (s > k)
        rhs = binom(m + s - k - 1, m) * binom(2 * k + m + 1, m + s);
    else if (s >= k + 1 - m)
        rhs = 0;
    else
        throw OutOfRangeError("alternating triple sum has no stated value for s < k+1-m");
    return LemmaValue{alternating_triple_sum(k, s, m), std::move(rhs)};
}

LemmaValue eval_signed_transform(long s, long a, long k) {
    if (s < 0 || a < 0 || k < 0)
        throw OutOfRangeError("signed transform needs s, a, k >= 0");
    Int lhs = 0;
    for (long j = 0; j <= s; ++j) {
        Int t = binom(s, j) * binom(a + j, k);
        if (j % 2) lhs -= t;
        else lhs += t;
    }
    Int rhs = binom_ext(a, k - s);
    if (s % 2) rhs = -rhs;
    return LemmaValue{std::move(lhs), std::move(rhs)};
}

LemmaValue eval_positive_triple(long k, long s, long m) {
    if (k < 0 || m < 0)
        throw OutOfRangeError("positive triple sum needs k, m >= 0");
    if (s < 0 || s > k)
        throw OutOfRangeError("positive triple sum needs 0 <= s <= k");
    Int rhs = binom(k + m - s, m) * binom(2 * k + m + 1, s);
    return LemmaValue{positive_triple_sum(k, s, m), std::move(rhs)};
}

// ------------------------------------------------------- certificate sweeps

namespace {

struct SweepState {
    CertificateSweep out;

    void check(bool ok, const char* relation, std::initializer_list<long> point) {
        ++out.points_checked;
        if (!ok) out.failures.push_back({relation, std::vector<long>(point)});
    }
    void exclude() { ++out.points_excluded; }
};

} // namespace

CertificateSweep sweep_certificate_alternating_triple(long k_max) {
    // F(m,i) = (-1)^i C(2k+1,s+i) C(k+i,k) C(k+m-i,k)
    // G(m,i) = i (s+i) (k+m+1-i) / (m+1-i) * F(m,i) = gnum(m,i) / (m+1-i)
    SweepState st;
    st.out.name = "alternating_triple";
    auto F = [](long k, long s, long m, long i) {
        Int t = binom_ext(2 * k + 1, s + i) * binom_ext(k + i, k) * binom_ext(k + m - i, k);
        return (i % 2) ? Int(-t) : t;
    };
    auto gnum = [&](long k, long s, long m, long i) {
        return Int(Int(i) * (s + i) * (k + m + 1 - i) * F(k, s, m, i));
    };
    auto H = [&](long k, long s, long m) {
        Int acc = 0;
        for (long i = 0; i <= m; ++i) acc += F(k, s, m, i);
        return acc;
    };
    for (long k = 0; k <= k_max; ++k)
        for (long s = 0; s <= 2 * k + 2; ++s)
            for (long m = 0; m <= k + 2; ++m) {
                for (long i = 0; i <= k + 2; ++i) {
                    const Int f = F(k, s, m, i);
                    const Int f1 = F(k, s, m + 1, i);
                    // (a)  gnum(m,i+1) = -(m-i)(k+i+1)(2k+1-s-i) F(m,i)
                    if (m - i == 0)
                        st.exclude();
                    else
                        st.check(gnum(k, s, m, i + 1) ==
                                     Int(-Int(m - i) * (k + i + 1) * (2 * k + 1 - s - i) * f),
                                 "step_in_i", {k, s, m, i});
                    // (b)  (m+1-i) F(m+1,i) = (k+m+1-i) F(m,i)
                    if (m + 1 - i == 0)
                        st.exclude();
                    else
                        st.check(Int(Int(m + 1 - i) * f1) == Int(Int(k + m + 1 - i) * f),
                                 "step_in_m", {k, s, m, i});
                    // (c)  cleared by (m-i)(m+1-i):
                    //      (m+1-i) gnum(m,i+1) - (m-i) gnum(m,i)
                    //        = (m-i)(m+1-i) [ (2k+m+2)(m+s-k) F(m,i)
                    //                         - (m+1)(m+s+1) F(m+1,i) ]
                    if (m - i == 0 || m + 1 - i == 0) {
                        st.exclude();
                    } else {
                        Int lhs = Int(m + 1 - i) * gnum(k, s, m, i + 1) -
                                  Int(m - i) * gnum(k, s, m, i);
                        Int rhs = Int(Int(m - i) * (m + 1 - i)) *
                                  (Int(Int(2 * k + m + 2) * (m + s - k)) * f -
                                   Int(Int(m + 1) * (m + s + 1)) * f1);
                        st.check(lhs == rhs, "pair_relation", {k, s, m, i});
                    }
                }
                // (d)  0 = (2k+m+2)(m+s-k) H(m) - (m+1)(m+s+1) H(m+1)
                st.check(Int(Int(2 * k + m + 2) * (m + s - k)) * H(k, s, m) ==
                             Int(Int(m + 1) * (m + s + 1)) * H(k, s, m + 1),
                         "telescoped_recurrence", {k, s, m});
            }
    return std::move(st.out);
}

CertificateSweep sweep_certificate_signed_transform(long k_max) {
    // F(s,j) = (-1)^j C(s,j) C(a+j,k)
    // G(s,j) = -j (a+j-k) / (s+1-j) * F(s,j) = gnum(s,j) / (s+1-j)
    SweepState st;
    st.out.name = "signed_transform";
    auto F = [](long k, long a, long s, long j) {
        Int t = binom_ext(s, j) * binom_ext(a + j, k);
        return (j % 2) ? Int(-t) : t;
    };
    auto gnum = [&](long k, long a, long s, long j) {
        return Int(Int(-j) * (a + j - k) * F(k, a, s, j));
    };
    auto H = [&](long k, long a, long s) {
        Int acc = 0;
        for (long j = 0; j <= s; ++j) acc += F(k, a, s, j);
        return acc;
    };
    for (long k = 0; k <= k_max; ++k)
        for (long a = 0; a <= 2 * k + 2; ++a)
            for (long s = 0; s <= 2 * k + 2; ++s) {
                for (long j = 0; j <= k + 2; ++j) {
                    const Int f = F(k, a, s, j);
                    const Int f1 = F(k, a, s + 1, j);
                    // (a)  gnum(s,j+1) = (s-j)(a+j+1) F(s,j)
                    if (s - j == 0)
                        st.exclude();
                    else
                        st.check(gnum(k, a, s, j + 1) == Int(Int(s - j) * (a + j + 1) * f),
                                 "step_in_j", {k, a, s, j});
                    // (b)  (s+1-j) F(s+1,j) = (s+1) F(s,j)
                    if (s + 1 - j == 0)
                        st.exclude();
                    else
                        st.check(Int(Int(s + 1 - j) * f1) == Int(Int(s + 1) * f),
                                 "step_in_s", {k, a, s, j});
                    // (c)  cleared by (s-j)(s+1-j):
                    //      (s+1-j) gnum(s,j+1) - (s-j) gnum(s,j)
                    //        = (s-j)(s+1-j) [ (k-s) F(s,j) + (a-k+s+1) F(s+1,j) ]
                    if (s - j == 0 || s + 1 - j == 0) {
                        st.exclude();
                    } else {
                        Int lhs = Int(s + 1 - j) * gnum(k, a, s, j + 1) -
                                  Int(s - j) * gnum(k, a, s, j);
                        Int rhs = Int(Int(s - j) * (s + 1 - j)) *
                                  (Int(k - s) * f + Int(a - k + s + 1) * f1);
                        st.check(lhs == rhs, "pair_relation", {k, a, s, j});
                    }
                }
                // (d)  0 = (k-s) H(s) + (a-k+s+1) H(s+1)
                st.check(Int(k - s) * H(k, a, s) + Int(a - k + s + 1) * H(k, a, s + 1) == 0,
                         "telescoped_recurrence", {k, a, s});
            }
    return std::move(st.out);
}

CertificateSweep sweep_certificate_positive_triple(long k_max) {
    // F(s,i) = C(k-i,k-s) C(k+i,k) C(k+m-i,m)
    // G(s,i) = i (k-s) (k+m+1-i) / (s+1-i) * F(s,i) = gnum(s,i) / (s+1-i)
    SweepState st;
    st.out.name = "positive_triple";
    auto F = [](long k, long m, long s, long i) {
        return Int(binom_ext(k - i, k - s) * binom_ext(k + i, k) * binom_ext(k + m - i, m));
    };
    auto gnum = [&](long k, long m, long s, long i) {
        return Int(Int(i) * (k - s) * (k + m + 1 - i) * F(k, m, s, i));
    };
    auto H = [&](long k, long m, long s) {
        Int acc = 0;
        for (long i = 0; i <= (s >= 0 ? s : -1); ++i) acc += F(k, m, s, i);
        return acc;
    };
    for (long k = 0; k <= k_max; ++k)
        for (long m = 0; m <= k + 2; ++m)
            for (long s = 0; s <= 2 * k + 2; ++s) {
                for (long i = 0; i <= k + 2; ++i) {
                    const Int f = F(k, m, s, i);
                    const Int f1 = F(k, m, s + 1, i);
                    // (a)  gnum(s,i+1) = (s-i)(k-s)(k+i+1) F(s,i)
                    if (s - i == 0)
                        st.exclude();
                    else
                        st.check(gnum(k, m, s, i + 1) ==
                                     Int(Int(s - i) * (k - s) * (k + i + 1) * f),
                                 "step_in_i", {k, m, s, i});
                    // (b)  (s+1-i) F(s+1,i) = (k-s) F(s,i)
                    if (s + 1 - i == 0)
                        st.exclude();
                    else
                        st.check(Int(Int(s + 1 - i) * f1) == Int(Int(k - s) * f),
                                 "step_in_s", {k, m, s, i});
                    // (c)  cleared by (s-i)(s+1-i):
                    //      (s+1-i) gnum(s,i+1) - (s-i) gnum(s,i)
                    //        = (s-i)(s+1-i) [ (k-s)(2k+m-s+1) F(s,i)
                    //                         - (s+1)(k+m-s) F(s+1,i) ]
                    if (s - i == 0 || s + 1 - i == 0) {
                        st.exclude();
                    } else {
                        Int lhs = Int(s + 1 - i) * gnum(k, m, s, i + 1) -
                                  Int(s - i) * gnum(k, m, s, i);
                        Int rhs = Int(Int(s - i) * (s + 1 - i)) *
                                  (Int(Int(k - s) * (2 * k + m - s + 1)) * f -
                                   Int(Int(s + 1) * (k + m - s)) * f1);
                        st.check(lhs == rhs, "pair_relation", {k, m, s, i});
                    }
                }
                // (d)  0 = (k-s)(2k+m-s+1) H(s) - (s+1)(k+m-s) H(s+1)
                st.check(Int(Int(k - s) * (2 * k + m - s + 1)) * H(k, m, s) ==
                             Int(Int(s + 1) * (k + m - s)) * H(k, m, s + 1),
                         "telescoped_recurrence", {k, m, s});
            }
    return std::move(st.out);
}

} // namespace cohomcheck
