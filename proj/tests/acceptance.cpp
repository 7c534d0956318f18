// Acceptance suite: every criterion is checked in exact arithmetic (literal
// equality), one pass/fail line per criterion.

#include <chrono>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <vector>

#include "copoly/cauchy.hpp"
#include "copoly/laplace.hpp"

using namespace copoly;

namespace {

const RingSpec Z = RingSpec::integers();
const RingSpec Q = RingSpec::rationals();

MultiIndex mi(std::vector<unsigned> e) { return MultiIndex(std::move(e)); }
RingElement z(long v) { return RingElement::from_integer(Z, v); }
RingElement q(long v) { return RingElement::from_integer(Q, v); }

struct Check {
    bool ok = true;
    std::string detail;
    void fail(const std::string& msg) {
        if (ok) detail = msg;
        ok = false;
    }
    void expect(bool cond, const std::string& msg) {
        if (!cond) fail(msg);
    }
};

mpz_class ipow(long base, unsigned long e) {
    mpz_class r;
    mpz_class b(base);
    mpz_pow_ui(r.get_mpz_t(), b.get_mpz_t(), e);
    return r;
}

Copolynomial random_copoly(std::mt19937_64& rng, std::size_t n, unsigned maxdeg,
                           const RingSpec& ring) {
    std::uniform_int_distribution<long> value(-9, 9);
    std::map<MultiIndex, RingElement> table;
    for (const MultiIndex& alpha : enumerate_indices(n, maxdeg)) {
        table.insert_or_assign(alpha, RingElement::from_integer(ring, value(rng)));
    }
    return from_moments(n, ring, std::move(table));
}

DiffOperator random_operator(std::mt19937_64& rng, std::size_t n, const RingSpec& ring,
                             bool invertible_a0) {
    std::uniform_int_distribution<long> coeff(-9, 9);
    std::map<MultiIndex, RingElement> table;
    long a0 = 0;
    if (invertible_a0) {
        if (ring.contains_rationals()) {
            do {
                a0 = coeff(rng);
            } while (a0 == 0);
        } else {
            a0 = rng() % 2 ? 1 : -1;
        }
    }
    table.insert_or_assign(MultiIndex::zero(n), RingElement::from_integer(ring, a0));
    auto indices = enumerate_indices(n, 2);
    std::uniform_int_distribution<std::size_t> pick(1, indices.size() - 1);
    for (int t = 0; t < 3; ++t) {
        table.insert_or_assign(indices[pick(rng)], RingElement::from_integer(ring, coeff(rng)));
    }
    return DiffOperator::from_terms(n, ring, std::move(table));
}

// 1. Helmholtz fundamental solution against the closed form, c in {1,2}.
Check criterion1() {
    Check c;
    for (long cc : {1L, 2L}) {
        Copolynomial e = fundamental_solution(helmholtz_operator(q(cc)));
        for (const MultiIndex& beta : enumerate_indices(3, 6)) {
            RingElement got = e.moment(beta);
            bool even = beta[0] % 2 == 0 && beta[1] % 2 == 0 && beta[2] % 2 == 0;
            if (!even) {
                c.expect(got.is_zero(), "odd moment nonzero at " + beta.to_string());
                continue;
            }
            MultiIndex alpha = mi({beta[0] / 2, beta[1] / 2, beta[2] / 2});
            mpq_class want(factorial(alpha.total_degree()) * factorial(beta),
                           factorial(alpha) * ipow(cc, alpha.total_degree() + 1));
            want.canonicalize();
            if (alpha.total_degree() % 2 != 0) want = -want;
            c.expect(got == RingElement(Q, want),
                     "c=" + std::to_string(cc) + " mismatch at " + beta.to_string());
        }
    }
    return c;
}

// 2. Heat-with-mass operator closed form plus the Laplace route.
Check criterion2() {
    Check c;
    DiffOperator f = heat_operator(q(1), q(1));
    Copolynomial e = fundamental_solution(f);
    for (unsigned l = 0; l <= 6; ++l) {
        for (unsigned m = 0; l + m <= 6; ++m) {
            RingElement got = e.moment(mi({l, m}));
            if (m % 2 != 0) {
                c.expect(got.is_zero(), "odd moment nonzero");
                continue;
            }
            unsigned s = m / 2;
            mpz_class num = factorial(2UL * s) * factorial(static_cast<unsigned long>(l + s));
            mpz_class want;
            mpz_divexact(want.get_mpz_t(), num.get_mpz_t(),
                         factorial(static_cast<unsigned long>(s)).get_mpz_t());
            c.expect(got == RingElement::from_integer(Q, want),
                     "mismatch at l=" + std::to_string(l) + " m=" + std::to_string(m));
        }
    }
    TruncatedSeries lhs = symbol(f, 6).negate_argument() * laplace(e, 6);
    c.expect(lhs == TruncatedSeries::one(2, Q, 6), "(c - a z2^2 - z1) L(E) != 1");
    return c;
}

// 3. Mixed operator C_sl = (-1)^(s+1) l! s!.
Check criterion3() {
    Check c;
    Copolynomial e = fundamental_solution(mixed_xt_operator(Z));
    for (unsigned s = 0; s <= 4; ++s) {
        for (unsigned l = 0; l <= 4; ++l) {
            mpz_class want = factorial(static_cast<unsigned long>(l)) *
                             factorial(static_cast<unsigned long>(s));
            if (s % 2 == 0) want = -want;
            c.expect(e.moment(mi({l, s})) == RingElement::from_integer(Z, want),
                     "mismatch at s=" + std::to_string(s) + " l=" + std::to_string(l));
        }
    }
    return c;
}

// 4. Transport operator (E, t^l x^beta) = s^beta (|beta|+l)!.
Check criterion4() {
    Check c;
    {
        Copolynomial e = fundamental_solution(transport_operator({z(2)}));
        for (unsigned l = 0; l <= 5; ++l) {
            for (unsigned b = 0; l + b <= 5; ++b) {
                mpz_class want = ipow(2, b) * factorial(static_cast<unsigned long>(l + b));
                c.expect(e.moment(mi({l, b})) == RingElement::from_integer(Z, want),
                         "s=(2) mismatch");
            }
        }
    }
    {
        Copolynomial e = fundamental_solution(transport_operator({z(1), z(2)}));
        for (const MultiIndex& idx : enumerate_indices(3, 5)) {
            unsigned l = idx[0], b1 = idx[1], b2 = idx[2];
            mpz_class want = ipow(1, b1) * ipow(2, b2) *
                             factorial(static_cast<unsigned long>(l + b1 + b2));
            c.expect(e.moment(idx) == RingElement::from_integer(Z, want), "s=(1,2) mismatch");
        }
    }
    return c;
}

// 5. (a-b)(E_a * E_b) = a E_a - b E_b over Z to degree 8, and over Q via the
// Laplace product.
Check criterion5() {
    Check c;
    {
        RingElement a = z(2), b = z(1);
        Copolynomial lhs = scaled(convolve(exp_family(a), exp_family(b)), a - b);
        Copolynomial rhs = scaled(exp_family(a), a) - scaled(exp_family(b), b);
        c.expect(equal_up_to(lhs, rhs, 8), "binomial convolution route over Z");
    }
    {
        Copolynomial ea = exp_family(q(2)), eb = exp_family(q(1));
        TruncatedSeries lhs =
            series_mul(laplace(ea, 8), laplace(eb, 8)).scaled(q(2) - q(1));
        TruncatedSeries rhs = laplace(ea, 8).scaled(q(2)) - laplace(eb, 8).scaled(q(1));
        c.expect(lhs == rhs, "Laplace product route over Q");
        c.expect(series_mul(laplace(ea, 8), laplace(eb, 8)) == laplace(convolve(ea, eb), 8),
                 "transform of the convolution");
    }
    return c;
}

// 6. Heat Cauchy fundamental solution tables, a = 1, n in {1,2}.
Check criterion6() {
    Check c;
    for (std::size_t n : {1u, 2u}) {
        CopolySeries ec = cauchy_fundamental(laplacian_operator(n, Z), 3);
        for (std::size_t k = 0; k <= 3; ++k) {
            for (const MultiIndex& beta : enumerate_indices(n, 6)) {
                RingElement got = ec.coefficient(k).moment(beta);
                bool doubled = true;
                std::vector<unsigned> half(n);
                for (std::size_t j = 0; j < n; ++j) {
                    if (beta[j] % 2 != 0) doubled = false;
                    half[j] = beta[j] / 2;
                }
                MultiIndex alpha(half);
                if (doubled && alpha.total_degree() == k) {
                    mpz_class want;
                    mpz_divexact(want.get_mpz_t(), factorial(beta).get_mpz_t(),
                                 factorial(alpha).get_mpz_t());
                    c.expect(got == RingElement::from_integer(Z, want),
                             "n=" + std::to_string(n) + " mismatch at " + beta.to_string());
                } else {
                    c.expect(got.is_zero(), "n=" + std::to_string(n) + " expected zero at " +
                                                beta.to_string());
                }
            }
        }
    }
    return c;
}

// 7. Transport Cauchy fundamental solution equals delta(x + t s).
Check criterion7() {
    Check c;
    {
        DiffOperator f =
            DiffOperator::from_terms(1, Z, {{MultiIndex::unit(1, 0), z(2)}});
        CopolySeries ec = cauchy_fundamental(f, 5);
        for (std::size_t k = 0; k <= 5; ++k) {
            for (unsigned b = 0; b <= 5; ++b) {
                RingElement got = ec.coefficient(k).moment(mi({b}));
                if (b == k) {
                    mpz_class want = ipow(2, b);
                    if (b % 2 != 0) want = -want;
                    c.expect(got == RingElement::from_integer(Z, want), "s=(2) mismatch");
                } else {
                    c.expect(got.is_zero(), "s=(2) expected zero");
                }
            }
        }
    }
    {
        DiffOperator f = DiffOperator::from_terms(
            2, Z, {{MultiIndex::unit(2, 0), z(1)}, {MultiIndex::unit(2, 1), z(2)}});
        CopolySeries ec = cauchy_fundamental(f, 5);
        for (std::size_t k = 0; k <= 5; ++k) {
            for (const MultiIndex& beta : enumerate_indices(2, 5)) {
                RingElement got = ec.coefficient(k).moment(beta);
                if (beta.total_degree() == k) {
                    mpz_class want = ipow(1, beta[0]) * ipow(2, beta[1]);
                    if (beta.total_degree() % 2 != 0) want = -want;
                    c.expect(got == RingElement::from_integer(Z, want), "s=(1,2) mismatch");
                } else {
                    c.expect(got.is_zero(), "s=(1,2) expected zero");
                }
            }
        }
    }
    return c;
}

// 8. Non-existence over Z at exactly (k=2, alpha=0); success over Q.
Check criterion8() {
    Check c;
    CopolySeries u = cauchy_solve(DiffOperator::identity(1, Z), delta(1, Z), 3);
    bool threw = false;
    try {
        u.coefficient(2).moment(mi({0}));
    } catch (const DivisibilityFailure& e) {
        threw = true;
        c.expect(e.k == 2, "wrong k");
        c.expect(e.alpha == std::vector<unsigned>{0}, "wrong alpha");
    }
    c.expect(threw, "no DivisibilityFailure raised");
    c.expect(!equal_up_to(u.coefficient(1), zero_copolynomial(1, Z), 2) ||
                 u.coefficient(1).moment(mi({0})) == z(1),
             "u_1 should exist");

    CopolySeries v = cauchy_solve(DiffOperator::identity(1, Q), delta(1, Q), 6);
    for (std::size_t k = 0; k <= 6; ++k) {
        RingElement want = invert(
            RingElement::from_integer(Q, factorial(static_cast<unsigned long>(k))));
        c.expect(v.coefficient(k).moment(mi({0})) == want, "over Q (u_k,1) != 1/k!");
    }
    return c;
}

// 9. Intro Poisson formula for Q = x^4, a = 1 over Z.
Check criterion9() {
    Check c;
    Polynomial p = Polynomial::monomial(mi({4}), z(1));
    auto u = cauchy_solve_polynomial(z(1), p, 10);
    c.expect(u.size() == 3, "series should terminate at k = 2");
    if (u.size() == 3) {
        c.expect(u[0] == p, "k=0 coefficient");
        c.expect(u[1] == Polynomial::monomial(mi({2}), z(12)), "k=1 coefficient");
        c.expect(u[2] == Polynomial::constant(1, z(12)), "k=2 coefficient");
    }
    return c;
}

// 10. Property suites, 1000 randomized cases each.
Check criterion10() {
    Check c;
    const int cases = 1000;

    { // convolution commutativity/associativity and the delta identity (Z)
        std::mt19937_64 rng(1001);
        for (int i = 0; i < cases && c.ok; ++i) {
            std::size_t n = 1 + (i % 2);
            Copolynomial a = random_copoly(rng, n, 5, Z);
            Copolynomial b = random_copoly(rng, n, 5, Z);
            Copolynomial d = random_copoly(rng, n, 5, Z);
            c.expect(equal_up_to(convolve(a, b), convolve(b, a), 5), "commutativity");
            c.expect(equal_up_to(convolve(convolve(a, b), d), convolve(a, convolve(b, d)), 5),
                     "associativity");
            c.expect(equal_up_to(convolve(delta(n, Z), a), a, 5), "delta identity");
        }
    }
    { // F(T1*T2) = (F T1)*T2
        std::mt19937_64 rng(1002);
        for (int i = 0; i < cases && c.ok; ++i) {
            std::size_t n = 1 + (i % 2);
            DiffOperator f = random_operator(rng, n, Z, i % 3 != 0);
            Copolynomial t1 = random_copoly(rng, n, 5, Z);
            Copolynomial t2 = random_copoly(rng, n, 5, Z);
            c.expect(equal_up_to(apply(f, convolve(t1, t2)), convolve(apply(f, t1), t2), 5),
                     "operator through convolution");
        }
    }
    { // F o F^-1 = F^-1 o F = id
        std::mt19937_64 rng(1003);
        for (int i = 0; i < cases && c.ok; ++i) {
            std::size_t n = 1 + (i % 2);
            DiffOperator f = random_operator(rng, n, Q, true);
            Copolynomial t = random_copoly(rng, n, 5, Q);
            c.expect(equal_up_to(apply(f, neumann_inverse_apply(f, t)), t, 5), "F(F^-1 T) = T");
            c.expect(equal_up_to(neumann_inverse_apply(f, apply(f, t)), t, 5), "F^-1(F T) = T");
        }
    }
    { // solve = E * T
        std::mt19937_64 rng(1004);
        for (int i = 0; i < cases && c.ok; ++i) {
            std::size_t n = 1 + (i % 2);
            DiffOperator f = random_operator(rng, n, Q, true);
            Copolynomial t = random_copoly(rng, n, 5, Q);
            c.expect(equal_up_to(solve(f, t), convolve(fundamental_solution(f), t), 5),
                     "solution as convolution");
        }
    }
    { // Parseval (Q)
        std::mt19937_64 rng(1005);
        std::uniform_int_distribution<long> coeff(-9, 9);
        for (int i = 0; i < cases && c.ok; ++i) {
            std::size_t n = 1 + (i % 2);
            Copolynomial t = random_copoly(rng, n, 5, Q);
            Polynomial p(n, Q);
            for (const MultiIndex& alpha : enumerate_indices(n, 5)) {
                p.set_coefficient(alpha, RingElement::from_integer(Q, coeff(rng)));
            }
            c.expect(residue_pairing(laplace(t, 5), laplace_poly(p)) == t.apply(p), "Parseval");
        }
    }
    { // convolution theorem (Q)
        std::mt19937_64 rng(1006);
        for (int i = 0; i < cases && c.ok; ++i) {
            std::size_t n = 1 + (i % 2);
            Copolynomial a = random_copoly(rng, n, 5, Q);
            Copolynomial b = random_copoly(rng, n, 5, Q);
            c.expect(series_mul(laplace(a, 5), laplace(b, 5)) == laplace(convolve(a, b), 5),
                     "convolution theorem");
        }
    }
    { // Cauchy route equivalence (Q)
        std::mt19937_64 rng(1007);
        for (int i = 0; i < cases && c.ok; ++i) {
            std::size_t n = 1 + (i % 2);
            DiffOperator f = random_operator(rng, n, Q, i % 2 == 0);
            Copolynomial qq = random_copoly(rng, n, 4, Q);
            CopolySeries direct = cauchy_solve(f, qq, 3);
            CopolySeries byconv = cauchy_solve_by_convolution(f, qq, 3);
            for (std::size_t k = 0; k <= 3 && c.ok; ++k) {
                c.expect(equal_up_to(direct.coefficient(k), byconv.coefficient(k), 4),
                         "route equivalence at k=" + std::to_string(k));
            }
        }
    }
    { // divisibility soundness over Z with a0 = 0
        std::mt19937_64 rng(1008);
        for (int i = 0; i < cases && c.ok; ++i) {
            std::size_t n = 1 + (i % 2);
            DiffOperator f = random_operator(rng, n, Z, false);
            Copolynomial qq = random_copoly(rng, n, 5, Z);
            CopolySeries u = cauchy_solve(f, qq, 3);
            try {
                for (std::size_t k = 0; k <= 3; ++k) {
                    for (const MultiIndex& alpha : enumerate_indices(n, 4)) {
                        u.coefficient(k).moment(alpha);
                    }
                }
            } catch (const DivisibilityFailure&) {
                c.fail("unexpected DivisibilityFailure with a0 = 0 over Z");
            }
        }
    }
    return c;
}

// 11. Connections report for F in {I, -I, Lap + I}.
Check criterion11() {
    Check c;
    std::vector<DiffOperator> ops = {
        DiffOperator::identity(1, Q),
        DiffOperator::from_terms(1, Q, {{MultiIndex::zero(1), q(-1)}}),
        DiffOperator::from_terms(1, Q, {{MultiIndex::unit(1, 0, 2), q(1)},
                                        {MultiIndex::zero(1), q(1)}}),
    };
    const char* names[] = {"I", "-I", "Lap+I"};
    for (std::size_t i = 0; i < ops.size(); ++i) {
        ConnectionsReport r = cross_check_connections(ops[i], 3, 4);
        c.expect(r.operator_from_cauchy, std::string(names[i]) + ": identity (i)");
        c.expect(r.cauchy_from_operator, std::string(names[i]) + ": identity (ii)");
        c.expect(r.space_time_factorization, std::string(names[i]) + ": identity (iii)");
    }
    return c;
}

// 12. Characteristic-2 non-uniqueness witness up to k = 6.
Check criterion12() {
    Check c;
    RingSpec f2 = RingSpec::mod(2);
    DiffOperator f =
        DiffOperator::from_terms(1, f2, {{MultiIndex::unit(1, 0), RingElement::one(f2)}});
    Copolynomial d = delta(1, f2);
    CopolySeries u = CopolySeries::from_coefficients(
        1, f2, {zero_copolynomial(1, f2), zero_copolynomial(1, f2), d, apply(f, d)});
    c.expect(!equal_up_to(u.coefficient(2), zero_copolynomial(1, f2), 6), "witness is trivial");
    c.expect(equal_up_to(u.coefficient(0), zero_copolynomial(1, f2), 6), "nonzero initial data");
    CopolySeries lhs = series_d_dt(u);
    CopolySeries rhs = series_apply_op(f, u);
    for (std::size_t k = 0; k <= 6; ++k) {
        c.expect(equal_up_to(lhs.coefficient(k), rhs.coefficient(k), 6),
                 "equation fails at k=" + std::to_string(k));
    }
    return c;
}

} // namespace

int main() {
    struct Item {
        int id;
        const char* name;
        std::function<Check()> run;
    };
    std::vector<Item> items = {
        {1, "Helmholtz fundamental solution closed form", criterion1},
        {2, "heat-with-mass closed form and Laplace route", criterion2},
        {3, "mixed operator moment table", criterion3},
        {4, "transport operator moment table", criterion4},
        {5, "exponential-family convolution identity both routes", criterion5},
        {6, "heat Cauchy fundamental tables", criterion6},
        {7, "transport Cauchy fundamental equals shifted delta", criterion7},
        {8, "non-existence over Z, existence over Q", criterion8},
        {9, "polynomial Poisson formula", criterion9},
        {10, "randomized property suites", criterion10},
        {11, "fundamental-solution connection identities", criterion11},
        {12, "characteristic-2 non-uniqueness witness", criterion12},
    };

    bool all_ok = true;
    double total = 0.0;
    for (const Item& item : items) {
        auto start = std::chrono::steady_clock::now();
        Check result;
        try {
            result = item.run();
        } catch (const std::exception& e) {
            result.fail(std::string("exception: ") + e.what());
        }
        double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        total += secs;
        std::ostringstream line;
        line << (result.ok ? "PASS" : "FAIL") << " criterion " << item.id << ": " << item.name
             << " [" << secs << "s]";
        if (!result.ok) line << " -- " << result.detail;
        std::cout << line.str() << "\n";
        all_ok = all_ok && result.ok;
    }
    if (total > 120.0) {
        std::cout << "FAIL runtime budget: " << total << "s exceeds 120s\n";
        all_ok = false;
    } else {
        std::cout << "PASS runtime budget: " << total << "s\n";
    }
    return all_ok ? 0 : 1;
}
