#include <doctest.h>

#include <atomic>
#include <random>

#include "copoly/copolynomial.hpp"

using namespace copoly;

namespace {

const RingSpec Z = RingSpec::integers();

MultiIndex mi(std::vector<unsigned> e) { return MultiIndex(std::move(e)); }
RingElement z(long v) { return RingElement::from_integer(Z, v); }

Copolynomial e_a(long a) { return exp_family(z(a)); }

Polynomial poly(const std::vector<std::pair<std::vector<unsigned>, long>>& terms,
                const RingSpec& ring = Z) {
    Polynomial p(terms.front().first.size(), ring);
    for (const auto& [alpha, c] : terms) {
        p.set_coefficient(MultiIndex(alpha), RingElement::from_integer(ring, c));
    }
    return p;
}

Copolynomial random_copoly(std::mt19937_64& rng, std::size_t n, unsigned maxdeg) {
    std::uniform_int_distribution<long> value(-9, 9);
    std::map<MultiIndex, RingElement> table;
    for (const MultiIndex& alpha : enumerate_indices(n, maxdeg)) {
        table.insert_or_assign(alpha, z(value(rng)));
    }
    return from_moments(n, Z, std::move(table));
}

} // namespace

TEST_CASE("delta moments and action") {
    Copolynomial d2 = delta(2, Z);
    CHECK(d2.moment(mi({0, 0})) == z(1));
    CHECK(d2.moment(mi({2, 0})).is_zero());
    CHECK(d2.moment(mi({0, 1})).is_zero());
    CHECK(delta(1, Z).apply(poly({{{2}, 3}, {{0}, -4}})) == z(-4));
    CHECK(delta(1, Z).apply(poly({{{2}, 1}, {{0}, 7}})) == z(7));
}

TEST_CASE("exp family moments (E_a, x^k) = a^k k!") {
    CHECK(e_a(2).moment(mi({3})) == z(48));
    CHECK(e_a(1).moment(mi({2})) == z(2));
    CHECK(e_a(2).moment(mi({2})) == z(8));
    CHECK(e_a(5).apply(poly({{{0}, 1}, {{1}, 1}})) == z(6));
    CHECK(e_a(1).apply(poly({{{2}, 1}})) == z(2));
    CHECK(equal_up_to(e_a(0), delta(1, Z), 10));
}

TEST_CASE("derivative") {
    CHECK(derivative(delta(1, Z), mi({2})).moment(mi({2})) == z(2));
    CHECK(derivative(e_a(1), mi({1})).moment(mi({2})) == z(-2));
    // (D^alpha delta, x^beta) = (-1)^|beta| beta! at alpha=beta, else 0
    for (unsigned a = 0; a <= 3; ++a) {
        for (unsigned b = 0; b <= 3; ++b) {
            RingElement m = derivative(delta(1, Z), mi({a})).moment(mi({b}));
            if (a == b) {
                mpz_class want = factorial(static_cast<unsigned long>(b));
                if (b % 2 != 0) want = -want;
                CHECK(m == RingElement::from_integer(Z, want));
            } else {
                CHECK(m.is_zero());
            }
        }
    }
}

TEST_CASE("scaled derivative works over any characteristic") {
    CHECK(scaled_derivative(delta(1, Z), mi({2})).moment(mi({2})) == z(1));
    // alpha! * (D^alpha T/alpha!) = D^alpha T
    Copolynomial t = e_a(2);
    MultiIndex alpha = mi({2});
    for (unsigned b = 0; b <= 4; ++b) {
        CHECK(scaled_derivative(t, alpha).moment(mi({b})).scaled(factorial(alpha)) ==
              derivative(t, alpha).moment(mi({b})));
    }
    RingSpec f2 = RingSpec::mod(2);
    CHECK(scaled_derivative(delta(1, f2), mi({1})).moment(mi({2})).is_zero());
}

TEST_CASE("shift") {
    Copolynomial shifted = shift(delta(1, Z), {z(3)});
    CHECK(shifted.moment(mi({2})) == z(9)); // (delta, (x-3)^2) = 9
    Copolynomial t = e_a(2);
    CHECK(equal_up_to(shift(t, {z(0)}), t, 6));
    // (T(x+h))(x-h) = T
    CHECK(equal_up_to(shift(shift(t, {z(4)}), {z(-4)}), t, 6));
}

TEST_CASE("convolution examples") {
    std::mt19937_64 rng(17);
    Copolynomial t = random_copoly(rng, 1, 6);
    CHECK(equal_up_to(convolve(delta(1, Z), t), t, 6));
    CHECK(equal_up_to(convolve(t, delta(1, Z)), t, 6));

    CHECK(convolve(e_a(2), e_a(1)).moment(mi({2})) == z(14));

    Copolynomial dp = derivative(delta(1, Z), mi({1}));
    CHECK(convolve(dp, dp).moment(mi({2})) ==
          derivative(delta(1, Z), mi({2})).moment(mi({2})));
    CHECK(convolve(dp, dp).moment(mi({2})) == z(2));
}

TEST_CASE("convolution is commutative and associative with identity delta") {
    std::mt19937_64 rng(23);
    for (int i = 0; i < 40; ++i) {
        std::size_t n = 1 + (i % 2);
        Copolynomial a = random_copoly(rng, n, 4);
        Copolynomial b = random_copoly(rng, n, 4);
        Copolynomial c = random_copoly(rng, n, 4);
        CHECK(equal_up_to(convolve(a, b), convolve(b, a), 4));
        CHECK(equal_up_to(convolve(convolve(a, b), c), convolve(a, convolve(b, c)), 4));
        CHECK(equal_up_to(convolve(delta(n, Z), a), a, 4));
    }
}

TEST_CASE("derivative passes through convolution") {
    std::mt19937_64 rng(29);
    for (int i = 0; i < 30; ++i) {
        Copolynomial a = random_copoly(rng, 1, 5);
        Copolynomial b = random_copoly(rng, 1, 5);
        MultiIndex beta = mi({static_cast<unsigned>(1 + (i % 2))});
        CHECK(equal_up_to(derivative(convolve(a, b), beta), convolve(derivative(a, beta), b), 4));
    }
}

TEST_CASE("derivative pairs against polynomial derivative") {
    std::mt19937_64 rng(31);
    for (int i = 0; i < 30; ++i) {
        Copolynomial t = random_copoly(rng, 1, 6);
        Polynomial p = poly({{{3}, 2}, {{1}, -5}, {{0}, 1}});
        MultiIndex alpha = mi({2});
        RingElement lhs = derivative(t, alpha).apply(p);
        RingElement rhs = t.apply(derivative(p, alpha)); // even |alpha|
        CHECK(lhs == rhs);
    }
}

TEST_CASE("linearity of the action") {
    std::mt19937_64 rng(37);
    std::uniform_int_distribution<long> dist(-9, 9);
    for (int i = 0; i < 30; ++i) {
        Copolynomial t = random_copoly(rng, 1, 5);
        Polynomial p = poly({{{2}, dist(rng)}, {{0}, dist(rng)}});
        Polynomial q = poly({{{1}, dist(rng)}, {{0}, dist(rng)}});
        RingElement a = z(dist(rng)), b = z(dist(rng));
        CHECK(t.apply(p.scaled(a) + q.scaled(b)) == a * t.apply(p) + b * t.apply(q));
    }
}

TEST_CASE("tensor product") {
    Copolynomial dt = delta(1, Z);
    CHECK(equal_up_to(tensor(dt, dt), delta(2, Z), 5));
    Copolynomial te = tensor(dt, e_a(3));
    CHECK(te.moment(mi({0, 2})) == z(18)); // a^k k! with a=3, k=2
    CHECK(te.moment(mi({1, 2})).is_zero());
}

TEST_CASE("convolution with a polynomial") {
    Polynomial p = poly({{{2}, 1}, {{1}, 4}, {{0}, -3}});
    CHECK(convolve_poly(delta(1, Z), p) == p);
    CHECK(convolve_poly(derivative(delta(1, Z), mi({1})), poly({{{2}, 1}})) ==
          poly({{{1}, 2}}));
    CHECK(convolve_poly(e_a(1), poly({{{1}, 1}})) == poly({{{1}, 1}, {{0}, -1}}));
}

TEST_CASE("delta expansion reconstructs the functional") {
    Copolynomial d = delta(1, Z);
    auto rows = delta_expansion(d, 0);
    REQUIRE(rows.size() == 1);
    CHECK(rows[0].second == z(1));

    // E_a = sum (-1)^j a^j j! * D^j delta / j!: expansion coefficient at j is
    // (-1)^j (E_a, x^j)
    auto ea_rows = delta_expansion(e_a(2), 3);
    for (const auto& [alpha, c] : ea_rows) {
        mpz_class want = factorial(alpha);
        mpz_class a_pow;
        mpz_ui_pow_ui(a_pow.get_mpz_t(), 2, alpha[0]);
        want *= a_pow;
        if (alpha[0] % 2 != 0) want = -want;
        CHECK(c == RingElement::from_integer(Z, want));
    }

    std::mt19937_64 rng(41);
    for (int i = 0; i < 25; ++i) {
        Copolynomial t = random_copoly(rng, 1, 3);
        auto expansion = delta_expansion(t, 3);
        // reconstruct sum c_alpha D^alpha delta / alpha! and compare on
        // monomials of degree <= 3
        Copolynomial acc = zero_copolynomial(1, Z);
        for (const auto& [alpha, c] : expansion) {
            acc = acc + scaled(scaled_derivative(delta(1, Z), alpha), c);
        }
        CHECK(equal_up_to(acc, t, 3));
    }
}

TEST_CASE("equal_up_to distinguishes by degree") {
    Copolynomial d = delta(1, Z);
    Copolynomial dp = derivative(d, mi({1}));
    CHECK(equal_up_to(d, d, 8));
    CHECK_FALSE(equal_up_to(d, dp, 1));
    CHECK(equal_up_to(e_a(0), d, 10));
}

TEST_CASE("evaluation touches only moments up to deg p") {
    auto touched = std::make_shared<std::atomic<unsigned long>>(0);
    Copolynomial probe(
        1, Z,
        [touched](const MultiIndex& alpha) {
            unsigned long d = alpha.total_degree();
            unsigned long cur = touched->load();
            while (d > cur && !touched->compare_exchange_weak(cur, d)) {
            }
            return RingElement::one(RingSpec::integers());
        },
        "probe");
    Polynomial p = poly({{{3}, 2}, {{0}, 1}});
    probe.apply(p);
    CHECK(touched->load() <= 3);
}

TEST_CASE("memoized moments are stable") {
    int calls = 0;
    Copolynomial t(
        1, Z,
        [&calls](const MultiIndex& alpha) {
            ++calls;
            return RingElement::from_integer(RingSpec::integers(),
                                             mpz_class(alpha.total_degree()));
        },
        "counter");
    CHECK(t.moment(mi({2})) == z(2));
    CHECK(t.moment(mi({2})) == z(2));
    CHECK(calls == 1);
}
