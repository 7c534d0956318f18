#pragma once

#include <functional>
#include <map>
#include <memory>
#include <mutex>
#include <string>
#include <utility>
#include <vector>

#include "copoly/polynomial.hpp"

namespace copoly {

namespace detail {

// Idempotent memo in front of a deterministic moment oracle. Concurrent
// duplicate computation is permitted; values are deterministic, so
// last-write-wins is safe. The oracle runs outside the lock because it may
// recurse into other copolynomials.
class MomentCache {
public:
    using Oracle = std::function<RingElement(const MultiIndex&)>;
    explicit MomentCache(Oracle oracle) : oracle_(std::move(oracle)) {}

    const RingElement& get(const MultiIndex& alpha);

private:
    Oracle oracle_;
    std::map<MultiIndex, RingElement> memo_;
    std::mutex mu_;
};

} // namespace detail

// A copolynomial: a K-linear functional on K[x_1,...,x_n], represented by
// its moment oracle alpha -> (T, x^alpha). Moments determine the functional,
// so every operation below is an oracle transformer. Copies share the memo.
class Copolynomial {
public:
    using Oracle = detail::MomentCache::Oracle;

    Copolynomial(std::size_t n, RingSpec ring, Oracle oracle, std::string provenance);

    std::size_t vars() const { return n_; }
    const RingSpec& ring() const { return ring_; }
    const std::string& provenance() const { return provenance_; }

    // (T, x^alpha); memoized.
    const RingElement& moment(const MultiIndex& alpha) const;

    // (T, p) = sum over terms c_alpha * moment(alpha); touches only moments
    // with |alpha| <= deg p.
    RingElement apply(const Polynomial& p) const;

private:
    std::size_t n_;
    RingSpec ring_;
    std::string provenance_;
    std::shared_ptr<detail::MomentCache> cache_;
};

// (delta, p) = p(0).
Copolynomial delta(std::size_t n, const RingSpec& ring);

// The zero functional.
Copolynomial zero_copolynomial(std::size_t n, const RingSpec& ring);

// One-variable family with moments (E_a, x^k) = a^k k!, i.e.
// E_a = sum_j (-1)^j a^j delta^(j).
Copolynomial exp_family(const RingElement& a);

// Functional given by a finite moment table; zero beyond the table.
Copolynomial from_moments(std::size_t n, const RingSpec& ring,
                          std::map<MultiIndex, RingElement> table);

Copolynomial operator+(const Copolynomial& a, const Copolynomial& b);
Copolynomial operator-(const Copolynomial& a, const Copolynomial& b);
Copolynomial scaled(const Copolynomial& t, const RingElement& c);

// (D^alpha T, x^beta) = (-1)^|alpha| falling_factorial(beta,alpha) * (T, x^(beta-alpha)).
Copolynomial derivative(const Copolynomial& t, const MultiIndex& alpha);

// (D^alpha T / alpha!, x^beta) = (-1)^|alpha| binomial(beta,alpha) * (T, x^(beta-alpha));
// defined over any K since the binomial is an integer.
Copolynomial scaled_derivative(const Copolynomial& t, const MultiIndex& alpha);

// (T(x+h), p) = (T, p(x-h)).
Copolynomial shift(const Copolynomial& t, const std::vector<RingElement>& h);

// Binomial convolution:
// (T1*T2, x^alpha) = sum_{beta<=alpha} binomial(alpha,beta) (T1,x^(alpha-beta)) (T2,x^beta).
Copolynomial convolve(const Copolynomial& a, const Copolynomial& b);

// (T1 (x) T2, x^alpha y^beta) = (T1, x^alpha)(T2, y^beta).
Copolynomial tensor(const Copolynomial& a, const Copolynomial& b);

// (T*p)(x) = sum_{|alpha|<=deg p} (-1)^|alpha| (T, x^alpha) p_alpha(x).
Polynomial convolve_poly(const Copolynomial& t, const Polynomial& p);

// Coefficients (-1)^|alpha| (T, x^alpha) of D^alpha delta / alpha! for
// |alpha| <= degree_bound, in graded lex order. The partial sum they define
// agrees with T on all polynomials of degree <= degree_bound.
std::vector<std::pair<MultiIndex, RingElement>> delta_expansion(const Copolynomial& t,
                                                                unsigned degree_bound);

// Finite proxy for equality: moments agree for all |alpha| <= degree_bound.
bool equal_up_to(const Copolynomial& a, const Copolynomial& b, unsigned degree_bound);

} // namespace copoly
