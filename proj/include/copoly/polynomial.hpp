#pragma once

#include <map>
#include <string>
#include <vector>

#include "copoly/multi_index.hpp"
#include "copoly/ring.hpp"

namespace copoly {

// Sparse multivariate polynomial over K; terms map multi-indices to nonzero
// coefficients.
class Polynomial {
public:
    using TermMap = std::map<MultiIndex, RingElement>;

    Polynomial(std::size_t n, RingSpec ring) : n_(n), ring_(std::move(ring)) {}
    Polynomial(std::size_t n, RingSpec ring, TermMap terms);

    static Polynomial zero(std::size_t n, const RingSpec& ring) { return Polynomial(n, ring); }
    static Polynomial constant(std::size_t n, const RingElement& c);
    static Polynomial monomial(const MultiIndex& alpha, const RingElement& c);

    std::size_t vars() const { return n_; }
    const RingSpec& ring() const { return ring_; }
    const TermMap& terms() const { return terms_; }

    bool is_zero() const { return terms_.empty(); }
    // Max |alpha| over stored terms; -1 for the zero polynomial.
    long degree() const;

    RingElement coefficient(const MultiIndex& alpha) const;
    void set_coefficient(const MultiIndex& alpha, const RingElement& c);

    Polynomial operator+(const Polynomial& o) const;
    Polynomial operator-(const Polynomial& o) const;
    Polynomial operator*(const Polynomial& o) const;
    Polynomial operator-() const;
    Polynomial scaled(const RingElement& c) const;

    bool operator==(const Polynomial& o) const;
    bool operator!=(const Polynomial& o) const { return !(*this == o); }

    std::string to_string() const;

private:
    std::size_t n_;
    RingSpec ring_;
    TermMap terms_;
};

// D^alpha p: each term c*x^beta with alpha <= beta contributes
// c * falling_factorial(beta, alpha) * x^(beta-alpha).
Polynomial derivative(const Polynomial& p, const MultiIndex& alpha);

// p_alpha, the coefficient of h^alpha in p(x+h), computed by binomial
// expansion so that it is well defined over every K (no division by alpha!).
// Over characteristic 0 it coincides with D^alpha p / alpha!.
Polynomial taylor_coefficient(const Polynomial& p, const MultiIndex& alpha);

// p(x+h) = sum_alpha p_alpha(x) h^alpha.
Polynomial shift(const Polynomial& p, const std::vector<RingElement>& h);

RingElement evaluate(const Polynomial& p, const std::vector<RingElement>& point);

} // namespace copoly
