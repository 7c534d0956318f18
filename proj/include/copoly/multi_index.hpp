#pragma once

#include <gmpxx.h>

#include <compare>
#include <cstddef>
#include <string>
#include <vector>

#include "copoly/errors.hpp"

namespace copoly {

// Exponent vector alpha in N_0^n with the combinatorics every module needs.
// All integer results are arbitrary precision; values like (2a)!|a|! outgrow
// machine words quickly.
class MultiIndex {
public:
    MultiIndex() = default;
    explicit MultiIndex(std::vector<unsigned> exponents) : e_(std::move(exponents)) {}
    static MultiIndex zero(std::size_t n) { return MultiIndex(std::vector<unsigned>(n, 0)); }
    // Unit vector with a single exponent k at position j.
    static MultiIndex unit(std::size_t n, std::size_t j, unsigned k = 1);

    std::size_t size() const { return e_.size(); }
    unsigned operator[](std::size_t j) const { return e_[j]; }
    const std::vector<unsigned>& exponents() const { return e_; }

    // |alpha| = sum of the exponents.
    unsigned long total_degree() const;
    bool is_zero() const { return total_degree() == 0; }

    // Componentwise partial order.
    bool leq(const MultiIndex& beta) const;

    MultiIndex operator+(const MultiIndex& o) const;
    // Componentwise difference; requires o <= *this.
    MultiIndex operator-(const MultiIndex& o) const;
    MultiIndex scaled(unsigned c) const;
    // Concatenation (t,x)-style juxtaposition of index blocks.
    MultiIndex concat(const MultiIndex& o) const;

    bool operator==(const MultiIndex& o) const { return e_ == o.e_; }

    // Graded lexicographic order: by |alpha| first, then lexicographically.
    std::strong_ordering operator<=>(const MultiIndex& o) const;

    std::string to_string() const;

private:
    std::vector<unsigned> e_;
};

// alpha! = prod alpha_j!
mpz_class factorial(const MultiIndex& alpha);
mpz_class factorial(unsigned long k);

// prod C(beta_j, alpha_j); requires alpha <= beta.
mpz_class binomial(const MultiIndex& beta, const MultiIndex& alpha);
mpz_class binomial(unsigned long n, unsigned long k);

// beta!/(beta-alpha)! as the falling-factorial product
// prod beta_j(beta_j-1)...(beta_j-alpha_j+1); an integer product, never a
// division, so it embeds into any coefficient ring. Requires alpha <= beta.
mpz_class falling_factorial(const MultiIndex& beta, const MultiIndex& alpha);

// |alpha|!/alpha!, computed as a product of binomials.
mpz_class multinomial(const MultiIndex& alpha);

// All alpha with |alpha| <= degree_bound in graded lexicographic order;
// count is C(n + d, n).
std::vector<MultiIndex> enumerate_indices(std::size_t n, unsigned degree_bound);

// All alpha <= beta componentwise (the box [0,beta]), in graded lex order.
std::vector<MultiIndex> enumerate_box(const MultiIndex& beta);

} // namespace copoly
