#pragma once

#include <functional>
#include <map>
#include <memory>
#include <string>
#include <vector>

#include "copoly/copolynomial.hpp"
#include "copoly/series.hpp"

namespace copoly {

// Linear differential operator of infinite order  F = sum_alpha a_alpha D^alpha
// given by a total coefficient oracle. Evaluating (FT, p) touches only the
// a_alpha with |alpha| <= deg p, so genuinely infinite families are fine.
class DiffOperator {
public:
    using CoeffOracle = std::function<RingElement(const MultiIndex&)>;

    DiffOperator(std::size_t n, RingSpec ring, CoeffOracle coeffs, std::string name);

    static DiffOperator from_terms(std::size_t n, const RingSpec& ring,
                                   std::map<MultiIndex, RingElement> terms,
                                   std::string name = "operator");
    static DiffOperator identity(std::size_t n, const RingSpec& ring);

    std::size_t vars() const { return n_; }
    const RingSpec& ring() const { return ring_; }
    const std::string& name() const { return name_; }

    // a_alpha; memoized.
    const RingElement& coefficient(const MultiIndex& alpha) const;
    // Cached a_0.
    const RingElement& constant_term() const { return a0_; }

private:
    std::size_t n_;
    RingSpec ring_;
    std::string name_;
    std::shared_ptr<detail::MomentCache> coeffs_;
    RingElement a0_;
};

// (FT, x^beta) = sum_{alpha<=beta} a_alpha (-1)^|alpha| ff(beta,alpha) (T, x^(beta-alpha)).
Copolynomial apply(const DiffOperator& op, const Copolynomial& t);

// F acting on an honest polynomial: sum_alpha a_alpha D^alpha p (finite).
Polynomial apply(const DiffOperator& op, const Polynomial& p);

// A named pure map on copolynomials with a declared order-reduction witness:
// an integer r such that evaluating the output at x^beta needs input moments
// only at degrees <= |beta| - r (r = 0 for general transformers). Neumann
// summation requires r >= 1.
struct MomentTransformer {
    std::string name;
    unsigned order_reduction = 0;
    std::function<Copolynomial(const Copolynomial&)> map;
};

// The transformer T -> op(T) with the stated witness (not checked).
MomentTransformer operator_transformer(const DiffOperator& op, unsigned order_reduction);

// sum_{k>=0} A^k T, exact per moment: powers beyond |beta|/r vanish on x^beta.
// Throws NoTerminationWitness when A has r = 0.
Copolynomial neumann_sum(const MomentTransformer& a, const Copolynomial& t);

// The transformer computing sum_{k>=0} A^k; throws NoTerminationWitness if
// A's witness is 0.
MomentTransformer neumann_inverse_transformer(const MomentTransformer& a);

// F^{-1} T = a0^{-1} sum_{k=0}^{|beta|} ((I - a0^{-1}F)^k T, x^beta) per
// moment. Requires a0 invertible.
Copolynomial neumann_inverse_apply(const DiffOperator& op, const Copolynomial& t);

// E = F^{-1} delta; satisfies F E = delta up to any queried degree.
Copolynomial fundamental_solution(const DiffOperator& op);

// The unique solution u of F u = T (a0 invertible); equals E * T.
Copolynomial solve(const DiffOperator& op, const Copolynomial& t);

// The unique polynomial u with F u = p; deg u <= deg p.
Polynomial solve_polynomial(const DiffOperator& op, const Polynomial& p);

// Truncated symbol phi(z) = sum_{|alpha|<=N} a_alpha z^alpha.
TruncatedSeries symbol(const DiffOperator& op, unsigned truncation);

// Named operator families.

// Helmholtz operator Laplace + c I on three variables.
DiffOperator helmholtz_operator(const RingElement& c);
// Heat operator with mass d/dt - a d^2/dx^2 + c I on variables (t, x).
DiffOperator heat_operator(const RingElement& a, const RingElement& c);
// Transport operator d/dt + sum_i s_i d/dx_i + I on variables (t, x_1..x_n).
DiffOperator transport_operator(const std::vector<RingElement>& s);
// d^2/dxdt + d/dx - d/dt - I on variables (t, x).
DiffOperator mixed_xt_operator(const RingSpec& ring);
// The infinite-order operator sum_k (sum_j d/dx_j)^k, with a_alpha = |alpha|!/alpha!.
DiffOperator neumann_sum_operator(std::size_t n, const RingSpec& ring);
// Laplacian sum_j d^2/dx_j^2.
DiffOperator laplacian_operator(std::size_t n, const RingSpec& ring);

} // namespace copoly
