#pragma once

#include <functional>
#include <map>
#include <memory>
#include <mutex>
#include <vector>

#include "copoly/copolynomial.hpp"
#include "copoly/diff_operator.hpp"

namespace copoly {

namespace detail {

// Lazy, idempotent coefficient store for a formal power series in t. The
// generator runs outside the lock so it may recurse into earlier
// coefficients.
class SeriesState {
public:
    using Generator = std::function<Copolynomial(std::size_t)>;

    const Copolynomial& at(std::size_t k);
    void set_generator(Generator gen) { gen_ = std::move(gen); }

private:
    Generator gen_;
    std::map<std::size_t, Copolynomial> memo_;
    std::mutex mu_;
};

} // namespace detail

// Formal power series u(t,x) = sum_k u_k(x) t^k with copolynomial
// coefficients, extended lazily. Evaluation against a polynomial is
// coefficient-wise.
class CopolySeries {
public:
    using Generator = detail::SeriesState::Generator;

    CopolySeries(std::size_t n, RingSpec ring, Generator gen);

    // Finite coefficient list, zero beyond.
    static CopolySeries from_coefficients(std::size_t n, const RingSpec& ring,
                                          std::vector<Copolynomial> coeffs);
    // u_0 given, u_k = step(k, u_{k-1}) for k >= 1.
    static CopolySeries from_recursion(Copolynomial u0,
                                       std::function<Copolynomial(std::size_t, const Copolynomial&)> step);

    std::size_t vars() const { return n_; }
    const RingSpec& ring() const { return ring_; }

    const Copolynomial& coefficient(std::size_t k) const;

private:
    std::size_t n_;
    RingSpec ring_;
    std::shared_ptr<detail::SeriesState> st_;
};

// d/dt: coefficient k of the result is (k+1) u_{k+1}.
CopolySeries series_d_dt(const CopolySeries& u);
// F applied coefficient-wise.
CopolySeries series_apply_op(const DiffOperator& op, const CopolySeries& u);
// T * u_k coefficient-wise.
CopolySeries series_convolve(const Copolynomial& t, const CopolySeries& u);

struct CauchyOptions {
    // Skip the theorem-hypothesis check (exploratory use only, e.g. positive
    // characteristic counterexamples).
    bool override_hypotheses = false;
};

// Solves du/dt = Fu, u(0,.) = Q by the recursion u_0 = Q,
// (k+1) u_{k+1} = F u_k with per-moment exact division. Requires either
// (characteristic 0 and a_0 = 0) or a ring containing the rationals;
// otherwise HypothesisViolation unless overridden. A failing division
// surfaces lazily as DivisibilityFailure at the offending (k, alpha) -- the
// non-existence detection. kmax only bounds how much of the series callers
// materialize; coefficients stay lazy.
CopolySeries cauchy_solve(const DiffOperator& op, const Copolynomial& q, std::size_t kmax,
                          CauchyOptions options = {});

// E_C(t,x) = sum_k F^k delta / k! t^k.
CopolySeries cauchy_fundamental(const DiffOperator& op, std::size_t kmax,
                                CauchyOptions options = {});

// u = E_C * Q (coefficient-wise convolution with the initial condition).
CopolySeries cauchy_solve_by_convolution(const DiffOperator& op, const Copolynomial& q,
                                         std::size_t kmax, CauchyOptions options = {});

// Polynomial solution of du/dt = a^2 u_xx, u(0,.) = Q for univariate Q over
// a characteristic-0 ring:  u = sum_k a^{2k} Q^{(2k)} t^k / k!.  The
// divisions Q^{(2k)}/k! are exact integer-combination scalings, so the
// result stays in K; the series stops once 2k > deg Q.
std::vector<Polynomial> cauchy_solve_polynomial(const RingElement& a, const Polynomial& q,
                                                std::size_t kmax);

// v(t,x) = sum_k a^k Laplacian^k Q t^{k+1} / (k+1)!, the unique solution of
// dv/dt = a Lap v + Q, v(0,.) = 0. Requires a ring containing the rationals.
CopolySeries solve_inhomogeneous_heat(const RingElement& a, const Copolynomial& q,
                                      std::size_t kmax);

// Coefficient-wise check that dv/dt = a Lap v + Q and v_0 = 0 up to
// (kmax, degree N).
bool check_inhomogeneous_heat(const CopolySeries& v, const RingElement& a, const Copolynomial& q,
                              std::size_t kmax, unsigned degree_bound);

// Coefficient-wise check that d/dt u = F u up to kmax-1 and u_0 = Q up to
// degree N.
bool check_cauchy_solution(const CopolySeries& u, const DiffOperator& op, const Copolynomial& q,
                           std::size_t kmax, unsigned degree_bound);

struct ConnectionsReport {
    // E(x) = (F^{-1} E_C)(0, x).
    bool operator_from_cauchy = false;
    // E_C(t,x) = sum_k F^{k+1} E / k! t^k.
    bool cauchy_from_operator = false;
    // Fundamental solution of d/dt - F on (t,x) equals
    // (F^{-1} d/dt - I)^{-1} (delta(t) (x) E(x)).
    bool space_time_factorization = false;

    bool all() const {
        return operator_from_cauchy && cauchy_from_operator && space_time_factorization;
    }
};

// Verifies the three interconversion identities between E(x), E_C(t,x) and
// the space-time fundamental solution, up to (kmax, degree N). Requires a_0
// invertible and a ring containing the rationals.
ConnectionsReport cross_check_connections(const DiffOperator& op, std::size_t kmax,
                                          unsigned degree_bound);

// The operator on (t, x_1..x_n) acting as F in the x-variables with t inert.
DiffOperator lift_to_time(const DiffOperator& op);

// d/dt - F on (t, x_1..x_n).
DiffOperator time_minus(const DiffOperator& op);

} // namespace copoly
