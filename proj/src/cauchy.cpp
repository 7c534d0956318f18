#include "copoly/cauchy.hpp"

namespace copoly {

namespace detail {

const Copolynomial& SeriesState::at(std::size_t k) {
    {
        std::lock_guard<std::mutex> lock(mu_);
        auto it = memo_.find(k);
        if (it != memo_.end()) return it->second;
    }
    Copolynomial value = gen_(k);
    std::lock_guard<std::mutex> lock(mu_);
    return memo_.insert_or_assign(k, std::move(value)).first->second;
}

} // namespace detail

CopolySeries::CopolySeries(std::size_t n, RingSpec ring, Generator gen)
    : n_(n), ring_(std::move(ring)), st_(std::make_shared<detail::SeriesState>()) {
    st_->set_generator(std::move(gen));
}

CopolySeries CopolySeries::from_coefficients(std::size_t n, const RingSpec& ring,
                                             std::vector<Copolynomial> coeffs) {
    auto shared = std::make_shared<std::vector<Copolynomial>>(std::move(coeffs));
    return CopolySeries(n, ring, [shared, n, ring](std::size_t k) {
        return k < shared->size() ? (*shared)[k] : zero_copolynomial(n, ring);
    });
}

CopolySeries CopolySeries::from_recursion(
    Copolynomial u0, std::function<Copolynomial(std::size_t, const Copolynomial&)> step) {
    std::size_t n = u0.vars();
    RingSpec ring = u0.ring();
    auto st = std::make_shared<detail::SeriesState>();
    std::weak_ptr<detail::SeriesState> weak = st;
    st->set_generator([u0, step, weak](std::size_t k) {
        if (k == 0) return u0;
        auto self = weak.lock();
        return step(k, self->at(k - 1));
    });
    CopolySeries s(n, ring, nullptr);
    s.st_ = std::move(st);
    return s;
}

const Copolynomial& CopolySeries::coefficient(std::size_t k) const { return st_->at(k); }

CopolySeries series_d_dt(const CopolySeries& u) {
    return CopolySeries(u.vars(), u.ring(), [u](std::size_t k) {
        return scaled(u.coefficient(k + 1),
                      RingElement::from_integer(u.ring(), mpz_class(k + 1)));
    });
}

CopolySeries series_apply_op(const DiffOperator& op, const CopolySeries& u) {
    if (op.vars() != u.vars() || op.ring() != u.ring()) {
        throw std::logic_error("series operator application dimension/ring mismatch");
    }
    return CopolySeries(u.vars(), u.ring(),
                        [op, u](std::size_t k) { return apply(op, u.coefficient(k)); });
}

CopolySeries series_convolve(const Copolynomial& t, const CopolySeries& u) {
    if (t.vars() != u.vars() || t.ring() != u.ring()) {
        throw std::logic_error("series convolution dimension/ring mismatch");
    }
    return CopolySeries(u.vars(), u.ring(),
                        [t, u](std::size_t k) { return convolve(t, u.coefficient(k)); });
}

namespace {

// Positive characteristic breaks uniqueness and the divisibility detection,
// so it is refused unless explicitly overridden. Characteristic-0 rings
// proceed: when (a_0 = 0) or the ring contains the rationals a solution is
// guaranteed, otherwise non-existence surfaces as DivisibilityFailure at the
// offending coefficient.
void check_hypotheses(const DiffOperator& op, const CauchyOptions& options) {
    if (options.override_hypotheses) return;
    const RingSpec& ring = op.ring();
    if (!ring.contains_rationals() && ring.characteristic() != 0) {
        throw HypothesisViolation("Cauchy solving over " + ring.to_string() +
                                  " (characteristic " + ring.characteristic().get_str() +
                                  ") needs an explicit override");
    }
}

// Per-moment division of all moments by k, reporting failures against the
// series coefficient index.
Copolynomial divide_moments_at(const Copolynomial& t, std::size_t coeff_index) {
    mpz_class k(static_cast<unsigned long>(coeff_index));
    return Copolynomial(
        t.vars(), t.ring(),
        [t, k, coeff_index](const MultiIndex& beta) {
            try {
                return exact_div(t.moment(beta), k);
            } catch (const NotDivisible&) {
                throw DivisibilityFailure(
                    static_cast<long>(coeff_index), beta.exponents(),
                    "coefficient u_" + std::to_string(coeff_index) + " at " + beta.to_string() +
                        ": " + t.moment(beta).to_string() + " is not divisible by " + k.get_str() +
                        " in " + t.ring().to_string());
            }
        },
        t.provenance() + "/" + k.get_str());
}

} // namespace

CopolySeries cauchy_solve(const DiffOperator& op, const Copolynomial& q, std::size_t kmax,
                          CauchyOptions options) {
    if (op.vars() != q.vars() || op.ring() != q.ring()) {
        throw std::logic_error("Cauchy problem dimension/ring mismatch");
    }
    (void)kmax; // coefficients stay lazy; kmax only guides materialization
    check_hypotheses(op, options);
    return CopolySeries::from_recursion(q, [op](std::size_t k, const Copolynomial& prev) {
        return divide_moments_at(apply(op, prev), k);
    });
}

CopolySeries cauchy_fundamental(const DiffOperator& op, std::size_t kmax, CauchyOptions options) {
    return cauchy_solve(op, delta(op.vars(), op.ring()), kmax, options);
}

CopolySeries cauchy_solve_by_convolution(const DiffOperator& op, const Copolynomial& q,
                                         std::size_t kmax, CauchyOptions options) {
    if (op.vars() != q.vars() || op.ring() != q.ring()) {
        throw std::logic_error("Cauchy problem dimension/ring mismatch");
    }
    return series_convolve(q, cauchy_fundamental(op, kmax, options));
}

std::vector<Polynomial> cauchy_solve_polynomial(const RingElement& a, const Polynomial& q,
                                                std::size_t kmax) {
    if (q.vars() != 1) throw HypothesisViolation("polynomial Cauchy solver is univariate");
    if (a.spec().characteristic() != 0) {
        throw HypothesisViolation("polynomial Cauchy solver needs characteristic 0, got " +
                                  a.spec().to_string());
    }
    const RingSpec& ring = q.ring();
    long deg = q.degree();
    std::vector<Polynomial> out;
    RingElement a2k = RingElement::one(ring);
    for (std::size_t k = 0; 2 * static_cast<long>(k) <= std::max(deg, 0L) && k <= kmax; ++k) {
        // coefficient of t^k:  a^{2k} sum_beta c_beta (ff(beta,2k)/k!) x^{beta-2k};
        // ff(m,2k)/k! = (2k)!/k! C(m,2k) is an integer, so the division is exact.
        Polynomial uk(1, ring);
        mpz_class kfact = factorial(static_cast<unsigned long>(k));
        for (const auto& [beta, c] : q.terms()) {
            unsigned m = beta[0];
            if (m < 2 * k) continue;
            MultiIndex two_k = MultiIndex(std::vector<unsigned>{static_cast<unsigned>(2 * k)});
            mpz_class ff = falling_factorial(beta, two_k);
            if (!mpz_divisible_p(ff.get_mpz_t(), kfact.get_mpz_t())) {
                throw DivisibilityFailure(static_cast<long>(k), beta.exponents(),
                                          "falling factorial not divisible by k!");
            }
            mpz_class scale;
            mpz_divexact(scale.get_mpz_t(), ff.get_mpz_t(), kfact.get_mpz_t());
            MultiIndex rest = beta - two_k;
            uk.set_coefficient(rest, uk.coefficient(rest) + (c * a2k).scaled(scale));
        }
        out.push_back(std::move(uk));
        a2k = a2k * a * a;
    }
    if (out.empty()) out.push_back(Polynomial::zero(1, ring));
    return out;
}

CopolySeries solve_inhomogeneous_heat(const RingElement& a, const Copolynomial& q,
                                      std::size_t kmax) {
    (void)kmax;
    const RingSpec& ring = q.ring();
    if (!ring.contains_rationals()) {
        throw RingCapability("inhomogeneous heat formula needs a ring containing the rationals");
    }
    DiffOperator lap = laplacian_operator(q.vars(), ring);
    // v_k = a^{k-1} Lap^{k-1} Q / k!  for k >= 1, v_0 = 0; realized as the
    // recursion v_1 = Q, (k+1) v_{k+1} = a Lap v_k.
    CopolySeries tail = CopolySeries::from_recursion(
        q, [lap, a](std::size_t k, const Copolynomial& prev) {
            return divide_moments_at(scaled(apply(lap, prev), a), k + 1);
        });
    Copolynomial zero = zero_copolynomial(q.vars(), ring);
    return CopolySeries(q.vars(), ring, [tail, zero](std::size_t k) {
        return k == 0 ? zero : tail.coefficient(k - 1);
    });
}

bool check_inhomogeneous_heat(const CopolySeries& v, const RingElement& a, const Copolynomial& q,
                              std::size_t kmax, unsigned degree_bound) {
    DiffOperator lap = laplacian_operator(q.vars(), q.ring());
    CopolySeries lhs = series_d_dt(v);
    CopolySeries rhs = series_apply_op(lap, v);
    for (std::size_t k = 0; k <= kmax; ++k) {
        Copolynomial want = scaled(rhs.coefficient(k), a);
        if (k == 0) want = want + q;
        if (!equal_up_to(lhs.coefficient(k), want, degree_bound)) return false;
    }
    return equal_up_to(v.coefficient(0), zero_copolynomial(q.vars(), q.ring()), degree_bound);
}

bool check_cauchy_solution(const CopolySeries& u, const DiffOperator& op, const Copolynomial& q,
                           std::size_t kmax, unsigned degree_bound) {
    if (!equal_up_to(u.coefficient(0), q, degree_bound)) return false;
    CopolySeries lhs = series_d_dt(u);
    CopolySeries rhs = series_apply_op(op, u);
    for (std::size_t k = 0; k + 1 <= kmax; ++k) {
        if (!equal_up_to(lhs.coefficient(k), rhs.coefficient(k), degree_bound)) return false;
    }
    return true;
}

DiffOperator lift_to_time(const DiffOperator& op) {
    std::size_t n = op.vars();
    return DiffOperator(
        n + 1, op.ring(),
        [op, n](const MultiIndex& gamma) {
            if (gamma[0] != 0) return RingElement::zero(op.ring());
            std::vector<unsigned> rest(gamma.exponents().begin() + 1, gamma.exponents().end());
            return op.coefficient(MultiIndex(std::move(rest)));
        },
        op.name() + "_x");
}

DiffOperator time_minus(const DiffOperator& op) {
    std::size_t n = op.vars();
    DiffOperator lifted = lift_to_time(op);
    MultiIndex ddt = MultiIndex::unit(n + 1, 0);
    return DiffOperator(
        n + 1, op.ring(),
        [lifted, ddt](const MultiIndex& gamma) {
            RingElement c = -lifted.coefficient(gamma);
            if (gamma == ddt) c += RingElement::one(lifted.ring());
            return c;
        },
        "d/dt-" + op.name());
}

ConnectionsReport cross_check_connections(const DiffOperator& op, std::size_t kmax,
                                          unsigned degree_bound) {
    const RingSpec& ring = op.ring();
    if (!ring.contains_rationals()) {
        throw RingCapability("connections report needs a ring containing the rationals");
    }
    RingElement inv_a0 = invert(op.constant_term()); // NotInvertible when a_0 is not a unit

    ConnectionsReport report;
    Copolynomial e = fundamental_solution(op);
    CopolySeries ec = cauchy_fundamental(op, kmax);

    // (i) E(x) = (F^{-1} E_C)(0, x).
    report.operator_from_cauchy =
        equal_up_to(neumann_inverse_apply(op, ec.coefficient(0)), e, degree_bound);

    // (ii) E_C coefficient k equals F^{k+1} E / k!.
    report.cauchy_from_operator = true;
    Copolynomial power = apply(op, e); // F E
    for (std::size_t k = 0; k <= kmax; ++k) {
        if (k > 0) power = apply(op, power);
        RingElement inv_kfact =
            invert(RingElement::from_integer(ring, factorial(static_cast<unsigned long>(k))));
        if (!equal_up_to(scaled(power, inv_kfact), ec.coefficient(k), degree_bound)) {
            report.cauchy_from_operator = false;
            break;
        }
    }

    // (iii) fundamental solution of d/dt - F on (t,x) vs the factorization
    // route -sum_k (F^{-1} d/dt)^k applied to delta(t) (x) E(x).
    Copolynomial direct = fundamental_solution(time_minus(op));
    DiffOperator lifted = lift_to_time(op);
    MultiIndex ddt = MultiIndex::unit(op.vars() + 1, 0);
    MomentTransformer a{
        "F^-1 d/dt", 1, [lifted, ddt](const Copolynomial& t) {
            return neumann_inverse_apply(lifted, derivative(t, ddt));
        }};
    Copolynomial routed = scaled(neumann_sum(a, tensor(delta(1, ring), e)),
                                 -RingElement::one(ring));
    report.space_time_factorization = equal_up_to(direct, routed, degree_bound);
    return report;
}

} // namespace copoly
