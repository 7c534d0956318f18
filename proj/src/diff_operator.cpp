#include "copoly/diff_operator.hpp"

#include <mutex>

namespace copoly {

DiffOperator::DiffOperator(std::size_t n, RingSpec ring, CoeffOracle coeffs, std::string name)
    : n_(n),
      ring_(std::move(ring)),
      name_(std::move(name)),
      coeffs_(std::make_shared<detail::MomentCache>(std::move(coeffs))),
      a0_(coeffs_->get(MultiIndex::zero(n))) {}

DiffOperator DiffOperator::from_terms(std::size_t n, const RingSpec& ring,
                                      std::map<MultiIndex, RingElement> terms, std::string name) {
    for (const auto& [alpha, c] : terms) {
        if (alpha.size() != n) throw std::logic_error("operator term dimension mismatch");
    }
    auto shared = std::make_shared<std::map<MultiIndex, RingElement>>(std::move(terms));
    return DiffOperator(
        n, ring,
        [shared, ring](const MultiIndex& alpha) {
            auto it = shared->find(alpha);
            return it == shared->end() ? RingElement::zero(ring) : it->second;
        },
        std::move(name));
}

DiffOperator DiffOperator::identity(std::size_t n, const RingSpec& ring) {
    std::map<MultiIndex, RingElement> terms;
    terms.emplace(MultiIndex::zero(n), RingElement::one(ring));
    return from_terms(n, ring, std::move(terms), "I");
}

const RingElement& DiffOperator::coefficient(const MultiIndex& alpha) const {
    if (alpha.size() != n_) throw std::logic_error("operator coefficient dimension mismatch");
    return coeffs_->get(alpha);
}

Copolynomial apply(const DiffOperator& op, const Copolynomial& t) {
    if (op.vars() != t.vars() || op.ring() != t.ring()) {
        throw std::logic_error("operator application dimension/ring mismatch");
    }
    return Copolynomial(
        t.vars(), t.ring(),
        [op, t](const MultiIndex& beta) {
            RingElement acc = RingElement::zero(t.ring());
            for (const MultiIndex& alpha : enumerate_box(beta)) {
                const RingElement& a = op.coefficient(alpha);
                if (a.is_zero()) continue;
                RingElement term =
                    (a * t.moment(beta - alpha)).scaled(falling_factorial(beta, alpha));
                acc += alpha.total_degree() % 2 != 0 ? -term : term;
            }
            return acc;
        },
        op.name() + "(" + t.provenance() + ")");
}

Polynomial apply(const DiffOperator& op, const Polynomial& p) {
    if (op.vars() != p.vars() || op.ring() != p.ring()) {
        throw std::logic_error("operator application dimension/ring mismatch");
    }
    Polynomial acc(p.vars(), p.ring());
    long deg = p.degree();
    if (deg < 0) return acc;
    for (const MultiIndex& alpha : enumerate_indices(p.vars(), static_cast<unsigned>(deg))) {
        const RingElement& a = op.coefficient(alpha);
        if (a.is_zero()) continue;
        acc = acc + derivative(p, alpha).scaled(a);
    }
    return acc;
}

namespace {

// Lazily materialized sequence T, A(T), A^2(T), ...; each element keeps its
// own moment memo, which is what makes Neumann recursion polynomial instead
// of exponential.
class CopolyChain {
public:
    CopolyChain(Copolynomial base, std::function<Copolynomial(const Copolynomial&)> step)
        : step_(std::move(step)) {
        chain_.push_back(std::move(base));
    }

    const Copolynomial& at(std::size_t k) {
        std::lock_guard<std::mutex> lock(mu_);
        while (chain_.size() <= k) chain_.push_back(step_(chain_.back()));
        return chain_[k];
    }

private:
    std::function<Copolynomial(const Copolynomial&)> step_;
    std::vector<Copolynomial> chain_;
    std::mutex mu_;
};

} // namespace

MomentTransformer operator_transformer(const DiffOperator& op, unsigned order_reduction) {
    return MomentTransformer{
        op.name(), order_reduction,
        [op](const Copolynomial& t) { return apply(op, t); }};
}

Copolynomial neumann_sum(const MomentTransformer& a, const Copolynomial& t) {
    if (a.order_reduction == 0) {
        throw NoTerminationWitness("Neumann summation over '" + a.name +
                                   "' requires an order-reduction witness r >= 1");
    }
    auto chain = std::make_shared<CopolyChain>(t, a.map);
    unsigned r = a.order_reduction;
    return Copolynomial(
        t.vars(), t.ring(),
        [chain, r, ring = t.ring()](const MultiIndex& beta) {
            RingElement acc = RingElement::zero(ring);
            unsigned long cutoff = beta.total_degree() / r;
            for (unsigned long k = 0; k <= cutoff; ++k) acc += chain->at(k).moment(beta);
            return acc;
        },
        "neumann_sum(" + a.name + ")");
}

MomentTransformer neumann_inverse_transformer(const MomentTransformer& a) {
    if (a.order_reduction == 0) {
        throw NoTerminationWitness("Neumann summation over '" + a.name +
                                   "' requires an order-reduction witness r >= 1");
    }
    return MomentTransformer{
        "neumann_sum(" + a.name + ")", 0,
        [a](const Copolynomial& t) { return neumann_sum(a, t); }};
}

Copolynomial neumann_inverse_apply(const DiffOperator& op, const Copolynomial& t) {
    if (op.vars() != t.vars() || op.ring() != t.ring()) {
        throw std::logic_error("operator inversion dimension/ring mismatch");
    }
    RingElement inv_a0 = invert(op.constant_term());
    // N = I - a0^{-1} F has an exactly zero constant term, so each
    // application reduces the touched moment degree by at least 1.
    DiffOperator n_op(
        op.vars(), op.ring(),
        [op, inv_a0](const MultiIndex& alpha) {
            if (alpha.is_zero()) {
                return RingElement::one(op.ring()) - inv_a0 * op.coefficient(alpha);
            }
            return -(inv_a0 * op.coefficient(alpha));
        },
        "I-a0^-1*" + op.name());
    Copolynomial series = neumann_sum(operator_transformer(n_op, 1), t);
    return scaled(series, inv_a0);
}

Copolynomial fundamental_solution(const DiffOperator& op) {
    return neumann_inverse_apply(op, delta(op.vars(), op.ring()));
}

Copolynomial solve(const DiffOperator& op, const Copolynomial& t) {
    return neumann_inverse_apply(op, t);
}

Polynomial solve_polynomial(const DiffOperator& op, const Polynomial& p) {
    if (op.vars() != p.vars() || op.ring() != p.ring()) {
        throw std::logic_error("operator inversion dimension/ring mismatch");
    }
    RingElement inv_a0 = invert(op.constant_term());
    DiffOperator n_op(
        op.vars(), op.ring(),
        [op, inv_a0](const MultiIndex& alpha) {
            if (alpha.is_zero()) {
                return RingElement::one(op.ring()) - inv_a0 * op.coefficient(alpha);
            }
            return -(inv_a0 * op.coefficient(alpha));
        },
        "I-a0^-1*" + op.name());
    // Each N application strictly lowers the degree, so the sum stops after
    // deg p steps.
    Polynomial acc = p;
    Polynomial cur = p;
    long deg = p.degree();
    for (long k = 1; k <= deg && !cur.is_zero(); ++k) {
        cur = apply(n_op, cur);
        acc = acc + cur;
    }
    return acc.scaled(inv_a0);
}

TruncatedSeries symbol(const DiffOperator& op, unsigned truncation) {
    TruncatedSeries s(op.vars(), op.ring(), truncation);
    for (const MultiIndex& alpha : enumerate_indices(op.vars(), truncation)) {
        s.set_coefficient(alpha, op.coefficient(alpha));
    }
    return s;
}

DiffOperator helmholtz_operator(const RingElement& c) {
    const RingSpec& ring = c.spec();
    std::map<MultiIndex, RingElement> terms;
    terms.emplace(MultiIndex::zero(3), c);
    for (std::size_t j = 0; j < 3; ++j) {
        terms.emplace(MultiIndex::unit(3, j, 2), RingElement::one(ring));
    }
    return DiffOperator::from_terms(3, ring, std::move(terms), "helmholtz");
}

DiffOperator heat_operator(const RingElement& a, const RingElement& c) {
    const RingSpec& ring = c.spec();
    std::map<MultiIndex, RingElement> terms;
    terms.emplace(MultiIndex::unit(2, 0), RingElement::one(ring)); // d/dt
    terms.emplace(MultiIndex::unit(2, 1, 2), -a);                  // -a d^2/dx^2
    terms.emplace(MultiIndex::zero(2), c);
    return DiffOperator::from_terms(2, ring, std::move(terms), "heat");
}

DiffOperator transport_operator(const std::vector<RingElement>& s) {
    if (s.empty()) throw std::logic_error("transport operator needs at least one speed");
    const RingSpec& ring = s.front().spec();
    std::size_t n = s.size() + 1;
    std::map<MultiIndex, RingElement> terms;
    terms.emplace(MultiIndex::unit(n, 0), RingElement::one(ring));
    for (std::size_t i = 0; i < s.size(); ++i) terms.emplace(MultiIndex::unit(n, i + 1), s[i]);
    terms.emplace(MultiIndex::zero(n), RingElement::one(ring));
    return DiffOperator::from_terms(n, ring, std::move(terms), "transport");
}

DiffOperator mixed_xt_operator(const RingSpec& ring) {
    std::map<MultiIndex, RingElement> terms;
    terms.emplace(MultiIndex(std::vector<unsigned>{1, 1}), RingElement::one(ring));
    terms.emplace(MultiIndex::unit(2, 1), RingElement::one(ring));  // d/dx
    terms.emplace(MultiIndex::unit(2, 0), -RingElement::one(ring)); // -d/dt
    terms.emplace(MultiIndex::zero(2), -RingElement::one(ring));
    return DiffOperator::from_terms(2, ring, std::move(terms), "mixed_xt");
}

DiffOperator neumann_sum_operator(std::size_t n, const RingSpec& ring) {
    return DiffOperator(
        n, ring,
        [ring](const MultiIndex& alpha) {
            return RingElement::from_integer(ring, multinomial(alpha));
        },
        "neumann_sum_family");
}

DiffOperator laplacian_operator(std::size_t n, const RingSpec& ring) {
    std::map<MultiIndex, RingElement> terms;
    for (std::size_t j = 0; j < n; ++j) {
        terms.emplace(MultiIndex::unit(n, j, 2), RingElement::one(ring));
    }
    return DiffOperator::from_terms(n, ring, std::move(terms), "laplacian");
}

} // namespace copoly
