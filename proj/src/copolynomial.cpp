#include "copoly/copolynomial.hpp"

namespace copoly {

namespace detail {

const RingElement& MomentCache::get(const MultiIndex& alpha) {
    {
        std::lock_guard<std::mutex> lock(mu_);
        auto it = memo_.find(alpha);
        if (it != memo_.end()) return it->second;
    }
    RingElement value = oracle_(alpha);
    std::lock_guard<std::mutex> lock(mu_);
    return memo_.insert_or_assign(alpha, std::move(value)).first->second;
}

} // namespace detail

Copolynomial::Copolynomial(std::size_t n, RingSpec ring, Oracle oracle, std::string provenance)
    : n_(n),
      ring_(std::move(ring)),
      provenance_(std::move(provenance)),
      cache_(std::make_shared<detail::MomentCache>(std::move(oracle))) {}

const RingElement& Copolynomial::moment(const MultiIndex& alpha) const {
    if (alpha.size() != n_) throw std::logic_error("moment index dimension mismatch");
    return cache_->get(alpha);
}

RingElement Copolynomial::apply(const Polynomial& p) const {
    if (p.vars() != n_) throw std::logic_error("apply dimension mismatch");
    RingElement acc = RingElement::zero(ring_);
    for (const auto& [alpha, c] : p.terms()) acc += c * moment(alpha);
    return acc;
}

Copolynomial delta(std::size_t n, const RingSpec& ring) {
    return Copolynomial(
        n, ring,
        [ring](const MultiIndex& alpha) {
            return alpha.is_zero() ? RingElement::one(ring) : RingElement::zero(ring);
        },
        "delta");
}

Copolynomial zero_copolynomial(std::size_t n, const RingSpec& ring) {
    return Copolynomial(
        n, ring, [ring](const MultiIndex&) { return RingElement::zero(ring); }, "zero");
}

Copolynomial exp_family(const RingElement& a) {
    RingSpec ring = a.spec();
    return Copolynomial(
        1, ring,
        [a, ring](const MultiIndex& alpha) {
            unsigned k = alpha[0];
            RingElement p = RingElement::one(ring);
            for (unsigned i = 0; i < k; ++i) p *= a;
            return p.scaled(factorial(static_cast<unsigned long>(k)));
        },
        "exp_family(" + a.to_string() + ")");
}

Copolynomial from_moments(std::size_t n, const RingSpec& ring,
                          std::map<MultiIndex, RingElement> table) {
    auto shared = std::make_shared<std::map<MultiIndex, RingElement>>(std::move(table));
    return Copolynomial(
        n, ring,
        [shared, ring](const MultiIndex& alpha) {
            auto it = shared->find(alpha);
            return it == shared->end() ? RingElement::zero(ring) : it->second;
        },
        "moments");
}

Copolynomial operator+(const Copolynomial& a, const Copolynomial& b) {
    if (a.vars() != b.vars() || a.ring() != b.ring()) {
        throw std::logic_error("copolynomial sum dimension/ring mismatch");
    }
    return Copolynomial(
        a.vars(), a.ring(),
        [a, b](const MultiIndex& alpha) { return a.moment(alpha) + b.moment(alpha); }, "sum");
}

Copolynomial operator-(const Copolynomial& a, const Copolynomial& b) {
    if (a.vars() != b.vars() || a.ring() != b.ring()) {
        throw std::logic_error("copolynomial difference dimension/ring mismatch");
    }
    return Copolynomial(
        a.vars(), a.ring(),
        [a, b](const MultiIndex& alpha) { return a.moment(alpha) - b.moment(alpha); }, "diff");
}

Copolynomial scaled(const Copolynomial& t, const RingElement& c) {
    return Copolynomial(
        t.vars(), t.ring(), [t, c](const MultiIndex& alpha) { return c * t.moment(alpha); },
        "scaled");
}

Copolynomial derivative(const Copolynomial& t, const MultiIndex& alpha) {
    const bool odd = alpha.total_degree() % 2 != 0;
    return Copolynomial(
        t.vars(), t.ring(),
        [t, alpha, odd](const MultiIndex& beta) {
            if (!alpha.leq(beta)) return RingElement::zero(t.ring());
            RingElement m = t.moment(beta - alpha).scaled(falling_factorial(beta, alpha));
            return odd ? -m : m;
        },
        "derivative" + alpha.to_string());
}

Copolynomial scaled_derivative(const Copolynomial& t, const MultiIndex& alpha) {
    const bool odd = alpha.total_degree() % 2 != 0;
    return Copolynomial(
        t.vars(), t.ring(),
        [t, alpha, odd](const MultiIndex& beta) {
            if (!alpha.leq(beta)) return RingElement::zero(t.ring());
            RingElement m = t.moment(beta - alpha).scaled(binomial(beta, alpha));
            return odd ? -m : m;
        },
        "scaled_derivative" + alpha.to_string());
}

Copolynomial shift(const Copolynomial& t, const std::vector<RingElement>& h) {
    if (h.size() != t.vars()) throw std::logic_error("shift vector dimension mismatch");
    std::vector<RingElement> neg;
    neg.reserve(h.size());
    for (const RingElement& x : h) neg.push_back(-x);
    return Copolynomial(
        t.vars(), t.ring(),
        [t, neg](const MultiIndex& beta) {
            Polynomial mono = Polynomial::monomial(beta, RingElement::one(t.ring()));
            return t.apply(shift(mono, neg));
        },
        "shift");
}

Copolynomial convolve(const Copolynomial& a, const Copolynomial& b) {
    if (a.vars() != b.vars() || a.ring() != b.ring()) {
        throw std::logic_error("convolution dimension/ring mismatch");
    }
    return Copolynomial(
        a.vars(), a.ring(),
        [a, b](const MultiIndex& alpha) {
            RingElement acc = RingElement::zero(a.ring());
            for (const MultiIndex& beta : enumerate_box(alpha)) {
                RingElement left = a.moment(alpha - beta);
                if (left.is_zero()) continue;
                acc += (left * b.moment(beta)).scaled(binomial(alpha, beta));
            }
            return acc;
        },
        "convolve");
}

Copolynomial tensor(const Copolynomial& a, const Copolynomial& b) {
    if (a.ring() != b.ring()) throw std::logic_error("tensor ring mismatch");
    std::size_t na = a.vars();
    return Copolynomial(
        na + b.vars(), a.ring(),
        [a, b, na](const MultiIndex& gamma) {
            std::vector<unsigned> left(gamma.exponents().begin(),
                                       gamma.exponents().begin() + static_cast<long>(na));
            std::vector<unsigned> right(gamma.exponents().begin() + static_cast<long>(na),
                                        gamma.exponents().end());
            return a.moment(MultiIndex(std::move(left))) * b.moment(MultiIndex(std::move(right)));
        },
        "tensor");
}

Polynomial convolve_poly(const Copolynomial& t, const Polynomial& p) {
    if (t.vars() != p.vars()) throw std::logic_error("convolve_poly dimension mismatch");
    Polynomial acc(p.vars(), p.ring());
    long deg = p.degree();
    if (deg < 0) return acc;
    for (const MultiIndex& alpha : enumerate_indices(p.vars(), static_cast<unsigned>(deg))) {
        RingElement m = t.moment(alpha);
        if (m.is_zero()) continue;
        if (alpha.total_degree() % 2 != 0) m = -m;
        acc = acc + taylor_coefficient(p, alpha).scaled(m);
    }
    return acc;
}

std::vector<std::pair<MultiIndex, RingElement>> delta_expansion(const Copolynomial& t,
                                                                unsigned degree_bound) {
    std::vector<std::pair<MultiIndex, RingElement>> out;
    for (const MultiIndex& alpha : enumerate_indices(t.vars(), degree_bound)) {
        RingElement c = t.moment(alpha);
        if (alpha.total_degree() % 2 != 0) c = -c;
        out.emplace_back(alpha, std::move(c));
    }
    return out;
}

bool equal_up_to(const Copolynomial& a, const Copolynomial& b, unsigned degree_bound) {
    if (a.vars() != b.vars() || a.ring() != b.ring()) return false;
    for (const MultiIndex& alpha : enumerate_indices(a.vars(), degree_bound)) {
        if (a.moment(alpha) != b.moment(alpha)) return false;
    }
    return true;
}

} // namespace copoly
