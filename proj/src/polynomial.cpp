#include "copoly/polynomial.hpp"

#include <sstream>

namespace copoly {

Polynomial::Polynomial(std::size_t n, RingSpec ring, TermMap terms)
    : n_(n), ring_(std::move(ring)), terms_(std::move(terms)) {
    for (auto it = terms_.begin(); it != terms_.end();) {
        if (it->first.size() != n_) throw std::logic_error("term dimension mismatch");
        it = it->second.is_zero() ? terms_.erase(it) : std::next(it);
    }
}

Polynomial Polynomial::constant(std::size_t n, const RingElement& c) {
    return monomial(MultiIndex::zero(n), c);
}

Polynomial Polynomial::monomial(const MultiIndex& alpha, const RingElement& c) {
    Polynomial p(alpha.size(), c.spec());
    p.set_coefficient(alpha, c);
    return p;
}

long Polynomial::degree() const {
    long d = -1;
    for (const auto& [alpha, c] : terms_) {
        d = std::max(d, static_cast<long>(alpha.total_degree()));
    }
    return d;
}

RingElement Polynomial::coefficient(const MultiIndex& alpha) const {
    auto it = terms_.find(alpha);
    return it == terms_.end() ? RingElement::zero(ring_) : it->second;
}

void Polynomial::set_coefficient(const MultiIndex& alpha, const RingElement& c) {
    if (alpha.size() != n_) throw std::logic_error("term dimension mismatch");
    if (c.is_zero()) {
        terms_.erase(alpha);
    } else {
        terms_.insert_or_assign(alpha, c);
    }
}

Polynomial Polynomial::operator+(const Polynomial& o) const {
    Polynomial r = *this;
    for (const auto& [alpha, c] : o.terms_) {
        r.set_coefficient(alpha, r.coefficient(alpha) + c);
    }
    return r;
}

Polynomial Polynomial::operator-(const Polynomial& o) const { return *this + (-o); }

Polynomial Polynomial::operator-() const {
    Polynomial r(n_, ring_);
    for (const auto& [alpha, c] : terms_) r.set_coefficient(alpha, -c);
    return r;
}

Polynomial Polynomial::operator*(const Polynomial& o) const {
    Polynomial r(n_, ring_);
    for (const auto& [a, ca] : terms_) {
        for (const auto& [b, cb] : o.terms_) {
            MultiIndex ab = a + b;
            r.set_coefficient(ab, r.coefficient(ab) + ca * cb);
        }
    }
    return r;
}

Polynomial Polynomial::scaled(const RingElement& c) const {
    Polynomial r(n_, ring_);
    for (const auto& [alpha, ca] : terms_) r.set_coefficient(alpha, ca * c);
    return r;
}

bool Polynomial::operator==(const Polynomial& o) const {
    return n_ == o.n_ && ring_ == o.ring_ && terms_ == o.terms_;
}

std::string Polynomial::to_string() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [alpha, c] : terms_) {
        if (!first) os << " + ";
        first = false;
        os << c.to_string() << "*x^" << alpha.to_string();
    }
    return os.str();
}

Polynomial derivative(const Polynomial& p, const MultiIndex& alpha) {
    Polynomial r(p.vars(), p.ring());
    for (const auto& [beta, c] : p.terms()) {
        if (!alpha.leq(beta)) continue;
        r.set_coefficient(beta - alpha, c.scaled(falling_factorial(beta, alpha)));
    }
    return r;
}

Polynomial taylor_coefficient(const Polynomial& p, const MultiIndex& alpha) {
    Polynomial r(p.vars(), p.ring());
    for (const auto& [beta, c] : p.terms()) {
        if (!alpha.leq(beta)) continue;
        MultiIndex rest = beta - alpha;
        r.set_coefficient(rest, r.coefficient(rest) + c.scaled(binomial(beta, alpha)));
    }
    return r;
}

Polynomial shift(const Polynomial& p, const std::vector<RingElement>& h) {
    if (h.size() != p.vars()) throw std::logic_error("shift vector dimension mismatch");
    Polynomial r(p.vars(), p.ring());
    long deg = p.degree();
    if (deg < 0) return r;
    for (const MultiIndex& alpha : enumerate_indices(p.vars(), static_cast<unsigned>(deg))) {
        RingElement ha = RingElement::one(p.ring());
        for (std::size_t j = 0; j < h.size(); ++j) {
            for (unsigned i = 0; i < alpha[j]; ++i) ha *= h[j];
        }
        if (ha.is_zero()) continue;
        r = r + taylor_coefficient(p, alpha).scaled(ha);
    }
    return r;
}

RingElement evaluate(const Polynomial& p, const std::vector<RingElement>& point) {
    if (point.size() != p.vars()) throw std::logic_error("evaluation point dimension mismatch");
    RingElement acc = RingElement::zero(p.ring());
    for (const auto& [alpha, c] : p.terms()) {
        RingElement m = c;
        for (std::size_t j = 0; j < point.size(); ++j) {
            for (unsigned i = 0; i < alpha[j]; ++i) m *= point[j];
        }
        acc += m;
    }
    return acc;
}

} // namespace copoly
