#include "copoly/laplace.hpp"

namespace copoly {

TruncatedSeries laplace(const Copolynomial& t, unsigned truncation) {
    if (!t.ring().contains_rationals()) {
        throw RingCapability("Laplace transform needs a ring containing the rationals, got " +
                             t.ring().to_string());
    }
    TruncatedSeries s(t.vars(), t.ring(), truncation);
    for (const MultiIndex& alpha : enumerate_indices(t.vars(), truncation)) {
        s.set_coefficient(alpha, exact_div(t.moment(alpha), factorial(alpha)));
    }
    return s;
}

LaurentPoly laplace_poly(const Polynomial& p) {
    if (!p.ring().contains_rationals()) {
        throw RingCapability("Laplace transform needs a ring containing the rationals, got " +
                             p.ring().to_string());
    }
    LaurentPoly lp(p.vars(), p.ring());
    for (const auto& [alpha, c] : p.terms()) {
        std::vector<long> e(p.vars());
        for (std::size_t j = 0; j < p.vars(); ++j) e[j] = -static_cast<long>(alpha[j]) - 1;
        lp.set_coefficient(e, c.scaled(factorial(alpha)));
    }
    return lp;
}

RingElement residue_pairing(const TruncatedSeries& ts, const LaurentPoly& ps) {
    if (ts.vars() != ps.vars() || ts.ring() != ps.ring()) {
        throw std::logic_error("residue pairing dimension/ring mismatch");
    }
    std::size_t n = ts.vars();
    // Reaching the residue exponent from a Laurent term at gamma needs the
    // series coefficient at beta = -gamma - (1,...,1).
    for (const auto& [gamma, c] : ps.coefficients()) {
        unsigned long need = 0;
        bool reachable = true;
        for (std::size_t j = 0; j < n; ++j) {
            long bj = -gamma[j] - 1;
            if (bj < 0) {
                reachable = false;
                break;
            }
            need += static_cast<unsigned long>(bj);
        }
        if (reachable && need > ts.truncation()) {
            throw TruncationTooLow("series truncated at " + std::to_string(ts.truncation()) +
                                   " but the pairing needs degree " + std::to_string(need));
        }
    }
    // Genuine product in the Laurent module, then the formal residue.
    LaurentPoly product(n, ts.ring());
    for (const auto& [alpha, ca] : ts.coefficients()) {
        for (const auto& [gamma, cg] : ps.coefficients()) {
            std::vector<long> e(n);
            for (std::size_t j = 0; j < n; ++j) e[j] = static_cast<long>(alpha[j]) + gamma[j];
            product.add_to_coefficient(e, ca * cg);
        }
    }
    return product.residue();
}

TruncatedSeries series_mul(const TruncatedSeries& a, const TruncatedSeries& b) {
    return a * b;
}

bool check_symbol_relation(const DiffOperator& op, const Copolynomial& t, unsigned truncation) {
    TruncatedSeries lhs = laplace(apply(op, t), truncation);
    TruncatedSeries rhs = symbol(op, truncation).negate_argument() * laplace(t, truncation);
    return lhs == rhs;
}

} // namespace copoly
