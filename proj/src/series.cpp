#include "copoly/series.hpp"

namespace copoly {

TruncatedSeries::TruncatedSeries(std::size_t n, RingSpec ring, unsigned truncation)
    : n_(n), ring_(std::move(ring)), trunc_(truncation) {}

TruncatedSeries TruncatedSeries::one(std::size_t n, const RingSpec& ring, unsigned truncation) {
    TruncatedSeries s(n, ring, truncation);
    s.set_coefficient(MultiIndex::zero(n), RingElement::one(ring));
    return s;
}

RingElement TruncatedSeries::coefficient(const MultiIndex& alpha) const {
    if (alpha.total_degree() > trunc_) {
        throw TruncationTooLow("coefficient at " + alpha.to_string() +
                               " exceeds truncation degree " + std::to_string(trunc_));
    }
    auto it = coeffs_.find(alpha);
    return it == coeffs_.end() ? RingElement::zero(ring_) : it->second;
}

void TruncatedSeries::set_coefficient(const MultiIndex& alpha, const RingElement& c) {
    if (alpha.size() != n_) throw std::logic_error("series coefficient dimension mismatch");
    if (alpha.total_degree() > trunc_) {
        throw TruncationTooLow("coefficient at " + alpha.to_string() +
                               " exceeds truncation degree " + std::to_string(trunc_));
    }
    if (c.is_zero()) {
        coeffs_.erase(alpha);
    } else {
        coeffs_.insert_or_assign(alpha, c);
    }
}

void TruncatedSeries::check_compatible(const TruncatedSeries& o) const {
    if (n_ != o.n_ || ring_ != o.ring_) {
        throw std::logic_error("series arithmetic dimension/ring mismatch");
    }
    if (trunc_ != o.trunc_) {
        throw std::logic_error("mixed truncation degrees (" + std::to_string(trunc_) + " vs " +
                               std::to_string(o.trunc_) + ") are not re-truncated silently");
    }
}

TruncatedSeries TruncatedSeries::operator+(const TruncatedSeries& o) const {
    check_compatible(o);
    TruncatedSeries r = *this;
    for (const auto& [alpha, c] : o.coeffs_) {
        r.set_coefficient(alpha, r.coefficient(alpha) + c);
    }
    return r;
}

TruncatedSeries TruncatedSeries::operator-(const TruncatedSeries& o) const {
    check_compatible(o);
    TruncatedSeries r = *this;
    for (const auto& [alpha, c] : o.coeffs_) {
        r.set_coefficient(alpha, r.coefficient(alpha) - c);
    }
    return r;
}

TruncatedSeries TruncatedSeries::operator*(const TruncatedSeries& o) const {
    check_compatible(o);
    TruncatedSeries r(n_, ring_, trunc_);
    for (const auto& [a, ca] : coeffs_) {
        for (const auto& [b, cb] : o.coeffs_) {
            if (a.total_degree() + b.total_degree() > trunc_) continue;
            MultiIndex ab = a + b;
            r.set_coefficient(ab, r.coefficient(ab) + ca * cb);
        }
    }
    return r;
}

TruncatedSeries TruncatedSeries::scaled(const RingElement& c) const {
    TruncatedSeries r(n_, ring_, trunc_);
    for (const auto& [alpha, ca] : coeffs_) r.set_coefficient(alpha, ca * c);
    return r;
}

TruncatedSeries TruncatedSeries::negate_argument() const {
    TruncatedSeries r(n_, ring_, trunc_);
    for (const auto& [alpha, c] : coeffs_) {
        r.set_coefficient(alpha, alpha.total_degree() % 2 != 0 ? -c : c);
    }
    return r;
}

bool TruncatedSeries::operator==(const TruncatedSeries& o) const {
    return n_ == o.n_ && ring_ == o.ring_ && trunc_ == o.trunc_ && coeffs_ == o.coeffs_;
}

RingElement LaurentPoly::coefficient(const std::vector<long>& e) const {
    auto it = coeffs_.find(e);
    return it == coeffs_.end() ? RingElement::zero(ring_) : it->second;
}

void LaurentPoly::set_coefficient(const std::vector<long>& e, const RingElement& c) {
    if (e.size() != n_) throw std::logic_error("Laurent exponent dimension mismatch");
    if (c.is_zero()) {
        coeffs_.erase(e);
    } else {
        coeffs_.insert_or_assign(e, c);
    }
}

void LaurentPoly::add_to_coefficient(const std::vector<long>& e, const RingElement& c) {
    set_coefficient(e, coefficient(e) + c);
}

RingElement LaurentPoly::residue() const {
    return coefficient(std::vector<long>(n_, -1));
}

} // namespace copoly
