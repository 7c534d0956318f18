#pragma once

#include <map>
#include <string>
#include <vector>

#include "copoly/multi_index.hpp"
#include "copoly/ring.hpp"

namespace copoly {

// Formal power series in z_1..z_n truncated at total degree N. Arithmetic
// discards terms above N; the truncation degree is part of the value and
// mixed-N arithmetic is rejected rather than silently re-truncated.
class TruncatedSeries {
public:
    TruncatedSeries(std::size_t n, RingSpec ring, unsigned truncation);

    static TruncatedSeries one(std::size_t n, const RingSpec& ring, unsigned truncation);

    std::size_t vars() const { return n_; }
    const RingSpec& ring() const { return ring_; }
    unsigned truncation() const { return trunc_; }
    const std::map<MultiIndex, RingElement>& coefficients() const { return coeffs_; }

    RingElement coefficient(const MultiIndex& alpha) const;
    void set_coefficient(const MultiIndex& alpha, const RingElement& c);

    TruncatedSeries operator+(const TruncatedSeries& o) const;
    TruncatedSeries operator-(const TruncatedSeries& o) const;
    // Truncated Cauchy product.
    TruncatedSeries operator*(const TruncatedSeries& o) const;
    TruncatedSeries scaled(const RingElement& c) const;

    // Composition with z -> -z: coefficient at alpha picks up (-1)^|alpha|.
    TruncatedSeries negate_argument() const;

    bool operator==(const TruncatedSeries& o) const;
    bool operator!=(const TruncatedSeries& o) const { return !(*this == o); }

private:
    void check_compatible(const TruncatedSeries& o) const;

    std::size_t n_;
    RingSpec ring_;
    unsigned trunc_;
    std::map<MultiIndex, RingElement> coeffs_;
};

// Finitely supported formal Laurent polynomial with Z^n exponents; carries
// the formal residue Res(g) = g_(-1,...,-1).
class LaurentPoly {
public:
    LaurentPoly(std::size_t n, RingSpec ring) : n_(n), ring_(std::move(ring)) {}

    std::size_t vars() const { return n_; }
    const RingSpec& ring() const { return ring_; }
    const std::map<std::vector<long>, RingElement>& coefficients() const { return coeffs_; }

    RingElement coefficient(const std::vector<long>& e) const;
    void set_coefficient(const std::vector<long>& e, const RingElement& c);
    void add_to_coefficient(const std::vector<long>& e, const RingElement& c);

    RingElement residue() const;

private:
    std::size_t n_;
    RingSpec ring_;
    std::map<std::vector<long>, RingElement> coeffs_;
};

} // namespace copoly
