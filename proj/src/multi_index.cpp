#include "copoly/multi_index.hpp"

#include <algorithm>
#include <sstream>

namespace copoly {

MultiIndex MultiIndex::unit(std::size_t n, std::size_t j, unsigned k) {
    std::vector<unsigned> e(n, 0);
    e.at(j) = k;
    return MultiIndex(std::move(e));
}

unsigned long MultiIndex::total_degree() const {
    unsigned long d = 0;
    for (unsigned x : e_) d += x;
    return d;
}

bool MultiIndex::leq(const MultiIndex& beta) const {
    if (e_.size() != beta.e_.size()) return false;
    for (std::size_t j = 0; j < e_.size(); ++j) {
        if (e_[j] > beta.e_[j]) return false;
    }
    return true;
}

MultiIndex MultiIndex::operator+(const MultiIndex& o) const {
    if (e_.size() != o.e_.size()) throw std::logic_error("multi-index dimension mismatch");
    std::vector<unsigned> r(e_.size());
    for (std::size_t j = 0; j < e_.size(); ++j) r[j] = e_[j] + o.e_[j];
    return MultiIndex(std::move(r));
}

MultiIndex MultiIndex::operator-(const MultiIndex& o) const {
    if (!o.leq(*this)) {
        throw OrderViolation("multi-index subtraction requires componentwise order");
    }
    std::vector<unsigned> r(e_.size());
    for (std::size_t j = 0; j < e_.size(); ++j) r[j] = e_[j] - o.e_[j];
    return MultiIndex(std::move(r));
}

MultiIndex MultiIndex::scaled(unsigned c) const {
    std::vector<unsigned> r(e_.size());
    for (std::size_t j = 0; j < e_.size(); ++j) r[j] = e_[j] * c;
    return MultiIndex(std::move(r));
}

MultiIndex MultiIndex::concat(const MultiIndex& o) const {
    std::vector<unsigned> r = e_;
    r.insert(r.end(), o.e_.begin(), o.e_.end());
    return MultiIndex(std::move(r));
}

std::strong_ordering MultiIndex::operator<=>(const MultiIndex& o) const {
    if (auto c = total_degree() <=> o.total_degree(); c != 0) return c;
    return std::lexicographical_compare_three_way(e_.begin(), e_.end(), o.e_.begin(), o.e_.end());
}

std::string MultiIndex::to_string() const {
    std::ostringstream os;
    os << '(';
    for (std::size_t j = 0; j < e_.size(); ++j) {
        if (j) os << ',';
        os << e_[j];
    }
    os << ')';
    return os.str();
}

mpz_class factorial(unsigned long k) {
    mpz_class r;
    mpz_fac_ui(r.get_mpz_t(), k);
    return r;
}

mpz_class factorial(const MultiIndex& alpha) {
    mpz_class r = 1;
    for (unsigned x : alpha.exponents()) r *= factorial(x);
    return r;
}

mpz_class binomial(unsigned long n, unsigned long k) {
    mpz_class r;
    mpz_bin_uiui(r.get_mpz_t(), n, k);
    return r;
}

mpz_class binomial(const MultiIndex& beta, const MultiIndex& alpha) {
    if (!alpha.leq(beta)) {
        throw OrderViolation("binomial(" + beta.to_string() + "," + alpha.to_string() +
                             ") requires alpha <= beta");
    }
    mpz_class r = 1;
    for (std::size_t j = 0; j < beta.size(); ++j) r *= binomial(beta[j], alpha[j]);
    return r;
}

mpz_class falling_factorial(const MultiIndex& beta, const MultiIndex& alpha) {
    if (!alpha.leq(beta)) {
        throw OrderViolation("falling_factorial(" + beta.to_string() + "," + alpha.to_string() +
                             ") requires alpha <= beta");
    }
    mpz_class r = 1;
    for (std::size_t j = 0; j < beta.size(); ++j) {
        for (unsigned i = 0; i < alpha[j]; ++i) r *= beta[j] - i;
    }
    return r;
}

mpz_class multinomial(const MultiIndex& alpha) {
    mpz_class r = 1;
    unsigned long partial = 0;
    for (unsigned x : alpha.exponents()) {
        partial += x;
        r *= binomial(partial, x);
    }
    return r;
}

namespace {

void collect_of_degree(std::size_t n, std::size_t pos, unsigned remaining,
                       std::vector<unsigned>& cur, std::vector<MultiIndex>& out) {
    if (pos + 1 == n) {
        cur[pos] = remaining;
        out.emplace_back(cur);
        return;
    }
    for (unsigned v = 0; v <= remaining; ++v) {
        cur[pos] = v;
        collect_of_degree(n, pos + 1, remaining - v, cur, out);
    }
}

} // namespace

std::vector<MultiIndex> enumerate_indices(std::size_t n, unsigned degree_bound) {
    if (n == 0) throw OrderViolation("enumerate_indices requires n >= 1");
    std::vector<MultiIndex> out;
    std::vector<unsigned> cur(n, 0);
    for (unsigned d = 0; d <= degree_bound; ++d) {
        std::vector<MultiIndex> layer;
        collect_of_degree(n, 0, d, cur, layer);
        std::sort(layer.begin(), layer.end());
        out.insert(out.end(), layer.begin(), layer.end());
    }
    return out;
}

std::vector<MultiIndex> enumerate_box(const MultiIndex& beta) {
    std::vector<MultiIndex> out;
    std::vector<unsigned> cur(beta.size(), 0);
    std::size_t n = beta.size();
    while (true) {
        out.emplace_back(cur);
        std::size_t j = 0;
        while (j < n && cur[j] == beta[j]) {
            cur[j] = 0;
            ++j;
        }
        if (j == n) break;
        ++cur[j];
    }
    std::sort(out.begin(), out.end());
    return out;
}

} // namespace copoly
