#include "copoly/ring.hpp"

#include <ostream>

namespace copoly {

RingSpec RingSpec::mod(const mpz_class& m, bool allow_composite) {
    if (m <= 1) {
        throw ParseError("mod-m ring requires m >= 2, got " + m.get_str());
    }
    // 25 Miller-Rabin rounds; GMP returns 2 for proven primes, 1 for
    // probable primes, 0 for composites.
    if (!allow_composite && mpz_probab_prime_p(m.get_mpz_t(), 25) == 0) {
        throw HypothesisViolation(
            "modulus " + m.get_str() +
            " is composite; Z/mZ is not an integral domain (set the unsafe flag to allow)");
    }
    return RingSpec(RingKind::Mod, m);
}

mpz_class RingSpec::characteristic() const {
    return kind_ == RingKind::Mod ? modulus_ : mpz_class(0);
}

std::string RingSpec::to_string() const {
    switch (kind_) {
        case RingKind::Integers: return "Z";
        case RingKind::Rationals: return "Q";
        case RingKind::Mod: return "Z/" + modulus_.get_str() + "Z";
    }
    return "?";
}

RingElement::RingElement(RingSpec spec, const mpz_class& n) : spec_(std::move(spec)), v_(n) {
    canonicalize();
}

RingElement::RingElement(RingSpec spec, const mpq_class& q) : spec_(std::move(spec)), v_(q) {
    v_.canonicalize();
    if (spec_.kind() != RingKind::Rationals && v_.get_den() != 1) {
        throw ParseError("non-integer value " + v_.get_str() + " in ring " + spec_.to_string());
    }
    canonicalize();
}

void RingElement::canonicalize() {
    if (spec_.kind() == RingKind::Mod) {
        mpz_class r;
        mpz_mod(r.get_mpz_t(), v_.get_num().get_mpz_t(), spec_.modulus().get_mpz_t());
        v_ = r;
    }
}

void RingElement::check_same_ring(const RingElement& o) const {
    if (spec_ != o.spec_) {
        throw std::logic_error("mixed-ring arithmetic: " + spec_.to_string() + " vs " +
                               o.spec_.to_string());
    }
}

RingElement RingElement::parse(const RingSpec& spec, const std::string& s) {
    if (s.empty()) throw ParseError("empty ring element literal");
    mpq_class q;
    if (q.set_str(s, 10) != 0) throw ParseError("bad ring element literal: " + s);
    q.canonicalize();
    if (spec.kind() != RingKind::Rationals && q.get_den() != 1) {
        throw ParseError("literal " + s + " is not an element of " + spec.to_string());
    }
    return RingElement(spec, q);
}

RingElement RingElement::operator+(const RingElement& o) const {
    check_same_ring(o);
    return RingElement(spec_, mpq_class(v_ + o.v_));
}

RingElement RingElement::operator-(const RingElement& o) const {
    check_same_ring(o);
    return RingElement(spec_, mpq_class(v_ - o.v_));
}

RingElement RingElement::operator*(const RingElement& o) const {
    check_same_ring(o);
    return RingElement(spec_, mpq_class(v_ * o.v_));
}

RingElement RingElement::operator-() const { return RingElement(spec_, mpq_class(-v_)); }

RingElement RingElement::scaled(const mpz_class& n) const {
    return RingElement(spec_, mpq_class(v_ * n));
}

bool RingElement::operator==(const RingElement& o) const {
    check_same_ring(o);
    return v_ == o.v_;
}

std::string RingElement::to_string() const { return v_.get_str(); }

RingElement invert(const RingElement& a) {
    const RingSpec& spec = a.spec();
    switch (spec.kind()) {
        case RingKind::Rationals:
            if (a.is_zero()) throw NotInvertible("0 has no inverse");
            return RingElement(spec, mpq_class(1 / a.value()));
        case RingKind::Integers: {
            const mpz_class n = a.value().get_num();
            if (n == 1 || n == -1) return a;
            throw NotInvertible(n.get_str() + " is not invertible in Z");
        }
        case RingKind::Mod: {
            mpz_class inv;
            const mpz_class n = a.value().get_num();
            if (mpz_invert(inv.get_mpz_t(), n.get_mpz_t(), spec.modulus().get_mpz_t()) == 0) {
                throw NotInvertible(n.get_str() + " is not invertible in " + spec.to_string());
            }
            return RingElement(spec, inv);
        }
    }
    throw std::logic_error("unreachable ring kind");
}

RingElement exact_div(const RingElement& a, const mpz_class& k) {
    if (k <= 0) throw OrderViolation("exact_div requires a positive integer divisor");
    const RingSpec& spec = a.spec();
    switch (spec.kind()) {
        case RingKind::Rationals:
            return RingElement(spec, mpq_class(a.value() / mpq_class(k)));
        case RingKind::Integers: {
            const mpz_class n = a.value().get_num();
            if (!mpz_divisible_p(n.get_mpz_t(), k.get_mpz_t())) {
                throw NotDivisible(n.get_str() + " is not divisible by " + k.get_str() + " in Z");
            }
            mpz_class q;
            mpz_divexact(q.get_mpz_t(), n.get_mpz_t(), k.get_mpz_t());
            return RingElement(spec, q);
        }
        case RingKind::Mod: {
            // Solve k*b = a (mod m). Solvable iff gcd(k, m) divides a; the
            // returned representative is the unique solution when the ring is
            // a domain and k is nonzero mod m.
            const mpz_class& m = spec.modulus();
            const mpz_class n = a.value().get_num();
            mpz_class g;
            mpz_gcd(g.get_mpz_t(), k.get_mpz_t(), m.get_mpz_t());
            if (!mpz_divisible_p(n.get_mpz_t(), g.get_mpz_t())) {
                throw NotDivisible(n.get_str() + " is not divisible by " + k.get_str() + " in " +
                                   spec.to_string());
            }
            mpz_class m1 = m / g;
            if (m1 == 1) return RingElement(spec, mpz_class(0));
            mpz_class k1 = (k / g) % m1, n1 = (n / g) % m1, inv;
            mpz_invert(inv.get_mpz_t(), k1.get_mpz_t(), m1.get_mpz_t());
            return RingElement(spec, mpz_class((n1 * inv) % m1));
        }
    }
    throw std::logic_error("unreachable ring kind");
}

std::ostream& operator<<(std::ostream& os, const RingElement& a) { return os << a.to_string(); }

} // namespace copoly
