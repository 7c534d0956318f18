#pragma once

#include <gmpxx.h>

#include <iosfwd>
#include <string>

#include "copoly/errors.hpp"

namespace copoly {

enum class RingKind { Integers, Rationals, Mod };

// Description of one of the built-in exact coefficient rings: Z, Q, or Z/mZ.
// Composite moduli break the integral-domain assumptions of the theory and
// are gated behind an explicit unsafe flag; they exist only so that
// counterexample tests can be expressed.
class RingSpec {
public:
    static RingSpec integers() { return RingSpec(RingKind::Integers, 0); }
    static RingSpec rationals() { return RingSpec(RingKind::Rationals, 0); }
    static RingSpec mod(const mpz_class& m, bool allow_composite = false);

    RingKind kind() const { return kind_; }
    const mpz_class& modulus() const { return modulus_; }

    // 0 for Z and Q, m for Z/mZ.
    mpz_class characteristic() const;
    bool contains_rationals() const { return kind_ == RingKind::Rationals; }

    bool operator==(const RingSpec& other) const {
        return kind_ == other.kind_ && modulus_ == other.modulus_;
    }
    bool operator!=(const RingSpec& other) const { return !(*this == other); }

    std::string to_string() const;

private:
    RingSpec(RingKind kind, mpz_class modulus) : kind_(kind), modulus_(std::move(modulus)) {}

    RingKind kind_;
    mpz_class modulus_;
};

// An exact element of one of the built-in rings. Rationals are kept in
// lowest terms with positive denominator (GMP canonical form); mod-m values
// are canonical representatives in [0, m).
class RingElement {
public:
    RingElement() : spec_(RingSpec::integers()), v_(0) {}
    RingElement(RingSpec spec, const mpz_class& n);
    RingElement(RingSpec spec, const mpq_class& q);

    static RingElement zero(const RingSpec& spec) { return RingElement(spec, mpz_class(0)); }
    static RingElement one(const RingSpec& spec) { return RingElement(spec, mpz_class(1)); }
    // Image of the integer n under the canonical map Z -> K.
    static RingElement from_integer(const RingSpec& spec, const mpz_class& n) {
        return RingElement(spec, n);
    }
    // Parses a decimal string, or "p/q" over the rationals.
    static RingElement parse(const RingSpec& spec, const std::string& s);

    const RingSpec& spec() const { return spec_; }
    const mpq_class& value() const { return v_; }

    bool is_zero() const { return v_ == 0; }
    bool is_one() const { return v_ == 1; }

    RingElement operator+(const RingElement& o) const;
    RingElement operator-(const RingElement& o) const;
    RingElement operator*(const RingElement& o) const;
    RingElement operator-() const;
    RingElement& operator+=(const RingElement& o) { return *this = *this + o; }
    RingElement& operator-=(const RingElement& o) { return *this = *this - o; }
    RingElement& operator*=(const RingElement& o) { return *this = *this * o; }

    // Multiplication by an integer scalar (the Z-module action).
    RingElement scaled(const mpz_class& n) const;

    bool operator==(const RingElement& o) const;
    bool operator!=(const RingElement& o) const { return !(*this == o); }

    std::string to_string() const;

private:
    void canonicalize();
    void check_same_ring(const RingElement& o) const;

    RingSpec spec_;
    mpq_class v_;
};

// Multiplicative inverse; throws NotInvertible when none exists.
RingElement invert(const RingElement& a);

// Solves k*b = a for b in the ring (k a positive integer); throws
// NotDivisible when no solution exists. Over Z this is the divisibility test
// that detects Cauchy non-existence.
RingElement exact_div(const RingElement& a, const mpz_class& k);

std::ostream& operator<<(std::ostream& os, const RingElement& a);

} // namespace copoly
