#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace copoly {

// Base class for all library errors.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

// Element has no multiplicative inverse in its ring (e.g. 2 in Z).
class NotInvertible : public Error {
public:
    explicit NotInvertible(const std::string& msg) : Error(msg) {}
};

// k*b = a has no solution b in the ring.
class NotDivisible : public Error {
public:
    explicit NotDivisible(const std::string& msg) : Error(msg) {}
};

// Exact division failed while building a series coefficient u_k.
// Carries the offending (k, alpha); this is how Cauchy non-existence
// over Z manifests.
class DivisibilityFailure : public Error {
public:
    DivisibilityFailure(long k, std::vector<unsigned> alpha, const std::string& msg)
        : Error(msg), k(k), alpha(std::move(alpha)) {}
    long k;
    std::vector<unsigned> alpha;
};

// A theorem hypothesis the caller did not override is violated.
class HypothesisViolation : public Error {
public:
    explicit HypothesisViolation(const std::string& msg) : Error(msg) {}
};

// Operation needs a ring containing the rationals.
class RingCapability : public Error {
public:
    explicit RingCapability(const std::string& msg) : Error(msg) {}
};

// A series truncation degree is too low for the requested computation.
class TruncationTooLow : public Error {
public:
    explicit TruncationTooLow(const std::string& msg) : Error(msg) {}
};

// A componentwise order precondition (alpha <= beta) failed.
class OrderViolation : public Error {
public:
    explicit OrderViolation(const std::string& msg) : Error(msg) {}
};

// Neumann summation over a transformer without an order-reduction witness.
class NoTerminationWitness : public Error {
public:
    explicit NoTerminationWitness(const std::string& msg) : Error(msg) {}
};

// Malformed job file or object literal.
class ParseError : public Error {
public:
    explicit ParseError(const std::string& msg) : Error(msg) {}
};

} // namespace copoly
