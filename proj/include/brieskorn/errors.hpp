#pragma once

#include <stdexcept>
#include <string>

namespace brieskorn {

// Base class for everything thrown by the library.
struct Error : std::runtime_error {
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

// Exact integer arithmetic left the representable range.
struct OverflowError : Error {
    using Error::Error;
};

// An argument violates a documented precondition (bad exponent, zero
// denominator, sign not in {-1,+1}, ...).
struct DomainError : Error {
    using Error::Error;
};

// Malformed text input; message carries source name and line number.
struct ParseError : Error {
    ParseError(const std::string& source, int line, const std::string& what)
        : Error(source + ":" + std::to_string(line) + ": " + what), source(source), line(line) {}
    std::string source;
    int line;
};

// f_a has no minimum because sum(1/a_k) < 1.
struct UnboundedBelow : Error {
    using Error::Error;
};

// The homology catalog has no entry for the requested sub-tuple.
struct UnknownHomology : Error {
    explicit UnknownHomology(const std::string& key)
        : Error("unknown homology for Brieskorn link (" + key + ")"), key(key) {}
    std::string key;
};

// Re-registering a catalog key with different data.
struct ConflictingEntry : Error {
    using Error::Error;
};

// Catalog data outside [0, 2|key|-3].
struct DegreeOutOfRange : Error {
    using Error::Error;
};

// Registration attempted after the catalog was frozen.
struct CatalogFrozen : Error {
    using Error::Error;
};

// Algebra validation failures; messages carry a witness.
struct NotAssociative : Error {
    using Error::Error;
};
struct NotCommutative : Error {
    using Error::Error;
};
struct BadUnit : Error {
    using Error::Error;
};
struct GradingViolation : Error {
    using Error::Error;
};

// Brute-force enumeration refused: algebra dimension above the cap.
struct DimensionTooLarge : Error {
    using Error::Error;
};

// Product of algebras whose units live in different degrees.
struct DegreeMismatch : Error {
    using Error::Error;
};

}  // namespace brieskorn
