#pragma once

#include <stdexcept>
#include <string>

namespace qcong {

// Base class for every error the engine raises deliberately.
struct Error : std::runtime_error {
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

struct NotDivisible : Error {
    explicit NotDivisible(const std::string& msg = "exact division failed") : Error(msg) {}
};

struct ZeroDenominator : Error {
    explicit ZeroDenominator(const std::string& msg = "zero denominator") : Error(msg) {}
};

struct DivideByZeroPoly : Error {
    explicit DivideByZeroPoly(const std::string& msg = "division by zero polynomial") : Error(msg) {}
};

struct UnresolvedSymbol : Error {
    explicit UnresolvedSymbol(const std::string& sym)
        : Error("unresolved symbol: " + sym) {}
};

struct NonIntegral : Error {
    explicit NonIntegral(const std::string& msg) : Error(msg) {}
};

struct NonIntegralBound : NonIntegral {
    explicit NonIntegralBound(const std::string& msg) : NonIntegral(msg) {}
};

struct PoleAtPoint : Error {
    explicit PoleAtPoint(const std::string& msg = "pole at evaluation point") : Error(msg) {}
};

struct DenominatorIdenticallyZero : Error {
    explicit DenominatorIdenticallyZero(const std::string& msg = "denominator is identically zero")
        : Error(msg) {}
};

// Claim-language errors carry a location when one is known.
struct SyntaxError : Error {
    int line = 0, col = 0;
    SyntaxError(const std::string& msg, int line_, int col_)
        : Error(msg + " (line " + std::to_string(line_) + ", col " + std::to_string(col_) + ")"),
          line(line_), col(col_) {}
};

struct ValidationError : Error {
    explicit ValidationError(const std::string& msg) : Error(msg) {}
};

struct SideConditionViolated : Error {
    explicit SideConditionViolated(const std::string& msg) : Error(msg) {}
};

struct DuplicateClaim : Error {
    explicit DuplicateClaim(const std::string& name) : Error("duplicate claim name: " + name) {}
};

struct PrimeConditionViolated : Error {
    explicit PrimeConditionViolated(const std::string& msg) : Error(msg) {}
};

struct NotPadicInteger : Error {
    explicit NotPadicInteger(const std::string& msg) : Error(msg) {}
};

struct NonTruncatable : Error {
    explicit NonTruncatable(const std::string& msg) : Error(msg) {}
};

struct PoleBeforeTruncation : Error {
    explicit PoleBeforeTruncation(const std::string& msg) : Error(msg) {}
};

} // namespace qcong
