#pragma once

#include <stdexcept>
#include <string>

namespace cobalt {

// Base class for all errors raised by the library. Verification routines
// return Verdict values instead of throwing; exceptions are reserved for
// precondition violations and malformed input.
struct Error : std::runtime_error {
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

struct DivisionByZero : Error {
    DivisionByZero() : Error("division by zero") {}
};

struct ConductorOverflow : Error {
    explicit ConductorOverflow(long wanted, long cap)
        : Error("conductor " + std::to_string(wanted) + " exceeds cap " + std::to_string(cap)) {}
};

struct ParseError : Error {
    size_t position;
    ParseError(const std::string& msg, size_t pos)
        : Error(msg + " at position " + std::to_string(pos)), position(pos) {}
};

struct WordTypeError : Error {
    size_t position;
    WordTypeError(const std::string& msg, size_t pos)
        : Error(msg + " at position " + std::to_string(pos)), position(pos) {}
};

struct UnsupportedParams : Error {
    explicit UnsupportedParams(const std::string& msg) : Error(msg) {}
};

struct NotCommuting : Error {
    NotCommuting() : Error("elements do not commute") {}
};

struct GroupMismatch : Error {
    GroupMismatch() : Error("characters live over different groups") {}
};

struct NotTwoGroup : Error {
    NotTwoGroup() : Error("character has no 2-group (crossed module) data") {}
};

struct CharacterNotCocycleForm : Error {
    explicit CharacterNotCocycleForm(const std::string& why)
        : Error("character is not of cocycle form: " + why) {}
};

struct NotScalarMultiple : Error {
    explicit NotScalarMultiple(const std::string& msg) : Error(msg) {}
};

struct NotCommutative : Error {
    NotCommutative() : Error("algebra is not commutative") {}
};

struct AlgebraMismatch : Error {
    AlgebraMismatch() : Error("modules live over different algebras") {}
};

struct SignMismatch : Error {
    explicit SignMismatch(const std::string& msg) : Error(msg) {}
};

struct TwistedInput : Error {
    TwistedInput() : Error("representation has a nontrivial cocycle") {}
};

struct InconsistentBoundaryData : Error {
    explicit InconsistentBoundaryData(const std::string& msg) : Error(msg) {}
};

struct NotProjectivelyTrivial : Error {
    explicit NotProjectivelyTrivial(const std::string& msg) : Error(msg) {}
};

struct FormatError : Error {
    explicit FormatError(const std::string& msg) : Error(msg) {}
};

// Outcome of a verification routine, carrying the first witness found.
struct Verdict {
    bool ok = true;
    std::string detail;

    static Verdict pass() { return {true, ""}; }
    static Verdict fail(std::string why) { return {false, std::move(why)}; }
    explicit operator bool() const { return ok; }
};

}  // namespace cobalt
