#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace stableset {

/// Base of every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class EmptyGround : public Error {
public:
    EmptyGround() : Error("maximal set requested over an empty ground set") {}
};

class EmptySolution : public Error {
public:
    EmptySolution() : Error("the empty set is never a solution") {}
};

/// An exponential enumeration was requested above its configured ceiling.
class LimitExceeded : public Error {
public:
    LimitExceeded(const std::string& what, std::size_t n, std::size_t limit)
        : Error(what + ": n = " + std::to_string(n) + " exceeds limit " + std::to_string(limit)),
          n_(n),
          limit_(limit) {}

    std::size_t n() const { return n_; }
    std::size_t limit() const { return limit_; }

private:
    std::size_t n_;
    std::size_t limit_;
};

class OracleLimitExceeded : public LimitExceeded {
public:
    OracleLimitExceeded(std::size_t n, std::size_t limit)
        : LimitExceeded("oracle enumeration", n, limit) {}
};

/// The derived order failed reflexivity, antisymmetry or transitivity.
class PosetViolation : public Error {
public:
    using Error::Error;
};

class ParseError : public Error {
public:
    ParseError(const std::string& message, std::size_t line)
        : Error("line " + std::to_string(line) + ": " + message), line_(line) {}

    std::size_t line() const { return line_; }

private:
    std::size_t line_;
};

class LoopEdge : public Error {
public:
    explicit LoopEdge(std::size_t index)
        : Error("loop edge (" + std::to_string(index) + "," + std::to_string(index) +
                ") violates irreflexivity"),
          index_(index) {}

    std::size_t index() const { return index_; }

private:
    std::size_t index_;
};

}  // namespace stableset
