#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace latmut {

using Elem = std::size_t;

class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Malformed cover input: cycle, self-loop or bad index.
class InvalidPoset : public Error {
public:
    using Error::Error;
};

class IndexOutOfRange : public Error {
public:
    using Error::Error;
};

class NotALattice : public Error {
public:
    NotALattice(Elem x, Elem y, std::string reason)
        : Error("not a lattice at (" + std::to_string(x) + "," + std::to_string(y) + "): " + reason),
          x(x), y(y), reason(std::move(reason)) {}
    Elem x;
    Elem y;
    std::string reason;
};

class Disconnected : public Error {
public:
    using Error::Error;
};

class NoDescentViolated : public Error {
public:
    NoDescentViolated(Elem x, Elem y)
        : Error("flip pair violates no-descent: " + std::to_string(x) + " in A lies above " +
                std::to_string(y) + " in B"),
          x(x), y(y) {}
    Elem x;
    Elem y;
};

class EmptySide : public Error {
public:
    using Error::Error;
};

class PreconditionFailed : public Error {
public:
    using Error::Error;
};

class PrerequisiteFailed : public Error {
public:
    using Error::Error;
};

class Overflow : public Error {
public:
    using Error::Error;
};

class RankCapExceeded : public Error {
public:
    using Error::Error;
};

class NotPolygonal : public Error {
public:
    NotPolygonal(Elem a, Elem b)
        : Error("interval [0, a v b] is not a (2,m)-polygon for atoms " + std::to_string(a) +
                " and " + std::to_string(b)),
          a(a), b(b) {}
    Elem a;
    Elem b;
};

class MutabilityViolation : public Error {
public:
    using Error::Error;
};

class ParseError : public Error {
public:
    using Error::Error;
};

// An internal consistency check failed; indicates a bug or a false theorem.
class AssertionFailed : public Error {
public:
    using Error::Error;
};

inline void ensure(bool cond, const std::string& what) {
    if (!cond) throw AssertionFailed(what);
}

}  // namespace latmut
