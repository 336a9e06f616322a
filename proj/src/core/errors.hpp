#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace entro {

// Base class for all errors raised by the library.
struct Error : std::runtime_error {
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

// Malformed expression / rational / pmf / script text.  `position` is a byte
// offset into the offending input where known, 0 otherwise.
struct ParseError : Error {
    std::size_t position;
    explicit ParseError(const std::string& what, std::size_t pos = 0)
        : Error(what), position(pos) {}
};

// Two forms over different variable contexts were combined.
struct ContextMismatchError : Error {
    using Error::Error;
};

// A variable name not present in the relevant context.
struct UnknownVariableError : Error {
    using Error::Error;
};

// Variable count outside the supported range (representation or LP cap).
struct LimitError : Error {
    using Error::Error;
};

// A rule was applied to a form that does not have the required shape.
struct RuleShapeError : Error {
    using Error::Error;
};

// Some term mixes the copy variable with a proper part of the x-group.
struct MixedTermError : RuleShapeError {
    using RuleShapeError::RuleShapeError;
};

// The extracted alpha coefficient is negative.
struct NegativeAlphaError : RuleShapeError {
    using RuleShapeError::RuleShapeError;
};

// Invalid probability table (negative mass, wrong sum, bad header...).
struct PmfError : Error {
    using Error::Error;
};

// Derivation script error that is not an assertion failure: unknown names,
// malformed statements, misuse of a verb.  `line` is 1-based.
struct ScriptError : Error {
    int line;
    explicit ScriptError(const std::string& what, int line_no = 0)
        : Error(what), line(line_no) {}
};

}  // namespace entro
