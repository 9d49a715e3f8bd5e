#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace nfalg {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// algebra construction / element arithmetic
struct NonAssociative : Error { using Error::Error; };
struct BadUnit : Error { using Error::Error; };
struct AlgebraMismatch : Error { using Error::Error; };

// presentation parsing and compilation
struct ParseError : Error {
    ParseError(std::string msg, std::size_t line = 0, std::size_t col = 0)
        : Error("line " + std::to_string(line) + ", col " + std::to_string(col) + ": " + msg),
          line(line), col(col) {}
    std::size_t line, col;
};
struct UnknownVertex : ParseError { using ParseError::ParseError; };
struct NonComposablePath : ParseError { using ParseError::ParseError; };
struct RelationTooShort : ParseError { using ParseError::ParseError; };
struct UnknownBuiltin : Error { using Error::Error; };
struct InconsistentBound : Error { using Error::Error; };

// nearly Frobenius structure
struct NotCentral : Error { using Error::Error; };
struct DegenerateForm : Error { using Error::Error; };
struct PreconditionUnmet : Error { using Error::Error; };

// morphisms and Schur data
struct NotMultiplicative : Error { using Error::Error; };
struct NotUnital : Error { using Error::Error; };
struct RelationNotKilled : Error { using Error::Error; };
struct NotSurjective : Error { using Error::Error; };
struct TargetNotFrobenius : Error { using Error::Error; };
struct SchurNotInvertible : Error { using Error::Error; };

}  // namespace nfalg
