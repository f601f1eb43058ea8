#ifndef CCA_ERRORS_HPP
#define CCA_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace cca {

// Base class for everything thrown by the library.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

// Operands live in different rings (variable count or coefficient field).
class RingMismatchError : public Error {
public:
    explicit RingMismatchError(const std::string& msg) : Error(msg) {}
};

// Argument outside the mathematical domain of the operation
// (negative power, leading term of zero, class of a constant, ...).
class DomainError : public Error {
public:
    explicit DomainError(const std::string& msg) : Error(msg) {}
};

class SingularChangeError : public Error {
public:
    explicit SingularChangeError(const std::string& msg) : Error(msg) {}
};

// A configured cap was exceeded (pair queue, oracle size, ...).
class ResourceLimitError : public Error {
public:
    explicit ResourceLimitError(const std::string& msg) : Error(msg) {}
};

// Randomized sampling produced no majority candidate.
class AmbiguityError : public Error {
public:
    explicit AmbiguityError(const std::string& msg) : Error(msg) {}
};

class UnsupportedError : public Error {
public:
    explicit UnsupportedError(const std::string& msg) : Error(msg) {}
};

// The supplied linear forms are not a system of parameters.
class NotSopError : public Error {
public:
    explicit NotSopError(const std::string& msg) : Error(msg) {}
};

// A theorem hypothesis (finite annihilator lengths / filter regularity)
// does not hold for the input.  CLI maps this to exit code 2.
class HypothesisError : public Error {
public:
    explicit HypothesisError(const std::string& msg) : Error(msg) {}
};

// An involutive basis failed its uniqueness contract.
class BasisInvalidError : public Error {
public:
    explicit BasisInvalidError(const std::string& msg) : Error(msg) {}
};

class SearchFailureError : public Error {
public:
    explicit SearchFailureError(const std::string& msg) : Error(msg) {}
};

// Input file rejected; carries 1-based line/column.
class ParseError : public Error {
public:
    ParseError(const std::string& msg, int line, int column)
        : Error(msg + " (line " + std::to_string(line) + ", column " +
                std::to_string(column) + ")"),
          line_(line), column_(column) {}
    int line() const { return line_; }
    int column() const { return column_; }

private:
    int line_;
    int column_;
};

// A proved theorem was contradicted at runtime: always a bug.
class InternalError : public Error {
public:
    explicit InternalError(const std::string& msg) : Error(msg) {}
};

} // namespace cca

#endif
