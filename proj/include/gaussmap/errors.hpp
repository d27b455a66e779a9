#ifndef GAUSSMAP_ERRORS_HPP
#define GAUSSMAP_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace gaussmap {

// Exit-code taxonomy shared by the library and the CLI:
//   2 = input/spec parse failure, 3 = regular-sequence certification failure,
//   4 = precondition violation (bad twist, divisibility, non-curve input, ...).
class Error : public std::runtime_error {
public:
    Error(std::string msg, int exit_code)
        : std::runtime_error(std::move(msg)), exit_code_(exit_code) {}
    int exit_code() const { return exit_code_; }

private:
    int exit_code_;
};

class SpecParseError : public Error {
public:
    explicit SpecParseError(const std::string& msg) : Error(msg, 2) {}
};

// Computed Hilbert function disagrees with the closed-form series: the given
// forms are not a regular sequence up to the working degree.
class CertificationError : public Error {
public:
    CertificationError(const std::string& msg, int degree)
        : Error(msg, 3), degree_(degree) {}
    int degree() const { return degree_; }

private:
    int degree_;
};

class PreconditionError : public Error {
public:
    explicit PreconditionError(const std::string& msg) : Error(msg, 4) {}
};

class InvalidInputError : public PreconditionError {
public:
    explicit InvalidInputError(const std::string& msg) : PreconditionError(msg) {}
};

class DimensionError : public PreconditionError {
public:
    explicit DimensionError(const std::string& msg) : PreconditionError(msg) {}
};

// h does not divide xi, so zeta = xi/h is undefined.
class UndefinedZetaError : public PreconditionError {
public:
    explicit UndefinedZetaError(const std::string& msg) : PreconditionError(msg) {}
};

class UnsupportedTwistError : public PreconditionError {
public:
    explicit UnsupportedTwistError(const std::string& msg) : PreconditionError(msg) {}
};

}  // namespace gaussmap

#endif
