#ifndef ADMRANK_ERRORS_HPP
#define ADMRANK_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace admrank {

// Base class for all domain errors raised by the toolkit. Parse errors on
// the textual interfaces use ParseError instead; the CLI maps the two
// families to distinct exit codes.
struct Error : std::runtime_error {
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

struct ParseError : std::runtime_error {
    explicit ParseError(const std::string& what) : std::runtime_error(what) {}
};

struct ZeroFormError : Error {
    ZeroFormError() : Error("zero form is not a valid projective point") {}
};

struct LengthMismatchError : Error {
    explicit LengthMismatchError(const std::string& what) : Error(what) {}
};

struct DegreeTooHighError : Error {
    explicit DegreeTooHighError(const std::string& what) : Error(what) {}
};

struct DegreeOutOfRangeError : Error {
    explicit DegreeOutOfRangeError(const std::string& what) : Error(what) {}
};

struct NotSigmaStableError : Error {
    explicit NotSigmaStableError(const std::string& what) : Error(what) {}
};

struct DegenerateDehomogenizationError : Error {
    explicit DegenerateDehomogenizationError(const std::string& what) : Error(what) {}
};

struct CertificateSearchExhaustedError : Error {
    explicit CertificateSearchExhaustedError(const std::string& what) : Error(what) {}
};

struct NotAPencilError : Error {
    explicit NotAPencilError(const std::string& what) : Error(what) {}
};

struct DegenerateConfigurationError : Error {
    explicit DegenerateConfigurationError(const std::string& what) : Error(what) {}
};

} // namespace admrank

#endif
