#ifndef IWASAWA_ERRORS_HPP
#define IWASAWA_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace iwasawa {

// Operands that cannot be combined (mismatched prime or precision, zero
// polynomial where a nonzero one is required).
class StructuralError : public std::logic_error {
  public:
    using std::logic_error::logic_error;
};

class NotAUnit : public std::domain_error {
  public:
    using std::domain_error::domain_error;
};

// An input outside the domain where an operation has a meaning.
class DomainError : public std::domain_error {
  public:
    using std::domain_error::domain_error;
};

// Data that no consistent arithmetic situation can produce.
class InconsistentInput : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

class ValidationError : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

// Schema violation while reading a fixture document. `path()` is a
// JSON-pointer style location such as "/3/levels/1/0".
class ParseError : public std::runtime_error {
    std::string path_;

  public:
    ParseError(std::string path, std::string const & what)
        : std::runtime_error(path + ": " + what), path_(std::move(path)) {}
    std::string const & path() const { return path_; }
};

} // namespace iwasawa

#endif /* IWASAWA_ERRORS_HPP */
