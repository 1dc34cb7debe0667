#ifndef PRERIESZ_ERRORS_HPP
#define PRERIESZ_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace preriesz {

// Bad caller input (dimension mismatch, empty set, malformed value).
class ArgumentError : public std::invalid_argument {
public:
    explicit ArgumentError(const std::string& what) : std::invalid_argument(what) {}
};

// Input violates a structural requirement (non-pointed cone where a pointed
// one is required, dependent basis, ...).
class StructuralError : public std::runtime_error {
public:
    explicit StructuralError(const std::string& what) : std::runtime_error(what) {}
};

// An enumeration exceeded its configured resource cap.  Never a silent
// truncation: callers either get the full answer or this error.
class CapacityError : public std::runtime_error {
public:
    explicit CapacityError(const std::string& what) : std::runtime_error(what) {}
};

// Two routes that must agree by theorem disagreed.  Always a bug.
class InvariantViolation : public std::logic_error {
public:
    explicit InvariantViolation(const std::string& what) : std::logic_error(what) {}
};

// Malformed model or report file.
class ParseError : public std::runtime_error {
public:
    explicit ParseError(const std::string& what) : std::runtime_error(what) {}
};

} // namespace preriesz

#endif
