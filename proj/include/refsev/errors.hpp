#pragma once

#include <stdexcept>
#include <string>

namespace refsev {

/// Invalid input data: malformed polygons, negative cogenus, unbalanced
/// boundary data, unparsable text.  The CLI maps this to exit code 1.
class DomainError : public std::runtime_error {
public:
    explicit DomainError(const std::string& what) : std::runtime_error(what) {}
};

/// An enumeration or state-space guard tripped before completing the
/// computation (instance too large for the requested method).
class GuardError : public std::runtime_error {
public:
    explicit GuardError(const std::string& what) : std::runtime_error(what) {}
};

} // namespace refsev
