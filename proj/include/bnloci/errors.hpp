#pragma once

#include <stdexcept>
#include <string>

namespace bnloci {

// A query outside the region where the requested quantity is defined
// (negative radicand, kappa with rho >= 0, ...).
class DomainError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

// Something that must not happen if the implementation is correct: two
// routes to the same number disagree, a scan hits its cap, etc.
class InternalError : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

// Wide intermediate left the representable range.
class OverflowError : public InternalError {
public:
    using InternalError::InternalError;
};

} // namespace bnloci
