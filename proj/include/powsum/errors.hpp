#pragma once

#include <stdexcept>
#include <string>

namespace powsum {

/// Malformed or out-of-domain arguments (bad n, mismatched rings, bad JSON).
class InputError : public std::invalid_argument {
public:
    explicit InputError(const std::string& what) : std::invalid_argument(what) {}
};

/// A mathematical precondition of the operation does not hold for the data,
/// e.g. a non-skew tuple handed to the contact-locus check.
class PreconditionError : public std::domain_error {
public:
    explicit PreconditionError(const std::string& what) : std::domain_error(what) {}
};

/// The data is not consistent with the model it claims to come from.
class InconsistencyError : public std::runtime_error {
public:
    explicit InconsistencyError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace powsum
