#pragma once

#include <stdexcept>
#include <string>

namespace qic {

// Violation of a domain invariant (dimension mismatch, non-Hermitian input,
// non-unit trace, completeness deficit, ...).
class invariant_violation : public std::runtime_error {
public:
    explicit invariant_violation(const std::string& what) : std::runtime_error(what) {}
};

// An iterative routine failed to reach its stopping criterion.
class convergence_error : public std::runtime_error {
public:
    explicit convergence_error(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace qic
