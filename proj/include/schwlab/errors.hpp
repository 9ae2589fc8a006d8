#pragma once

#include <stdexcept>
#include <string>

namespace schwlab {

// Caller broke a contract (mismatched jet base points, bad argument combos).
class UsageError : public std::logic_error {
public:
    explicit UsageError(const std::string& what) : std::logic_error(what) {}
};

// Input outside the declared domain (|z| >= 1, alpha <= 0, pole inside disk, ...).
class DomainError : public std::domain_error {
public:
    explicit DomainError(const std::string& what) : std::domain_error(what) {}
};

// Evaluation hit a singularity: vanishing derivative, division by a zero
// jet value, or a branch-cut violation.
class SingularEvaluation : public std::runtime_error {
public:
    explicit SingularEvaluation(const std::string& what) : std::runtime_error(what) {}
};

// Dilatation left the unit disk at the queried point (|omega(z)| >= 1).
class SensePreservationError : public std::runtime_error {
public:
    explicit SensePreservationError(const std::string& what) : std::runtime_error(what) {}
};

// A numeric procedure failed to converge (quadrature, refinement).
class NumericError : public std::runtime_error {
public:
    explicit NumericError(const std::string& what) : std::runtime_error(what) {}
};

} // namespace schwlab
