#pragma once

#include <stdexcept>
#include <string>

namespace nsmix {

/// Numerical failure during a run (solve breakdown, positivity loss,
/// volume-fraction escape). Distinct from precondition violations,
/// which throw std::invalid_argument.
class SolverError : public std::runtime_error {
public:
    explicit SolverError(const std::string& what) : std::runtime_error(what) {}
};

/// A theorem-backed certificate check failed at run time.
class CertificateViolation : public std::runtime_error {
public:
    explicit CertificateViolation(const std::string& what) : std::runtime_error(what) {}
};

} // namespace nsmix
