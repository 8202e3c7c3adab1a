#pragma once

#include <stdexcept>
#include <string>
#include <utility>

namespace hpk {

// Base class for all recoverable domain errors. Each subclass carries a
// stable machine-readable code; the CLI maps any DomainError to exit status 1
// and an {"error": {"code", "message"}} object on stdout.
class DomainError : public std::runtime_error {
public:
    DomainError(std::string code, const std::string& message)
        : std::runtime_error(message), code_(std::move(code)) {}

    const std::string& code() const noexcept { return code_; }

private:
    std::string code_;
};

// deg g' >= deg h', so the analytic part does not dominate and the zero set
// need not be finite. Raised by zero search and by the experiment driver.
struct DegenerateDegrees : DomainError {
    explicit DegenerateDegrees(const std::string& msg)
        : DomainError("degenerate_degrees", msg) {}
};

// An operation that needs a nonconstant function received a constant one.
struct ConstantInput : DomainError {
    explicit ConstantInput(const std::string& msg)
        : DomainError("constant_input", msg) {}
};

// Dilatation g'/h' requires a nonconstant analytic part.
struct ConstantAnalyticPart : DomainError {
    explicit ConstantAnalyticPart(const std::string& msg)
        : DomainError("constant_analytic_part", msg) {}
};

// Evaluation point lies outside the open unit disk.
struct OutsideDisk : DomainError {
    explicit OutsideDisk(const std::string& msg)
        : DomainError("outside_disk", msg) {}
};

// The integrand of a winding computation came too close to zero on the
// contour even after adaptive refinement; the index is not defined there.
struct NearZeroOnContour : DomainError {
    explicit NearZeroOnContour(const std::string& msg)
        : DomainError("near_zero_on_contour", msg) {}
};

// Subdivision could not separate the zero set into isolated points at the
// requested tolerance (a curve of zeros, or zeros closer than resolvable).
struct NonIsolatedZeros : DomainError {
    explicit NonIsolatedZeros(const std::string& msg)
        : DomainError("non_isolated_zeros", msg) {}
};

// Cofactor scale must be a nonzero real number.
struct InvalidAlpha : DomainError {
    explicit InvalidAlpha(const std::string& msg)
        : DomainError("invalid_alpha", msg) {}
};

// Trace coefficients fail the Hermitian symmetry a real signal requires.
struct InvalidBoundaryData : DomainError {
    explicit InvalidBoundaryData(const std::string& msg)
        : DomainError("invalid_boundary_data", msg) {}
};

// Malformed values that pass syntax but fail semantic validation
// (non-rectangular coefficient matrices, bad JSON shapes, bad ranges).
struct InvalidInput : DomainError {
    explicit InvalidInput(const std::string& msg)
        : DomainError("invalid_input", msg) {}
};

}  // namespace hpk
