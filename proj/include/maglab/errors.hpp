#pragma once

#include <complex>
#include <stdexcept>
#include <string>

namespace maglab {

// Every failure mode carries a stable machine-readable name (used by the CLI
// error payload) in addition to the human-readable message.
class Error : public std::runtime_error {
public:
    Error(std::string name, const std::string& message)
        : std::runtime_error(message), name_(std::move(name)) {}

    const std::string& name() const noexcept { return name_; }

private:
    std::string name_;
};

struct PoleArgument : Error {
    explicit PoleArgument(const std::string& msg) : Error("PoleArgument", msg) {}
};

struct NonPositiveBase : Error {
    explicit NonPositiveBase(const std::string& msg) : Error("NonPositiveBase", msg) {}
};

// Quadrature gave up; `best` and `error_estimate` hold the best attempt.
struct ToleranceNotMet : Error {
    ToleranceNotMet(const std::string& msg, std::complex<double> best, double error_estimate)
        : Error("ToleranceNotMet", msg), best(best), error_estimate(error_estimate) {}
    std::complex<double> best;
    double error_estimate;
};

struct SlowDecay : Error {
    explicit SlowDecay(const std::string& msg) : Error("SlowDecay", msg) {}
};

struct EvaluationFailure : Error {
    explicit EvaluationFailure(const std::string& msg) : Error("EvaluationFailure", msg) {}
};

struct NotPrime : Error {
    explicit NotPrime(const std::string& msg) : Error("NotPrime", msg) {}
};

struct DimensionMismatch : Error {
    explicit DimensionMismatch(const std::string& msg) : Error("DimensionMismatch", msg) {}
};

struct NotNormalized : Error {
    explicit NotNormalized(const std::string& msg) : Error("NotNormalized", msg) {}
};

struct SingularKernel : Error {
    SingularKernel(const std::string& msg, double condition_estimate)
        : Error("SingularKernel", msg), condition_estimate(condition_estimate) {}
    double condition_estimate;
};

struct NotPositiveDefinite : Error {
    NotPositiveDefinite(const std::string& msg, double min_eigenvalue)
        : Error("NotPositiveDefinite", msg), min_eigenvalue(min_eigenvalue) {}
    double min_eigenvalue;
};

struct ZeroLeadingCoefficient : Error {
    explicit ZeroLeadingCoefficient(const std::string& msg)
        : Error("ZeroLeadingCoefficient", msg) {}
};

struct OrderExceeded : Error {
    explicit OrderExceeded(const std::string& msg) : Error("OrderExceeded", msg) {}
};

struct OffLattice : Error {
    explicit OffLattice(const std::string& msg) : Error("OffLattice", msg) {}
};

struct OutsideStrip : Error {
    explicit OutsideStrip(const std::string& msg) : Error("OutsideStrip", msg) {}
};

struct InsufficientDepth : Error {
    explicit InsufficientDepth(const std::string& msg) : Error("InsufficientDepth", msg) {}
};

struct BoundaryPole : Error {
    explicit BoundaryPole(const std::string& msg) : Error("BoundaryPole", msg) {}
};

// How a sampled function failed to look like a single power law.
enum class NonPowerLawKind {
    Oscillatory,      // log-periodic style oscillation that never settles
    SuperPolynomial,  // decays faster than every power
    Unresolved,       // slope estimates drift without a recognizable pattern
};

struct NonPowerLaw : Error {
    NonPowerLaw(const std::string& msg, NonPowerLawKind kind)
        : Error("NonPowerLaw", msg), kind(kind) {}
    NonPowerLawKind kind;
};

struct IllConditioned : Error {
    IllConditioned(const std::string& msg, double condition)
        : Error("IllConditioned", msg), condition(condition) {}
    double condition;
};

struct DisagreeingMethods : Error {
    explicit DisagreeingMethods(const std::string& msg) : Error("DisagreeingMethods", msg) {}
};

struct SchemaError : Error {
    explicit SchemaError(const std::string& msg) : Error("SchemaError", msg) {}
};

struct MetricViolation : Error {
    explicit MetricViolation(const std::string& msg) : Error("MetricViolation", msg) {}
};

struct ParseError : Error {
    explicit ParseError(const std::string& msg) : Error("ParseError", msg) {}
};

}  // namespace maglab
