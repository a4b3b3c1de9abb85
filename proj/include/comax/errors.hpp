#pragma once

#include <stdexcept>
#include <string>

namespace comax {

struct InvalidInput : std::runtime_error {
    explicit InvalidInput(const std::string& msg) : std::runtime_error(msg) {}
};

struct InfeasibleSupport : std::runtime_error {
    explicit InfeasibleSupport(const std::string& msg) : std::runtime_error(msg) {}
};

struct BudgetExceeded : std::runtime_error {
    explicit BudgetExceeded(const std::string& msg) : std::runtime_error(msg) {}
};

struct DependentActiveSet : std::runtime_error {
    explicit DependentActiveSet(const std::string& msg) : std::runtime_error(msg) {}
};

struct SingularBasis : std::runtime_error {
    explicit SingularBasis(const std::string& msg) : std::runtime_error(msg) {}
};

struct HardCase : std::runtime_error {
    explicit HardCase(const std::string& msg) : std::runtime_error(msg) {}
};

struct NoAttainedOptimum : std::runtime_error {
    explicit NoAttainedOptimum(const std::string& msg) : std::runtime_error(msg) {}
};

struct PreconditionUnmet : std::runtime_error {
    explicit PreconditionUnmet(const std::string& msg) : std::runtime_error(msg) {}
};

struct MatroidAxiomViolation : std::runtime_error {
    explicit MatroidAxiomViolation(const std::string& msg) : std::runtime_error(msg) {}
};

struct ObjectiveContractViolation : std::runtime_error {
    explicit ObjectiveContractViolation(const std::string& msg) : std::runtime_error(msg) {}
};

struct OracleContractViolation : std::runtime_error {
    explicit OracleContractViolation(const std::string& msg) : std::runtime_error(msg) {}
};

} // namespace comax
