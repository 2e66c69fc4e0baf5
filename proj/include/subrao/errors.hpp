#ifndef SUBRAO_ERRORS_HPP
#define SUBRAO_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace subrao {

struct DivisionByZero : std::domain_error {
    DivisionByZero() : std::domain_error("division by zero") {}
};

struct MixedFieldOperands : std::invalid_argument {
    MixedFieldOperands() : std::invalid_argument("operands belong to different fields") {}
};

/// Raised for p that is not an odd prime, or too large for the word-sized kernels.
struct InvalidPrime : std::invalid_argument {
    explicit InvalidPrime(unsigned long p)
        : std::invalid_argument("modulus " + std::to_string(p) + " is not an odd prime below 2^16") {}
};

/// The evaluation point is a root of the denominator; the caller must resample.
struct PoleAtSpecializationPoint : std::domain_error {
    PoleAtSpecializationPoint() : std::domain_error("pole at specialization point") {}
};

struct DimensionMismatch : std::invalid_argument {
    explicit DimensionMismatch(const std::string& what) : std::invalid_argument(what) {}
};

struct SubspaceNotInvariant : std::logic_error {
    SubspaceNotInvariant() : std::logic_error("operator does not preserve the subspace") {}
};

struct PrincipalSubspaceNotPreserved : std::logic_error {
    PrincipalSubspaceNotPreserved()
        : std::logic_error("action does not preserve the principal derivations") {}
};

struct SingularMoebius : std::domain_error {
    SingularMoebius() : std::domain_error("Moebius matrix has zero determinant") {}
};

struct NotOrderP : std::domain_error {
    NotOrderP() : std::domain_error("operator does not satisfy sigma^p = 1") {}
};

struct GeneratorsDoNotCommute : std::domain_error {
    GeneratorsDoNotCommute() : std::domain_error("generator matrices do not commute") {}
};

struct EvenPrime : std::domain_error {
    EvenPrime() : std::domain_error("prediction requires an odd prime") {}
};

struct CorruptCache : std::runtime_error {
    explicit CorruptCache(const std::string& what) : std::runtime_error("corrupt cache: " + what) {}
};

}  // namespace subrao

#endif  // SUBRAO_ERRORS_HPP
