#pragma once

#include <stdexcept>
#include <string>

namespace ordcert {

struct ModulusMismatch : std::runtime_error {
    explicit ModulusMismatch(const std::string& what) : std::runtime_error(what) {}
};

struct DimensionMismatch : std::runtime_error {
    explicit DimensionMismatch(const std::string& what) : std::runtime_error(what) {}
};

struct VertexOutOfRange : std::runtime_error {
    explicit VertexOutOfRange(const std::string& what) : std::runtime_error(what) {}
};

struct AlgebraMismatch : std::runtime_error {
    explicit AlgebraMismatch(const std::string& what) : std::runtime_error(what) {}
};

struct NotCyclicNakayama : std::runtime_error {
    explicit NotCyclicNakayama(const std::string& what) : std::runtime_error(what) {}
};

struct NotAutomorphism : std::runtime_error {
    explicit NotAutomorphism(const std::string& what) : std::runtime_error(what) {}
};

struct IdempotentDiscoveryFailed : std::runtime_error {
    explicit IdempotentDiscoveryFailed(const std::string& what) : std::runtime_error(what) {}
};

struct InsufficientDepth : std::runtime_error {
    explicit InsufficientDepth(const std::string& what) : std::runtime_error(what) {}
};

struct LiftingFailed : std::runtime_error {
    explicit LiftingFailed(const std::string& what) : std::runtime_error(what) {}
};

struct DegreeMismatch : std::runtime_error {
    explicit DegreeMismatch(const std::string& what) : std::runtime_error(what) {}
};

struct NotProjectiveTerms : std::runtime_error {
    explicit NotProjectiveTerms(const std::string& what) : std::runtime_error(what) {}
};

struct InconclusiveIsoTest : std::runtime_error {
    explicit InconclusiveIsoTest(const std::string& what) : std::runtime_error(what) {}
};

struct VerificationFailed : std::runtime_error {
    explicit VerificationFailed(const std::string& what) : std::runtime_error(what) {}
};

struct MixedTypes : std::runtime_error {
    explicit MixedTypes(const std::string& what) : std::runtime_error(what) {}
};

struct NotBasic : std::runtime_error {
    explicit NotBasic(const std::string& what) : std::runtime_error(what) {}
};

struct NotBijective : std::runtime_error {
    explicit NotBijective(const std::string& what) : std::runtime_error(what) {}
};

struct NoRootOfUnity : std::runtime_error {
    explicit NoRootOfUnity(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace ordcert
