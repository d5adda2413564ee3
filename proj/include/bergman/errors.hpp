#pragma once

#include <stdexcept>
#include <string>

namespace bergman {

#define BERGMAN_DEFINE_ERROR(Name)                                            \
    struct Name : std::runtime_error {                                        \
        explicit Name(const std::string& what) : std::runtime_error(what) {}  \
    }

// jet algebra
BERGMAN_DEFINE_ERROR(LayoutMismatch);
BERGMAN_DEFINE_ERROR(ModeMismatch);
BERGMAN_DEFINE_ERROR(ZeroConstantTerm);
BERGMAN_DEFINE_ERROR(BadConstantTerm);
BERGMAN_DEFINE_ERROR(NotSquare);

// geometry
BERGMAN_DEFINE_ERROR(DegenerateMetric);
BERGMAN_DEFINE_ERROR(PreconditionViolated);

// recursion
BERGMAN_DEFINE_ERROR(InsufficientInputOrder);

// oracles
BERGMAN_DEFINE_ERROR(NonIntegrableWeight);
BERGMAN_DEFINE_ERROR(TailNotConverged);
BERGMAN_DEFINE_ERROR(QuadratureNotConverged);
BERGMAN_DEFINE_ERROR(DomainError);
BERGMAN_DEFINE_ERROR(NotPositiveDefinite);

// evaluation
BERGMAN_DEFINE_ERROR(TruncationUnreliable);

// input files
BERGMAN_DEFINE_ERROR(SpecError);

#undef BERGMAN_DEFINE_ERROR

} // namespace bergman
