#pragma once

#include <stdexcept>
#include <string>

namespace ratmoduli {

// Rejected input: bad degrees, vanishing resultants, violated invariants.
class InvalidInputError : public std::runtime_error {
public:
    explicit InvalidInputError(const std::string& what) : std::runtime_error(what) {}
};

// The computation itself gave up: non-convergent iterations, exhausted retries.
class NumericalError : public std::runtime_error {
public:
    explicit NumericalError(const std::string& what) : std::runtime_error(what) {}
};

// A conjugation produced a denominator of too-low degree (the transform moved a
// fixed point to infinity).  Callers that can pick a different transform catch this.
class DegenerateConjugationError : public NumericalError {
public:
    explicit DegenerateConjugationError(const std::string& what) : NumericalError(what) {}
};

} // namespace ratmoduli
