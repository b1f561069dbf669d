#pragma once

#include <stdexcept>
#include <string>

namespace qcong {

// Input outside the domain of an operation (negative exponents where an
// ordinary polynomial is required, n < 1 for cyclotomic indices, ...).
struct DomainError : std::domain_error {
  using std::domain_error::domain_error;
};

struct DivisionByZero : std::domain_error {
  using std::domain_error::domain_error;
};

// gcd(0, 0) and similar requests with no meaningful answer.
struct UndefinedInput : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// Evaluation of a Laurent polynomial with negative exponents at 0.
struct PoleError : std::domain_error {
  using std::domain_error::domain_error;
};

// Inverse requested for a non-unit of Q[q]/Phi_n^e.
struct NonUnitError : std::domain_error {
  using std::domain_error::domain_error;
};

// A family was instantiated outside the hypotheses of its theorem.
struct InvalidParams : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// Precondition of a checker violated (residue class, index range, ...).
struct PreconditionError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// A denominator factor vanishes identically (after substitution).
struct DegenerateInstance : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// An exact division that must succeed did not: indicates a kernel defect.
struct InexactDivision : std::logic_error {
  using std::logic_error::logic_error;
};

}  // namespace qcong
