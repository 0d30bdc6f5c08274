#pragma once

#include <stdexcept>

namespace qtail {

// Abscissa or probability outside the mathematical domain of an operation.
using domain_error = std::domain_error;

// Evaluation outside a bound's proven validity interval without force=true.
class validity_error : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// A root search whose predicate does not change sign over the given bracket.
class bracket_error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A root target that the function cannot reach on its admissible interval.
class attainability_error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Invalid command configuration; the CLI maps this to exit code 2.
class config_error : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

}  // namespace qtail
