#ifndef PBBS_ERRORS_HPP
#define PBBS_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace pbbs {

// A state with no balls or no empty boxes.
struct degenerate_state_error : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// Structurally inconsistent input (block sums vs. length, bad flags, ...).
struct inconsistency_error : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// A domain invariant does not hold (ball count >= L/2, prod V >= prod I, ...).
struct invariant_error : std::domain_error {
  using std::domain_error::domain_error;
};

// Working precision too low to certify a result.
struct precision_error : std::runtime_error {
  precision_error(const std::string& what, unsigned suggested)
      : std::runtime_error(what), suggested_prec(suggested) {}
  unsigned suggested_prec;
};

// Bounded search (cycle detection, root bracketing) hit its cap.
struct bounded_search_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace pbbs

#endif
