#ifndef FGI_ERRORS_HPP
#define FGI_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace fgi {

// Precondition violations (bad indices, mismatched dimensions, malformed
// literals) are reported with std::invalid_argument. The classes below cover
// the two other failure families: the mathematics has no answer, or the
// request is too large to evaluate at desk scale.

/// Malformed external input; the message names the offending field path.
class parse_error : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// The requested quantity does not exist over the given data.
class domain_error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A matrix that must be inverted has zero determinant.
class singular_matrix_error : public domain_error {
 public:
  using domain_error::domain_error;
};

/// A formal Gaussian integral whose monomial expansion is not summable
/// within the requested output degree.
class summability_error : public domain_error {
 public:
  using domain_error::domain_error;
};

/// Guard tripped by combinatorial blow-up (ground sets, tensor sweeps, degrees).
class resource_error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace fgi

#endif  // FGI_ERRORS_HPP
