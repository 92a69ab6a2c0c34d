#ifndef SPECLAB_ERRORS_HPP
#define SPECLAB_ERRORS_HPP

#include <cmath>
#include <stdexcept>
#include <string>

namespace speclab {

// Thrown when an iterative numerical routine cannot reach its requested
// tolerance; carries the tolerance it did achieve.
class numerical_error : public std::runtime_error {
 public:
  explicit numerical_error(const std::string& what,
                           double achieved_tolerance = std::nan(""))
      : std::runtime_error(what), achieved_tolerance_(achieved_tolerance) {}

  double achieved_tolerance() const noexcept { return achieved_tolerance_; }

 private:
  double achieved_tolerance_;
};

// Circulant embedding produced eigenvalues below the negativity tolerance
// even after the retry ladder.
class embedding_error : public std::runtime_error {
 public:
  embedding_error(const std::string& what, double min_eigenvalue)
      : std::runtime_error(what), min_eigenvalue_(min_eigenvalue) {}

  double min_eigenvalue() const noexcept { return min_eigenvalue_; }

 private:
  double min_eigenvalue_;
};

}  // namespace speclab

#endif  // SPECLAB_ERRORS_HPP
