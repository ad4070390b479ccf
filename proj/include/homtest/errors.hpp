#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace homtest {

// Base class for all library errors.
class error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class insufficient_sample_error : public error {
 public:
  using error::error;
};

class non_finite_error : public error {
 public:
  using error::error;
};

class dimension_mismatch_error : public error {
 public:
  using error::error;
};

// A required L-moment denominator vanished (constant or zero-mean column).
class degenerate_scale_error : public error {
 public:
  using error::error;
};

class infeasible_params_error : public error {
 public:
  using error::error;
};

// Iterative fit failed; a first-class outcome for the parametric test.
class non_convergence_error : public error {
 public:
  non_convergence_error(const std::string& what, int iterations, double residual)
      : error(what), iterations(iterations), residual(residual) {}
  int iterations = 0;
  double residual = 0.0;
};

class invalid_dependence_error : public error {
 public:
  using error::error;
};

class length_mismatch_error : public error {
 public:
  using error::error;
};

class empty_pool_error : public error {
 public:
  using error::error;
};

class unattainable_error : public error {
 public:
  using error::error;
};

class unsupported_dimension_error : public error {
 public:
  using error::error;
};

class insufficient_sites_error : public error {
 public:
  using error::error;
};

class parse_error : public error {
 public:
  parse_error(const std::string& what, std::size_t line) : error(what), line(line) {}
  std::size_t line = 0;
};

class spec_error : public error {
 public:
  spec_error(const std::string& what, const std::string& field) : error(what), field(field) {}
  std::string field;
};

class empty_result_error : public error {
 public:
  using error::error;
};

}  // namespace homtest
