#ifndef TRIGACCEL_ERRORS_HPP
#define TRIGACCEL_ERRORS_HPP

#include <cstddef>
#include <stdexcept>
#include <string>

namespace trigaccel {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class InvalidArgument : public Error {
 public:
  using Error::Error;
};

/// 1 - 2 r_j cos(alpha x) + r_j^2 is too close to zero: r_j e^{+-i alpha x} ~ 1.
class DenominatorNearZero : public Error {
 public:
  explicit DenominatorNearZero(std::size_t j)
      : Error("denominator " + std::to_string(j) +
              " is near zero (r_j e^{+-i alpha x} ~ 1)"),
        index_(j) {}

  /// 1-based position of the offending r_j.
  std::size_t index() const noexcept { return index_; }

 private:
  std::size_t index_;
};

/// Probe ratios failed the stagnation test.
class RatioDivergent : public Error {
 public:
  RatioDivergent(const std::string& what, double last_estimate, double last_step)
      : Error(what), last_estimate_(last_estimate), last_step_(last_step) {}

  double last_estimate() const noexcept { return last_estimate_; }
  double last_step() const noexcept { return last_step_; }

 private:
  double last_estimate_;
  double last_step_;
};

/// L_{r_1..r_p}(a_n) vanished at a probe index.
class ZeroDenominator : public Error {
 public:
  ZeroDenominator(const std::string& what, bool annihilated)
      : Error(what), annihilated_(annihilated) {}

  /// Every probe vanished: the sequence is annihilated by the current operator.
  bool annihilated() const noexcept { return annihilated_; }

 private:
  bool annihilated_;
};

class BudgetExceeded : public Error {
 public:
  using Error::Error;
};

}  // namespace trigaccel

#endif  // TRIGACCEL_ERRORS_HPP
