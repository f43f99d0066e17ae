#ifndef TRIGACCEL_EVALUATION_HPP
#define TRIGACCEL_EVALUATION_HPP

#include <complex>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "trigaccel/acceleration.hpp"

namespace trigaccel {

inline constexpr index_t kOracleBudget = 1'000'000;
inline constexpr index_t kCountBudget = 100'000;
inline constexpr index_t kOracleQuietRun = 30;

/// Upper bound on |sum_{n > N} a_n T(n)|, given N.
using TailBound = std::function<real_t(index_t)>;

struct OracleResult {
  scalar_t value;
  index_t terms = 0;
};

/// Compensated direct summation used as ground truth for error measurements.
///
/// Without a tail bound function: stop once kOracleQuietRun consecutive |a_n| are
/// below tail_bound / 100, then add kOracleQuietRun more terms. With one: stop at
/// the first N whose bound is <= tail_bound. Throws BudgetExceeded after `budget` terms.
OracleResult oracle_sum(const SeriesSpec& series, real_t tail_bound,
                        const TailBound& tail = nullptr, index_t budget = kOracleBudget);

/// Smallest N >= 1 with |S_N - reference| <= tol.
index_t terms_to_tolerance_direct(const SeriesSpec& series, real_t tol, const scalar_t& reference);

struct TransformedCount {
  index_t remainder_count = 0;  ///< remainder terms only
  index_t total_count = 0;      ///< remainder terms + p head terms
  real_t achieved_error;
};

/// Smallest N >= 0 with |transformed_partial_sum(transform(series, r), N) - reference| <= tol.
TransformedCount terms_to_tolerance_transformed(const SeriesSpec& series, const RSequence& r,
                                                real_t tol, const scalar_t& reference);

struct PerPEntry {
  std::size_t p = 0;
  std::vector<std::complex<double>> r;
  index_t remainder_terms = 0;
  index_t total_terms = 0;
  std::size_t head_count = 0;
  double achieved_error = 0;
  std::complex<double> head_sum;
  /// Set when this entry could not be computed.
  std::optional<std::string> error;
};

struct ValidationSummary {
  bool domain_ok = false;
  bool r_positive_real = false;
  std::string decay_condition = "indeterminate";
  std::string decay_model = "power";
  double lambda_hat = 0;
  bool denominators_ok = false;
  std::size_t probed = 0;

  static ValidationSummary from(const ValidationReport& report);
  friend bool operator==(const ValidationSummary&, const ValidationSummary&) = default;
};

struct AccelerationReport {
  std::complex<double> reference_sum;
  index_t reference_terms = 0;
  /// -1 when the direct count ran out of budget (see direct_error).
  index_t direct_terms = 0;
  std::optional<std::string> direct_error;
  double tolerance = 0;
  ValidationSummary validation;
  std::vector<PerPEntry> per_p;
  std::string r_selection_stop;
  /// Set when the reference sum (and therefore every count) is unavailable.
  std::optional<std::string> reference_error;
  /// Sine series only: max deviation between the sine path and the beta-shifted cosine path.
  std::optional<double> sine_crosscheck;
};

inline constexpr std::size_t kValidationWindow = 6;

/// Runs the oracle, r selection, hypothesis validation and term counting for
/// p = 1..max_p. Per-p failures are recorded in the entry instead of thrown.
AccelerationReport build_report(const SeriesSpec& series, const RSelectionConfig& cfg, double tol,
                                std::size_t max_p);

}  // namespace trigaccel

#endif  // TRIGACCEL_EVALUATION_HPP
