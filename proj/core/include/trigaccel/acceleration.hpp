#ifndef TRIGACCEL_ACCELERATION_HPP
#define TRIGACCEL_ACCELERATION_HPP

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "trigaccel/transforms.hpp"

namespace trigaccel {

struct RSelectionConfig {
  std::size_t max_p = 3;
  index_t ratio_probe_start = 30;
  index_t ratio_probe_count = 10;
  /// Absolute step below which an extrapolated probe sequence counts as settled.
  double stagnation_tol = 1e-9;
  /// |L(a_n)| <= annihilation_tol * sum_k |E_k a_{n+p-k}| is treated as zero.
  double annihilation_tol = 1e-40;

  /// Throws InvalidArgument when a field is out of range.
  void validate() const;
};

enum class ExtrapolationRoute {
  aitken,      ///< iterated Aitken delta^2, for geometrically settling ratios
  richardson,  ///< polynomial extrapolation in 1/n, for algebraically settling ratios
};

struct RatioEstimate {
  scalar_t value;
  ExtrapolationRoute route = ExtrapolationRoute::aitken;
  /// Aitken depth, or Richardson polynomial degree.
  std::size_t level = 0;
  /// |last - previous| on the chosen extrapolated sequence.
  real_t step;
  index_t probe_first = 0;
  index_t probe_last = 0;
};

/// Estimates lim L_{r}(a_{n+1}) / L_{r}(a_n) (plain a_{n+1}/a_n for empty r)
/// from the probe window [ratio_probe_start, ratio_probe_start + ratio_probe_count).
///
/// The probe ratios are extrapolated two ways and the route whose final step is
/// smaller wins; the estimate is accepted once that step is below stagnation_tol.
/// Throws ZeroDenominator when L vanishes at a probe, RatioDivergent otherwise.
RatioEstimate estimate_r_next(const CoefficientSequence& a, std::span<const scalar_t> r_so_far,
                              const RSelectionConfig& cfg);

enum class RSelectionStop { reached_max_p, annihilated, ratio_divergent, zero_denominator };

std::string to_string(RSelectionStop reason);

struct RSelection {
  std::vector<scalar_t> values;
  std::vector<RatioEstimate> estimates;
  RSelectionStop reason = RSelectionStop::reached_max_p;
  std::string detail;

  /// The selected values, or nullopt when none were selected.
  std::optional<RSequence> sequence() const;
};

/// Repeated estimate_r_next up to cfg.max_p values. Stops early on annihilation
/// or a failed ratio estimate; the reason is recorded, never thrown.
RSelection estimate_r_sequence(const CoefficientSequence& a, const RSelectionConfig& cfg);

enum class DecayCondition { decays, grows, indeterminate };
enum class DecayModel { power, geometric };

std::string to_string(DecayCondition condition);
std::string to_string(DecayModel model);

struct ValidationReport {
  bool domain_ok = false;
  bool r_positive_real = false;
  DecayCondition decay_condition = DecayCondition::indeterminate;
  DecayModel decay_model = DecayModel::power;
  /// Fitted exponent; for the geometric model, the local log-log slope at the window end.
  double lambda_hat = 0;
  double log_log_slope = 0;
  bool denominators_ok = false;
  std::size_t probed = 0;

  bool all_ok() const {
    return domain_ok && r_positive_real && decay_condition != DecayCondition::indeterminate &&
           denominators_ok;
  }
};

inline constexpr double kDecayMargin = 0.05;

/// Numeric evidence for the hypotheses of the infinite transform, using the
/// first probe_len values of r. Never throws.
ValidationReport validate_infinite_transform(const SeriesSpec& series, std::span<const scalar_t> r,
                                   std::size_t probe_len);

/// k-th term of the infinite transform; needs r.size() > k.
scalar_t euler_term(const SeriesSpec& series, const RSequence& r, std::size_t k);

/// Sum of the first K (>= 1) terms of the infinite transform; needs r.size() >= K.
scalar_t euler_partial_sum(const SeriesSpec& series, const RSequence& r, std::size_t K);

}  // namespace trigaccel

#endif  // TRIGACCEL_ACCELERATION_HPP
