#include "trigaccel/acceleration.hpp"

#include <cmath>
#include <limits>

#include "trigaccel/errors.hpp"

namespace trigaccel {

void RSelectionConfig::validate() const {
  if (max_p < 1) throw InvalidArgument("max_p must be >= 1");
  if (ratio_probe_start < 1) throw InvalidArgument("ratio_probe_start must be >= 1");
  if (ratio_probe_count < 3) throw InvalidArgument("ratio_probe_count must be >= 3");
  if (!(stagnation_tol > 0)) throw InvalidArgument("stagnation_tol must be positive");
  if (!(annihilation_tol > 0)) throw InvalidArgument("annihilation_tol must be positive");
}

namespace {

struct Candidate {
  scalar_t value;
  real_t step;
  ExtrapolationRoute route;
  std::size_t level;
};

// Final-entry candidates of every iterated Aitken level that still holds two values.
void aitken_candidates(std::vector<scalar_t> level, std::vector<Candidate>& out) {
  std::size_t depth = 0;
  while (level.size() >= 2) {
    const std::size_t n = level.size();
    out.push_back({level[n - 1], abs(level[n - 1] - level[n - 2]), ExtrapolationRoute::aitken,
                   depth});
    if (n < 3) break;
    std::vector<scalar_t> next;
    next.reserve(n - 2);
    for (std::size_t i = 0; i + 2 < n; ++i) {
      const scalar_t d1 = level[i + 2] - level[i + 1];
      const scalar_t d2 = d1 - (level[i + 1] - level[i]);
      next.push_back(d2 == scalar_t(0) ? level[i + 2] : scalar_t(level[i + 2] - d1 * d1 / d2));
    }
    level = std::move(next);
    ++depth;
  }
}

// Neville extrapolation to h = 0 with h = 1/m, using the last k+1 probes for k = 0, 1, ...
void richardson_candidates(const std::vector<scalar_t>& q, index_t first_m,
                           std::vector<Candidate>& out) {
  const std::size_t n = q.size();
  std::vector<real_t> h(n);
  std::vector<scalar_t> y(n);
  // reversed: index 0 is the largest probe index
  for (std::size_t i = 0; i < n; ++i) {
    const index_t m = first_m + static_cast<index_t>(n - 1 - i);
    h[i] = real_t(1) / m;
    y[i] = q[n - 1 - i];
  }
  // after pass k, y[i] holds the extrapolant through points i..i+k
  scalar_t previous = y[0];
  for (std::size_t k = 1; k < n; ++k) {
    for (std::size_t i = 0; i + k < n; ++i) {
      y[i] = (scalar_t(h[i]) * y[i + 1] - scalar_t(h[i + k]) * y[i]) / scalar_t(h[i] - h[i + k]);
    }
    out.push_back({y[0], abs(y[0] - previous), ExtrapolationRoute::richardson, k});
    previous = y[0];
  }
}

}  // namespace

RatioEstimate estimate_r_next(const CoefficientSequence& a, std::span<const scalar_t> r_so_far,
                              const RSelectionConfig& cfg) {
  cfg.validate();
  const auto e = elementary_symmetric(r_so_far);
  const index_t first = cfg.ratio_probe_start;
  const index_t last = first + cfg.ratio_probe_count;  // one past the final ratio's denominator

  std::vector<scalar_t> g;
  std::size_t vanished = 0;
  for (index_t m = first; m <= last; ++m) {
    scalar_t value = apply_L_expanded(a, e, m);
    const real_t scale = expanded_magnitude(a, e, m);
    if (scale == 0 || abs(value) <= real_t(cfg.annihilation_tol) * scale) ++vanished;
    g.push_back(std::move(value));
  }
  if (vanished == g.size()) {
    throw ZeroDenominator("L(a_n) vanishes at every probe index", true);
  }
  if (vanished > 0) {
    throw ZeroDenominator("L(a_n) vanishes at some probe indices", false);
  }

  std::vector<scalar_t> q;
  q.reserve(g.size() - 1);
  for (std::size_t i = 0; i + 1 < g.size(); ++i) q.push_back(g[i + 1] / g[i]);

  std::vector<Candidate> candidates;
  aitken_candidates(q, candidates);
  richardson_candidates(q, first, candidates);

  const Candidate* best = nullptr;
  for (const auto& c : candidates) {
    if (!is_finite(c.value) || !is_finite(c.step)) continue;
    if (best == nullptr || c.step < best->step) best = &c;
  }
  if (best == nullptr) {
    throw RatioDivergent("probe ratios are not finite", std::numeric_limits<double>::quiet_NaN(),
                         std::numeric_limits<double>::infinity());
  }
  if (!(best->step < real_t(cfg.stagnation_tol))) {
    throw RatioDivergent("probe ratios did not stagnate (step " +
                             std::to_string(to_double(best->step)) + ")",
                         to_double(best->value.real()), to_double(best->step));
  }
  RatioEstimate estimate;
  estimate.value = best->value;
  estimate.route = best->route;
  estimate.level = best->level;
  estimate.step = best->step;
  estimate.probe_first = first;
  estimate.probe_last = last - 1;
  return estimate;
}

std::string to_string(RSelectionStop reason) {
  switch (reason) {
    case RSelectionStop::reached_max_p: return "reached-max-p";
    case RSelectionStop::annihilated: return "annihilated";
    case RSelectionStop::ratio_divergent: return "ratio-divergent";
    case RSelectionStop::zero_denominator: return "zero-denominator";
  }
  return "unknown";
}

std::optional<RSequence> RSelection::sequence() const {
  if (values.empty()) return std::nullopt;
  return RSequence(values);
}

RSelection estimate_r_sequence(const CoefficientSequence& a, const RSelectionConfig& cfg) {
  cfg.validate();
  RSelection selection;
  while (selection.values.size() < cfg.max_p) {
    try {
      RatioEstimate estimate = estimate_r_next(a, selection.values, cfg);
      selection.values.push_back(estimate.value);
      selection.estimates.push_back(std::move(estimate));
    } catch (const ZeroDenominator& err) {
      selection.reason =
          err.annihilated() ? RSelectionStop::annihilated : RSelectionStop::zero_denominator;
      selection.detail = err.what();
      return selection;
    } catch (const RatioDivergent& err) {
      selection.reason = RSelectionStop::ratio_divergent;
      selection.detail = err.what();
      return selection;
    }
  }
  selection.reason = RSelectionStop::reached_max_p;
  return selection;
}

std::string to_string(DecayCondition condition) {
  switch (condition) {
    case DecayCondition::decays: return "decays";
    case DecayCondition::grows: return "grows";
    case DecayCondition::indeterminate: return "indeterminate";
  }
  return "unknown";
}

std::string to_string(DecayModel model) {
  return model == DecayModel::power ? "power" : "geometric";
}

namespace {

struct LineFit {
  double slope = 0;
  double residual = 0;
};

LineFit least_squares(const std::vector<double>& x, const std::vector<double>& y) {
  const double n = static_cast<double>(x.size());
  double mx = 0, my = 0;
  for (std::size_t i = 0; i < x.size(); ++i) mx += x[i], my += y[i];
  mx /= n;
  my /= n;
  double sxx = 0, sxy = 0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    sxx += (x[i] - mx) * (x[i] - mx);
    sxy += (x[i] - mx) * (y[i] - my);
  }
  LineFit fit;
  fit.slope = sxy / sxx;
  const double intercept = my - fit.slope * mx;
  for (std::size_t i = 0; i < x.size(); ++i) {
    const double r = y[i] - (intercept + fit.slope * x[i]);
    fit.residual += r * r;
  }
  return fit;
}

void classify_decay(std::span<const scalar_t> r, ValidationReport& report) {
  if (r.size() < 4) return;
  std::vector<double> log_n, n_values, log_r;
  for (std::size_t i = 0; i < r.size(); ++i) {
    const real_t magnitude = abs(r[i]);
    if (!(magnitude > 0)) return;
    log_r.push_back(to_double(log(magnitude)));
    n_values.push_back(static_cast<double>(i + 1));
    log_n.push_back(std::log(static_cast<double>(i + 1)));
  }
  const LineFit power = least_squares(log_n, log_r);
  const LineFit geometric = least_squares(n_values, log_r);
  report.log_log_slope = power.slope;
  report.lambda_hat = -power.slope;

  const double margin = 1 + kDecayMargin;
  if (geometric.residual < power.residual) {
    report.decay_model = DecayModel::geometric;
    const double n_last = n_values.back();
    if (geometric.slope <= -std::log(margin)) {
      report.decay_condition = DecayCondition::decays;
      report.lambda_hat = -geometric.slope * n_last;
    } else if (geometric.slope >= std::log(margin)) {
      report.decay_condition = DecayCondition::grows;
      report.lambda_hat = geometric.slope * n_last;
    }
    return;
  }
  report.decay_model = DecayModel::power;
  if (power.slope <= -margin) {
    report.decay_condition = DecayCondition::decays;
  } else if (power.slope >= margin) {
    report.decay_condition = DecayCondition::grows;
    report.lambda_hat = power.slope;
  }
}

}  // namespace

ValidationReport validate_infinite_transform(const SeriesSpec& series, std::span<const scalar_t> r,
                                   std::size_t probe_len) {
  ValidationReport report;
  const TrigPhase& phase = series.phase;
  const real_t angle = abs(phase.alpha()) * phase.x();
  const real_t slack = real_t(1e-40);
  report.domain_ok = angle >= pi() / 2 - slack && angle <= 3 * pi() / 2 + slack;

  const auto window = r.first(std::min(probe_len, r.size()));
  report.probed = window.size();
  if (window.empty()) return report;

  report.r_positive_real = true;
  for (const auto& v : window) {
    if (!is_finite(v) || !is_effectively_real(v) || !(v.real() > 0)) report.r_positive_real = false;
  }

  classify_decay(window, report);

  // |1 - r_j e^{i alpha x}| > 1
  const real_t theta = phase.alpha() * phase.x();
  const scalar_t rotation(cos(theta), sin(theta));
  report.denominators_ok = true;
  for (const auto& v : window) {
    if (!is_finite(v) || !(abs(scalar_t(1) - v * rotation) > 1)) report.denominators_ok = false;
  }
  return report;
}

scalar_t euler_term(const SeriesSpec& series, const RSequence& r, std::size_t k) {
  if (r.size() <= k) {
    throw InvalidArgument("term " + std::to_string(k) + " needs " + std::to_string(k + 1) +
                          " r values");
  }
  const auto used = r.values().first(k + 1);
  const auto d = transform_denominators(series.phase, used);
  return head_term(series, make_trig_sequence(series.kind, series.phase), used, d, k);
}

scalar_t euler_partial_sum(const SeriesSpec& series, const RSequence& r, std::size_t K) {
  if (K < 1) throw InvalidArgument("K must be >= 1");
  if (r.size() < K) {
    throw InvalidArgument(std::to_string(K) + " terms need " + std::to_string(K) + " r values");
  }
  const auto used = r.values().first(K);
  const auto d = transform_denominators(series.phase, used);
  const auto trig = make_trig_sequence(series.kind, series.phase);
  CompensatedSum sum;
  for (std::size_t k = 0; k < K; ++k) sum += head_term(series, trig, used, d, k);
  return sum.value();
}

}  // namespace trigaccel
