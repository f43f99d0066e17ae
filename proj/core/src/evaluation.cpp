#include "trigaccel/evaluation.hpp"

#include <algorithm>

#include "trigaccel/errors.hpp"

namespace trigaccel {

OracleResult oracle_sum(const SeriesSpec& series, real_t tail_bound, const TailBound& tail,
                        index_t budget) {
  if (!(tail_bound > 0)) throw InvalidArgument("tail bound must be positive");
  CompensatedSum sum;
  const real_t quiet_level = tail_bound / 100;
  index_t quiet = 0;
  index_t extra = -1;  // counts the closing run once the quiet run is complete
  for (index_t n = 1; n <= budget; ++n) {
    const scalar_t a = series.coefficients(n);
    sum += a * trig_value(series.kind, series.phase, n);
    if (tail) {
      if (tail(n) <= tail_bound) return {sum.value(), n};
      continue;
    }
    if (extra >= 0) {
      if (++extra == kOracleQuietRun) return {sum.value(), n};
      continue;
    }
    quiet = abs(a) < quiet_level ? quiet + 1 : 0;
    if (quiet == kOracleQuietRun) extra = 0;
  }
  throw BudgetExceeded("oracle sum did not meet its stopping rule within " +
                       std::to_string(budget) + " terms");
}

index_t terms_to_tolerance_direct(const SeriesSpec& series, real_t tol, const scalar_t& reference) {
  CompensatedSum sum;
  for (index_t n = 1; n <= kCountBudget; ++n) {
    sum += series.coefficients(n) * trig_value(series.kind, series.phase, n);
    if (abs(sum.value() - reference) <= tol) return n;
  }
  throw BudgetExceeded("direct partial sums did not reach the tolerance within " +
                       std::to_string(kCountBudget) + " terms");
}

TransformedCount terms_to_tolerance_transformed(const SeriesSpec& series, const RSequence& r,
                                                real_t tol, const scalar_t& reference) {
  const TransformResult t = transform(series, r);
  CompensatedSum sum;
  for (const auto& h : t.head_terms()) sum += h;
  const auto p = static_cast<index_t>(t.p());
  for (index_t n = 0; n <= kCountBudget; ++n) {
    if (n > 0) sum += t.remainder_term(n);
    const real_t error = abs(sum.value() - reference);
    if (error <= tol) return {n, n + p, error};
  }
  throw BudgetExceeded("transformed partial sums did not reach the tolerance within " +
                       std::to_string(kCountBudget) + " terms");
}

ValidationSummary ValidationSummary::from(const ValidationReport& report) {
  ValidationSummary s;
  s.domain_ok = report.domain_ok;
  s.r_positive_real = report.r_positive_real;
  s.decay_condition = to_string(report.decay_condition);
  s.decay_model = to_string(report.decay_model);
  s.lambda_hat = report.lambda_hat;
  s.denominators_ok = report.denominators_ok;
  s.probed = report.probed;
  return s;
}

namespace {

scalar_t head_sum(const TransformResult& t) { return transformed_partial_sum(t, 0); }

}  // namespace

AccelerationReport build_report(const SeriesSpec& series, const RSelectionConfig& cfg, double tol,
                                std::size_t max_p) {
  if (!(tol > 0)) throw InvalidArgument("tolerance must be positive");
  AccelerationReport report;
  report.tolerance = tol;
  const real_t tolerance(tol);

  std::optional<OracleResult> reference;
  try {
    reference = oracle_sum(series, tolerance * real_t(1e-4));
    report.reference_sum = to_complex_double(reference->value);
    report.reference_terms = reference->terms;
  } catch (const BudgetExceeded& err) {
    report.reference_error = err.what();
  }
  if (reference) {
    try {
      report.direct_terms = terms_to_tolerance_direct(series, tolerance, reference->value);
    } catch (const BudgetExceeded& err) {
      report.direct_terms = -1;
      report.direct_error = err.what();
    }
  }

  RSelectionConfig selection_cfg = cfg;
  selection_cfg.max_p = std::max({max_p, kValidationWindow, std::size_t{1}});
  const RSelection selection = estimate_r_sequence(series.coefficients, selection_cfg);
  report.r_selection_stop = to_string(selection.reason);
  report.validation =
      ValidationSummary::from(validate_infinite_transform(series, selection.values, kValidationWindow));

  std::optional<SeriesSpec> shifted;
  if (series.kind == TrigKind::sine && series.phase.x() != 0) {
    const TrigPhase& ph = series.phase;
    shifted = SeriesSpec{series.coefficients,
                         TrigPhase(ph.alpha(), ph.beta() - pi() / (2 * ph.x()), ph.x()),
                         TrigKind::cosine};
    report.sine_crosscheck = 0.0;
    if (reference) {
      const auto cos_reference = oracle_sum(*shifted, tolerance * real_t(1e-4));
      report.sine_crosscheck = to_double(abs(cos_reference.value - reference->value));
    }
  }

  for (std::size_t p = 1; p <= max_p; ++p) {
    PerPEntry entry;
    entry.p = p;
    entry.head_count = p;
    if (p > selection.values.size()) {
      entry.error = "r selection stopped after " + std::to_string(selection.values.size()) +
                    " values: " + to_string(selection.reason) +
                    (selection.detail.empty() ? "" : " (" + selection.detail + ")");
      report.per_p.push_back(std::move(entry));
      continue;
    }
    const RSequence r(std::vector<scalar_t>(selection.values.begin(),
                                            selection.values.begin() + static_cast<long>(p)));
    for (const auto& v : r.values()) entry.r.push_back(to_complex_double(v));
    try {
      const TransformResult t = transform(series, r);
      const scalar_t heads = head_sum(t);
      entry.head_sum = to_complex_double(heads);
      if (shifted) {
        const scalar_t cos_heads = head_sum(transform(*shifted, r));
        report.sine_crosscheck =
            std::max(*report.sine_crosscheck, to_double(abs(cos_heads - heads)));
      }
      if (reference) {
        const TransformedCount count =
            terms_to_tolerance_transformed(series, r, tolerance, reference->value);
        entry.remainder_terms = count.remainder_count;
        entry.total_terms = count.total_count;
        entry.achieved_error = to_double(count.achieved_error);
      } else {
        entry.error = "no reference sum: " + *report.reference_error;
      }
    } catch (const Error& err) {
      entry.error = err.what();
    }
    report.per_p.push_back(std::move(entry));
  }
  return report;
}

}  // namespace trigaccel
