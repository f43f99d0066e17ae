#include "trigaccel/transforms.hpp"

#include "trigaccel/errors.hpp"

namespace trigaccel {

std::vector<scalar_t> transform_denominators(const TrigPhase& phase,
                                             std::span<const scalar_t> r) {
  const real_t c = cos(phase.alpha() * phase.x());
  std::vector<scalar_t> d;
  d.reserve(r.size());
  for (std::size_t j = 0; j < r.size(); ++j) {
    scalar_t dj = scalar_t(1) - scalar_t(2 * c) * r[j] + r[j] * r[j];
    if (abs(dj) < real_t(kDenominatorEpsilon)) throw DenominatorNearZero(j + 1);
    d.push_back(std::move(dj));
  }
  return d;
}

scalar_t head_term(const SeriesSpec& series, const CoefficientSequence& trig,
                   std::span<const scalar_t> r, std::span<const scalar_t> denominators,
                   std::size_t k) {
  if (r.size() <= k || denominators.size() <= k) {
    throw InvalidArgument("head term " + std::to_string(k) + " needs " + std::to_string(k + 1) +
                          " r values");
  }
  const scalar_t coefficient =
      k == 0 ? series.coefficients(1)
             : apply_L_expanded(series.coefficients, elementary_symmetric(r.first(k)), 1);
  const scalar_t trig_part = apply_L_expanded(trig, elementary_symmetric(r.first(k + 1)), 0);
  scalar_t denominator = denominators[0];
  for (std::size_t j = 1; j <= k; ++j) denominator *= denominators[j];
  return coefficient * trig_part / denominator;
}

TransformResult::TransformResult(const SeriesSpec& series, const RSequence& r)
    : coefficients_(series.coefficients),
      trig_(make_trig_sequence(series.kind, series.phase)),
      elementary_(elementary_symmetric(r)),
      denominators_(transform_denominators(series.phase, r.values())) {
  head_terms_.reserve(r.size());
  for (std::size_t k = 0; k < r.size(); ++k) {
    head_terms_.push_back(head_term(series, trig_, r.values(), denominators_, k));
  }
  scalar_t product(1);
  for (const auto& d : denominators_) product *= d;
  inverse_denominator_product_ = scalar_t(1) / product;
}

scalar_t TransformResult::remainder_term(index_t n) const {
  if (n < 1) throw InvalidArgument("remainder terms start at n = 1");
  return apply_L_expanded(coefficients_, elementary_, n) * apply_L_expanded(trig_, elementary_, n) *
         inverse_denominator_product_;
}

TransformResult transform(const SeriesSpec& series, const RSequence& r) {
  return TransformResult(series, r);
}

TransformResult transform_single_r(const SeriesSpec& series, const scalar_t& r, std::size_t p) {
  if (p == 0) throw InvalidArgument("p must be >= 1");
  return transform(series, RSequence::repeated(r, p));
}

scalar_t transformed_partial_sum(const TransformResult& t, index_t n_remainder_terms) {
  CompensatedSum sum;
  for (const auto& h : t.head_terms()) sum += h;
  for (index_t n = 1; n <= n_remainder_terms; ++n) sum += t.remainder_term(n);
  return sum.value();
}

}  // namespace trigaccel
