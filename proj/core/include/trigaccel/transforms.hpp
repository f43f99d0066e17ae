#ifndef TRIGACCEL_TRANSFORMS_HPP
#define TRIGACCEL_TRANSFORMS_HPP

// Finite-p equivalent-series transform of
//
//   sum_{n>=1} a_n cos((alpha n + beta) x)     (or sin)
//
// into p closed-form head terms plus a remainder series whose n-th term is
//
//   L_{r1..rp}(a_n) * L_{r1..rp} cos((alpha n + beta) x) / prod_j d_j,
//   d_j = 1 - 2 r_j cos(alpha x) + r_j^2.

#include <span>
#include <vector>

#include "trigaccel/operators.hpp"

namespace trigaccel {

/// Denominators with modulus below this are rejected.
inline constexpr double kDenominatorEpsilon = 1e-8;

struct SeriesSpec {
  CoefficientSequence coefficients;
  TrigPhase phase;
  TrigKind kind = TrigKind::cosine;
};

/// d_j = 1 - 2 r_j cos(alpha x) + r_j^2 for each r_j.
/// Throws DenominatorNearZero(j) if |d_j| < kDenominatorEpsilon.
std::vector<scalar_t> transform_denominators(const TrigPhase& phase, std::span<const scalar_t> r);

/// k-th head term (k >= 0): a_1 T_{r1}(0)/d_1 for k = 0, otherwise
/// L_{r1..rk}(a_1) T_{r1..r_{k+1}}(0) / (d_1 ... d_{k+1}), T being C or S.
/// Requires r.size() > k and denominators.size() > k.
scalar_t head_term(const SeriesSpec& series, const CoefficientSequence& trig,
                   std::span<const scalar_t> r, std::span<const scalar_t> denominators,
                   std::size_t k);

class TransformResult {
 public:
  TransformResult(const SeriesSpec& series, const RSequence& r);

  std::size_t p() const noexcept { return denominators_.size(); }
  const std::vector<scalar_t>& head_terms() const noexcept { return head_terms_; }
  const std::vector<scalar_t>& denominators() const noexcept { return denominators_; }

  /// n-th remainder term, n >= 1.
  scalar_t remainder_term(index_t n) const;

 private:
  CoefficientSequence coefficients_;
  CoefficientSequence trig_;
  std::vector<scalar_t> elementary_;
  std::vector<scalar_t> head_terms_;
  std::vector<scalar_t> denominators_;
  scalar_t inverse_denominator_product_;
};

TransformResult transform(const SeriesSpec& series, const RSequence& r);

/// transform(series, [r, ..., r]) with p copies.
TransformResult transform_single_r(const SeriesSpec& series, const scalar_t& r, std::size_t p);

/// Sum of the head terms plus the first n_remainder_terms remainder terms.
scalar_t transformed_partial_sum(const TransformResult& t, index_t n_remainder_terms);

}  // namespace trigaccel

#endif  // TRIGACCEL_TRANSFORMS_HPP
