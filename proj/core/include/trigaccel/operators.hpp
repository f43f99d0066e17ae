#ifndef TRIGACCEL_OPERATORS_HPP
#define TRIGACCEL_OPERATORS_HPP

// The generalized difference operator
//
//   L_{r1}(a_n)          = a_{n+1} - r1 a_n
//   L_{r1..r_{p+1}}(a_n) = L_{r1..rp}(a_{n+1}) - r_{p+1} L_{r1..rp}(a_n)
//
// and its expanded form  L_{r1..rp}(a_n) = sum_k (-1)^k E_k a_{n+p-k},
// where E_k are the elementary symmetric sums of r1..rp.

#include <functional>
#include <memory>
#include <optional>
#include <span>
#include <vector>

#include "trigaccel/scalar.hpp"

namespace trigaccel {

/// Finite list r_1..r_p of operator parameters, p >= 1, every value finite.
class RSequence {
 public:
  explicit RSequence(std::vector<scalar_t> values);

  /// [r, r, ..., r] with p copies.
  static RSequence repeated(const scalar_t& r, std::size_t p);

  std::size_t size() const noexcept { return values_.size(); }
  const scalar_t& operator[](std::size_t i) const { return values_[i]; }
  std::span<const scalar_t> values() const noexcept { return values_; }

  /// First k values; 1 <= k <= size().
  RSequence prefix(std::size_t k) const;

  /// Every value is real (negligible imaginary part) and strictly positive.
  bool positive_real() const noexcept { return positive_real_; }

 private:
  std::vector<scalar_t> values_;
  bool positive_real_;
};

/// Lazily evaluated, memoized sequence a_n for n >= first_index.
///
/// Copies share the memo table; lookups are synchronized, so a sequence may be
/// queried from several threads. Only indices below kMemoLimit are cached.
class CoefficientSequence {
 public:
  using Evaluator = std::function<scalar_t(index_t)>;

  static constexpr index_t kMemoLimit = 4096;

  explicit CoefficientSequence(Evaluator evaluator,
                               std::optional<scalar_t> ratio_limit = std::nullopt,
                               index_t first_index = 1);

  /// a_n. Throws InvalidArgument for n < first_index() or a non-finite value.
  scalar_t operator()(index_t n) const;

  index_t first_index() const noexcept { return first_index_; }

  /// lim a_{n+1}/a_n when the producer of the sequence knows it.
  const std::optional<scalar_t>& ratio_limit() const noexcept { return ratio_limit_; }

 private:
  struct Memo;

  Evaluator evaluator_;
  std::optional<scalar_t> ratio_limit_;
  index_t first_index_;
  std::shared_ptr<Memo> memo_;
};

enum class TrigKind { cosine, sine };

/// The phase (alpha n + beta) x of the series terms; alpha != 0.
class TrigPhase {
 public:
  TrigPhase(real_t alpha, real_t beta, real_t x);

  const real_t& alpha() const noexcept { return alpha_; }
  const real_t& beta() const noexcept { return beta_; }
  const real_t& x() const noexcept { return x_; }

  /// (alpha n + beta) x
  real_t angle(index_t n) const { return (alpha_ * n + beta_) * x_; }

 private:
  real_t alpha_;
  real_t beta_;
  real_t x_;
};

/// cos((alpha n + beta) x) or sin(...), n >= 0.
real_t trig_value(TrigKind kind, const TrigPhase& phase, index_t n);

/// The trig sequence as a memoized CoefficientSequence indexed from 0.
CoefficientSequence make_trig_sequence(TrigKind kind, const TrigPhase& phase);

/// E_0..E_p. Computed over the r values in a canonical order, so the result is
/// bit-identical for any permutation of r.
std::vector<scalar_t> elementary_symmetric(std::span<const scalar_t> r);
std::vector<scalar_t> elementary_symmetric(const RSequence& r);

/// L_{r1..rp}(a_n) by the two-line recurrence. Reads a_n..a_{n+p} only.
scalar_t apply_L_recurrence(const CoefficientSequence& a, const RSequence& r, index_t n);

/// L_{r1..rp}(a_n) = sum_k (-1)^k E_k a_{n+p-k}.
scalar_t apply_L_symmetric(const CoefficientSequence& a, const RSequence& r, index_t n);

/// Expanded form with precomputed E_0..E_p (p = E.size() - 1). An empty r
/// (E = {1}) is the identity.
scalar_t apply_L_expanded(const CoefficientSequence& a, std::span<const scalar_t> e, index_t n);

/// sum_k |E_k a_{n+p-k}|: the magnitude scale against which cancellation in
/// apply_L_expanded is judged.
real_t expanded_magnitude(const CoefficientSequence& a, std::span<const scalar_t> e, index_t n);

/// C_{r1..rp}(n) or S_{r1..rp}(n), n >= 0.
scalar_t trig_L(TrigKind kind, const TrigPhase& phase, const RSequence& r, index_t n);

}  // namespace trigaccel

#endif  // TRIGACCEL_OPERATORS_HPP
