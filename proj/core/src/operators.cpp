#include "trigaccel/operators.hpp"

#include <algorithm>
#include <mutex>
#include <string>

#include "trigaccel/errors.hpp"

namespace trigaccel {

namespace {

bool negligible_imag_positive(const scalar_t& z) {
  return is_effectively_real(z) && z.real() > 0;
}

}  // namespace

RSequence::RSequence(std::vector<scalar_t> values) : values_(std::move(values)) {
  if (values_.empty()) throw InvalidArgument("r sequence must hold at least one value");
  for (std::size_t j = 0; j < values_.size(); ++j) {
    if (!is_finite(values_[j])) {
      throw InvalidArgument("r_" + std::to_string(j + 1) + " is not finite");
    }
  }
  positive_real_ = std::all_of(values_.begin(), values_.end(), negligible_imag_positive);
}

RSequence RSequence::repeated(const scalar_t& r, std::size_t p) {
  return RSequence(std::vector<scalar_t>(p, r));
}

RSequence RSequence::prefix(std::size_t k) const {
  if (k == 0 || k > values_.size()) {
    throw InvalidArgument("prefix length " + std::to_string(k) + " out of range");
  }
  return RSequence(std::vector<scalar_t>(values_.begin(), values_.begin() + k));
}

struct CoefficientSequence::Memo {
  std::mutex mutex;
  std::vector<std::optional<scalar_t>> values;
};

CoefficientSequence::CoefficientSequence(Evaluator evaluator, std::optional<scalar_t> ratio_limit,
                                         index_t first_index)
    : evaluator_(std::move(evaluator)),
      ratio_limit_(std::move(ratio_limit)),
      first_index_(first_index),
      memo_(std::make_shared<Memo>()) {
  if (!evaluator_) throw InvalidArgument("coefficient sequence needs an evaluator");
}

scalar_t CoefficientSequence::operator()(index_t n) const {
  if (n < first_index_) {
    throw InvalidArgument("index " + std::to_string(n) + " below first index " +
                          std::to_string(first_index_));
  }
  const index_t slot = n - first_index_;
  const bool cacheable = slot < kMemoLimit;
  if (cacheable) {
    std::lock_guard lock(memo_->mutex);
    if (slot < static_cast<index_t>(memo_->values.size()) && memo_->values[slot]) {
      return *memo_->values[slot];
    }
  }
  // Evaluated outside the lock; a concurrent duplicate evaluation yields the same value.
  scalar_t value = evaluator_(n);
  if (!is_finite(value)) {
    throw InvalidArgument("coefficient at index " + std::to_string(n) + " is not finite");
  }
  if (cacheable) {
    std::lock_guard lock(memo_->mutex);
    if (slot >= static_cast<index_t>(memo_->values.size())) memo_->values.resize(slot + 1);
    memo_->values[slot] = value;
  }
  return value;
}

TrigPhase::TrigPhase(real_t alpha, real_t beta, real_t x)
    : alpha_(std::move(alpha)), beta_(std::move(beta)), x_(std::move(x)) {
  if (alpha_ == 0) throw InvalidArgument("alpha must be nonzero");
  if (!is_finite(alpha_) || !is_finite(beta_) || !is_finite(x_)) {
    throw InvalidArgument("alpha, beta and x must be finite");
  }
}

real_t trig_value(TrigKind kind, const TrigPhase& phase, index_t n) {
  const real_t theta = phase.angle(n);
  return kind == TrigKind::cosine ? real_t(cos(theta)) : real_t(sin(theta));
}

CoefficientSequence make_trig_sequence(TrigKind kind, const TrigPhase& phase) {
  return CoefficientSequence(
      [kind, phase](index_t n) { return scalar_t(trig_value(kind, phase, n)); }, std::nullopt, 0);
}

std::vector<scalar_t> elementary_symmetric(std::span<const scalar_t> r) {
  std::vector<scalar_t> sorted(r.begin(), r.end());
  std::sort(sorted.begin(), sorted.end(), [](const scalar_t& u, const scalar_t& v) {
    if (u.real() != v.real()) return u.real() < v.real();
    return u.imag() < v.imag();
  });
  std::vector<scalar_t> e{scalar_t(1)};
  e.reserve(sorted.size() + 1);
  for (const scalar_t& rj : sorted) {
    e.emplace_back(0);
    for (std::size_t k = e.size() - 1; k >= 1; --k) e[k] += rj * e[k - 1];
  }
  return e;
}

std::vector<scalar_t> elementary_symmetric(const RSequence& r) {
  return elementary_symmetric(r.values());
}

scalar_t apply_L_recurrence(const CoefficientSequence& a, const RSequence& r, index_t n) {
  const std::size_t p = r.size();
  std::vector<scalar_t> window;
  window.reserve(p + 1);
  for (std::size_t j = 0; j <= p; ++j) window.push_back(a(n + static_cast<index_t>(j)));
  // stage s turns L_{r1..r_{s-1}}(a_{n+j}) into L_{r1..r_s}(a_{n+j})
  for (std::size_t s = 0; s < p; ++s) {
    for (std::size_t j = 0; j + s < p; ++j) window[j] = window[j + 1] - r[s] * window[j];
  }
  return window.front();
}

scalar_t apply_L_expanded(const CoefficientSequence& a, std::span<const scalar_t> e, index_t n) {
  const index_t p = static_cast<index_t>(e.size()) - 1;
  CompensatedSum sum;
  for (index_t k = 0; k <= p; ++k) {
    scalar_t term = e[k] * a(n + p - k);
    sum += (k % 2 == 0) ? term : scalar_t(-term);
  }
  return sum.value();
}

real_t expanded_magnitude(const CoefficientSequence& a, std::span<const scalar_t> e, index_t n) {
  const index_t p = static_cast<index_t>(e.size()) - 1;
  real_t total = 0;
  for (index_t k = 0; k <= p; ++k) total += abs(e[k] * a(n + p - k));
  return total;
}

scalar_t apply_L_symmetric(const CoefficientSequence& a, const RSequence& r, index_t n) {
  const auto e = elementary_symmetric(r);
  return apply_L_expanded(a, e, n);
}

scalar_t trig_L(TrigKind kind, const TrigPhase& phase, const RSequence& r, index_t n) {
  if (n < 0) throw InvalidArgument("trig index must be >= 0");
  const auto e = elementary_symmetric(r);
  const index_t p = static_cast<index_t>(r.size());
  CompensatedSum sum;
  for (index_t k = 0; k <= p; ++k) {
    scalar_t term = e[k] * trig_value(kind, phase, n + p - k);
    sum += (k % 2 == 0) ? term : scalar_t(-term);
  }
  return sum.value();
}

}  // namespace trigaccel
