#ifndef TRIGACCEL_FAMILIES_HPP
#define TRIGACCEL_FAMILIES_HPP

#include <istream>
#include <string>

#include "trigaccel/evaluation.hpp"
#include "trigaccel/operators.hpp"

namespace trigaccel::families {

/// a_n = 1/(a^n + b^n), 0 < a < b.
CoefficientSequence two_exponential(const real_t& a, const real_t& b);

/// |sum_{n>N} a_n T(n)| <= b^{-N} / (b - 1) for the two-exponential family.
TailBound two_exponential_tail(const real_t& b);

/// a_n = rho^n, 0 < |rho| < 1.
CoefficientSequence geometric(const scalar_t& rho);

/// a_n = 1/n^s, s > 0.
CoefficientSequence power(const real_t& s);

inline constexpr std::size_t kMinFileCoefficients = 32;

/// One coefficient per line (decimal or "re,im"), '#' starts a comment, blank
/// lines ignored; the k-th value is a_k and a_n = 0 past the last value.
/// Throws InvalidArgument on malformed input or fewer than kMinFileCoefficients values.
CoefficientSequence from_stream(std::istream& in);
CoefficientSequence from_file(const std::string& path);

}  // namespace trigaccel::families

#endif  // TRIGACCEL_FAMILIES_HPP
