#ifndef TRIGACCEL_SCALAR_HPP
#define TRIGACCEL_SCALAR_HPP

#include <complex>
#include <cstdint>
#include <string>

#include <boost/multiprecision/cpp_bin_float.hpp>
#include <boost/multiprecision/cpp_complex.hpp>

namespace trigaccel {

/// Real type used for every internal computation (50 significant digits).
using real_t = boost::multiprecision::cpp_bin_float_50;

/// Complex scalar. Real inputs are embedded with a zero imaginary part.
using scalar_t = boost::multiprecision::cpp_complex_50;

using index_t = std::int64_t;

const real_t& pi();

bool is_finite(const real_t& v);
bool is_finite(const scalar_t& z);

/// True when |imag| <= 1e-12 * |z|, the threshold under which values are reported as real.
bool is_effectively_real(const scalar_t& z);

double to_double(const real_t& v);
std::complex<double> to_complex_double(const scalar_t& z);

/// Parses a decimal literal exactly into a real_t. Throws InvalidArgument on garbage.
real_t parse_real(const std::string& text);

/// Neumaier's variant of Kahan summation over real_t.
class CompensatedRealSum {
 public:
  CompensatedRealSum& operator+=(const real_t& term);
  real_t value() const { return sum_ + carry_; }

 private:
  real_t sum_ = 0;
  real_t carry_ = 0;
};

/// Compensated summation of complex terms; real and imaginary parts are independent sums.
class CompensatedSum {
 public:
  CompensatedSum& operator+=(const scalar_t& term) {
    re_ += term.real();
    im_ += term.imag();
    return *this;
  }
  scalar_t value() const { return scalar_t(re_.value(), im_.value()); }

 private:
  CompensatedRealSum re_;
  CompensatedRealSum im_;
};

}  // namespace trigaccel

#endif  // TRIGACCEL_SCALAR_HPP
