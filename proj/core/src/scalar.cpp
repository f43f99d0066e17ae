#include "trigaccel/scalar.hpp"

#include <cctype>

#include <boost/math/constants/constants.hpp>

#include "trigaccel/errors.hpp"

namespace trigaccel {

const real_t& pi() {
  static const real_t value = boost::math::constants::pi<real_t>();
  return value;
}

bool is_finite(const real_t& v) { return boost::multiprecision::isfinite(v); }

bool is_finite(const scalar_t& z) { return is_finite(z.real()) && is_finite(z.imag()); }

bool is_effectively_real(const scalar_t& z) {
  return abs(z.imag()) <= real_t(1e-12) * abs(z);
}

double to_double(const real_t& v) { return static_cast<double>(v); }

std::complex<double> to_complex_double(const scalar_t& z) {
  return {to_double(z.real()), to_double(z.imag())};
}

real_t parse_real(const std::string& text) {
  // cpp_bin_float accepts things like "1e" or trailing junk inconsistently; reject up front.
  std::size_t i = 0;
  const std::size_t n = text.size();
  if (i < n && (text[i] == '+' || text[i] == '-')) ++i;
  std::size_t digits = 0;
  while (i < n && std::isdigit(static_cast<unsigned char>(text[i]))) ++i, ++digits;
  if (i < n && text[i] == '.') {
    ++i;
    while (i < n && std::isdigit(static_cast<unsigned char>(text[i]))) ++i, ++digits;
  }
  if (digits == 0) throw InvalidArgument("not a number: '" + text + "'");
  if (i < n && (text[i] == 'e' || text[i] == 'E')) {
    ++i;
    if (i < n && (text[i] == '+' || text[i] == '-')) ++i;
    std::size_t exp_digits = 0;
    while (i < n && std::isdigit(static_cast<unsigned char>(text[i]))) ++i, ++exp_digits;
    if (exp_digits == 0) throw InvalidArgument("not a number: '" + text + "'");
  }
  if (i != n) throw InvalidArgument("not a number: '" + text + "'");
  return real_t(text);
}

CompensatedRealSum& CompensatedRealSum::operator+=(const real_t& term) {
  real_t t = sum_ + term;
  if (abs(sum_) >= abs(term)) {
    carry_ += (sum_ - t) + term;
  } else {
    carry_ += (term - t) + sum_;
  }
  sum_ = t;
  return *this;
}

}  // namespace trigaccel
