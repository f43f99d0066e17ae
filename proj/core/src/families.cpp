#include "trigaccel/families.hpp"

#include <fstream>
#include <memory>
#include <vector>

#include "trigaccel/errors.hpp"

namespace trigaccel::families {

CoefficientSequence two_exponential(const real_t& a, const real_t& b) {
  if (!(a > 0 && a < b)) throw InvalidArgument("two-exponential family requires 0 < a < b");
  return CoefficientSequence(
      [a, b](index_t n) { return scalar_t(real_t(1) / (pow(a, n) + pow(b, n))); },
      scalar_t(real_t(1) / b));
}

TailBound two_exponential_tail(const real_t& b) {
  return [b](index_t n) { return real_t(pow(b, -n)) / (b - 1); };
}

CoefficientSequence geometric(const scalar_t& rho) {
  const real_t magnitude = abs(rho);
  if (!(magnitude > 0 && magnitude < 1)) {
    throw InvalidArgument("geometric family requires 0 < |rho| < 1");
  }
  return CoefficientSequence(
      [rho](index_t n) {
        scalar_t value(1);
        scalar_t base = rho;
        // binary powering keeps the value independent of evaluation order
        for (index_t e = n; e > 0; e >>= 1) {
          if (e & 1) value *= base;
          base *= base;
        }
        return value;
      },
      rho);
}

CoefficientSequence power(const real_t& s) {
  if (!(s > 0)) throw InvalidArgument("power family requires s > 0");
  if (s == floor(s) && s <= 64) {
    const auto k = static_cast<int>(s);
    return CoefficientSequence(
        [k](index_t n) {
          real_t value(1);
          for (int i = 0; i < k; ++i) value *= n;
          return scalar_t(1 / value);
        },
        scalar_t(1));
  }
  return CoefficientSequence([s](index_t n) { return scalar_t(real_t(pow(real_t(n), -s))); },
                             scalar_t(1));
}

namespace {

std::string trim(const std::string& text) {
  const auto first = text.find_first_not_of(" \t\r\n");
  if (first == std::string::npos) return {};
  const auto last = text.find_last_not_of(" \t\r\n");
  return text.substr(first, last - first + 1);
}

}  // namespace

CoefficientSequence from_stream(std::istream& in) {
  auto values = std::make_shared<std::vector<scalar_t>>();
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (const auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    line = trim(line);
    if (line.empty()) continue;
    try {
      if (const auto comma = line.find(','); comma != std::string::npos) {
        values->emplace_back(parse_real(trim(line.substr(0, comma))),
                             parse_real(trim(line.substr(comma + 1))));
      } else {
        values->emplace_back(parse_real(line));
      }
    } catch (const InvalidArgument& err) {
      throw InvalidArgument("line " + std::to_string(line_no) + ": " + err.what());
    }
  }
  if (values->size() < kMinFileCoefficients) {
    throw InvalidArgument("coefficient file needs at least " +
                          std::to_string(kMinFileCoefficients) + " values, got " +
                          std::to_string(values->size()));
  }
  return CoefficientSequence([values](index_t n) {
    const auto i = static_cast<std::size_t>(n - 1);
    return i < values->size() ? (*values)[i] : scalar_t(0);
  });
}

CoefficientSequence from_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InvalidArgument("cannot open coefficient file '" + path + "'");
  return from_stream(in);
}

}  // namespace trigaccel::families
