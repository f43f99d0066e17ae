#include "cli.hpp"

#include <cstdio>
#include <ostream>
#include <regex>
#include <sstream>

#include <CLI11.hpp>

#include "trigaccel/errors.hpp"
#include "trigaccel/families.hpp"

namespace trigaccel::cli {

namespace {

struct Options {
  std::string alpha = "1";
  std::string beta = "0";
  std::string x;
  std::string kind = "cos";
  std::string family = "two-exp";
  std::string a;
  std::string b;
  std::string rho;
  std::string s;
  std::string path;
  double tol = 1e-6;
  std::optional<double> tail_bound;
  int max_p = 3;
  std::string format = "json";
  index_t probe_start = 30;
  index_t probe_count = 10;
  double stagnation_tol = 1e-9;
};

std::string format_double(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

nlohmann::json complex_json(const std::complex<double>& z) {
  if (std::abs(z.imag()) <= 1e-12 * std::abs(z)) return z.real();
  return {{"re", z.real()}, {"im", z.imag()}};
}

std::complex<double> complex_from_json(const nlohmann::json& j) {
  if (j.is_number()) return {j.get<double>(), 0.0};
  return {j.at("re").get<double>(), j.at("im").get<double>()};
}

nlohmann::json scalar_json(const scalar_t& z) { return complex_json(to_complex_double(z)); }

std::string complex_text(const std::complex<double>& z) {
  if (std::abs(z.imag()) <= 1e-12 * std::abs(z)) return format_double(z.real());
  return format_double(z.real()) + "|" + format_double(z.imag());
}

const std::string& require(const std::string& value, const char* flag) {
  if (value.empty()) throw InvalidArgument(std::string("missing ") + flag);
  return value;
}

CoefficientSequence make_coefficients(const Options& o) {
  if (o.family == "two-exp") {
    return families::two_exponential(parse_real(require(o.a, "--a")),
                                     parse_real(require(o.b, "--b")));
  }
  if (o.family == "geometric") return families::geometric(scalar_t(parse_real(require(o.rho, "--rho"))));
  if (o.family == "power") return families::power(parse_real(require(o.s, "--s")));
  if (o.family == "file") return families::from_file(require(o.path, "--path"));
  throw InvalidArgument("unknown family '" + o.family + "'");
}

SeriesSpec make_series(const Options& o) {
  const TrigKind kind = o.kind == "sin" ? TrigKind::sine : TrigKind::cosine;
  return SeriesSpec{make_coefficients(o),
                    TrigPhase(parse_angle(o.alpha), parse_angle(o.beta), parse_angle(require(o.x, "--x"))),
                    kind};
}

RSelectionConfig make_config(const Options& o) {
  RSelectionConfig cfg;
  cfg.max_p = o.max_p < 1 ? 1 : static_cast<std::size_t>(o.max_p);
  cfg.ratio_probe_start = o.probe_start;
  cfg.ratio_probe_count = o.probe_count;
  cfg.stagnation_tol = o.stagnation_tol;
  cfg.validate();
  return cfg;
}

void add_common_options(CLI::App& cmd, Options& o) {
  cmd.add_option("--alpha", o.alpha, "alpha (nonzero; decimal or Npi/M)");
  cmd.add_option("--beta", o.beta, "beta (decimal or Npi/M)");
  cmd.add_option("--x", o.x, "x (decimal or Npi/M, e.g. 3pi/4)")->required();
  cmd.add_option("--kind", o.kind, "cos or sin")->check(CLI::IsMember({"cos", "sin"}));
  cmd.add_option("--family", o.family, "two-exp | geometric | power | file")
      ->check(CLI::IsMember({"two-exp", "geometric", "power", "file"}));
  cmd.add_option("--a", o.a, "two-exp: a_n = 1/(a^n + b^n), 0 < a < b");
  cmd.add_option("--b", o.b, "two-exp: b");
  cmd.add_option("--rho", o.rho, "geometric: a_n = rho^n");
  cmd.add_option("--s", o.s, "power: a_n = 1/n^s");
  cmd.add_option("--path", o.path, "file: one coefficient per line");
  cmd.add_option("--tol", o.tol, "target absolute error")->check(CLI::PositiveNumber);
  cmd.add_option("--max-p", o.max_p, "largest number of r values")->check(CLI::NonNegativeNumber);
  cmd.add_option("--format", o.format, "json or csv")->check(CLI::IsMember({"json", "csv"}));
  cmd.add_option("--probe-start", o.probe_start, "first ratio probe index");
  cmd.add_option("--probe-count", o.probe_count, "number of ratio probes");
  cmd.add_option("--stagnation-tol", o.stagnation_tol, "stagnation threshold for ratio probes");
}

int cmd_sum(const Options& o, std::ostream& out) {
  const SeriesSpec series = make_series(o);
  const real_t tail_bound = o.tail_bound ? real_t(*o.tail_bound) : real_t(o.tol) * real_t(1e-4);
  const OracleResult result = oracle_sum(series, tail_bound);
  if (o.format == "csv") {
    out << "reference_sum,reference_terms\n"
        << complex_text(to_complex_double(result.value)) << ',' << result.terms << '\n';
  } else {
    nlohmann::json j{{"reference_sum", scalar_json(result.value)},
                     {"reference_terms", result.terms},
                     {"tail_bound", to_double(tail_bound)}};
    out << j.dump(2) << '\n';
  }
  return kSuccess;
}

int cmd_accelerate(const Options& o, std::ostream& out, std::ostream& err) {
  const SeriesSpec series = make_series(o);
  const AccelerationReport report =
      build_report(series, make_config(o), o.tol, static_cast<std::size_t>(o.max_p));
  if (o.format == "csv") {
    out << to_csv(report);
  } else {
    out << to_json(report).dump(2) << '\n';
  }
  for (const auto& entry : report.per_p) {
    if (entry.error) err << "p=" << entry.p << ": " << *entry.error << '\n';
  }
  if (report.reference_error || report.direct_error) {
    err << (report.reference_error ? *report.reference_error : *report.direct_error) << '\n';
    return kBudgetExceeded;
  }
  return kSuccess;
}

int cmd_estimate_r(const Options& o, std::ostream& out) {
  const SeriesSpec series = make_series(o);
  const RSelection selection = estimate_r_sequence(series.coefficients, make_config(o));
  if (o.format == "csv") {
    out << "index,r,route,level,step\n";
    for (std::size_t i = 0; i < selection.estimates.size(); ++i) {
      const auto& e = selection.estimates[i];
      out << i + 1 << ',' << complex_text(to_complex_double(e.value)) << ','
          << (e.route == ExtrapolationRoute::aitken ? "aitken" : "richardson") << ',' << e.level
          << ',' << format_double(to_double(e.step)) << '\n';
    }
    return kSuccess;
  }
  nlohmann::json r = nlohmann::json::array();
  nlohmann::json estimates = nlohmann::json::array();
  for (const auto& e : selection.estimates) {
    r.push_back(scalar_json(e.value));
    estimates.push_back({{"value", scalar_json(e.value)},
                         {"route", e.route == ExtrapolationRoute::aitken ? "aitken" : "richardson"},
                         {"level", e.level},
                         {"step", to_double(e.step)},
                         {"probe_first", e.probe_first},
                         {"probe_last", e.probe_last}});
  }
  nlohmann::json j{{"r", r}, {"reason", to_string(selection.reason)}, {"estimates", estimates}};
  if (!selection.detail.empty()) j["detail"] = selection.detail;
  out << j.dump(2) << '\n';
  return kSuccess;
}

}  // namespace

real_t parse_angle(const std::string& text) {
  static const std::regex pi_form(R"(^\s*([+-]?)\s*(\d+(?:\.\d*)?|\.\d+)?\s*\*?\s*pi\s*(?:/\s*(\d+(?:\.\d*)?))?\s*$)",
                                  std::regex::icase);
  std::smatch m;
  if (std::regex_match(text, m, pi_form)) {
    real_t value = pi();
    if (m[2].matched) value *= parse_real(m[2].str());
    if (m[3].matched) {
      const real_t denominator = parse_real(m[3].str());
      if (denominator == 0) throw InvalidArgument("zero denominator in '" + text + "'");
      value /= denominator;
    }
    return m[1].str() == "-" ? real_t(-value) : value;
  }
  std::string trimmed = text;
  trimmed.erase(0, trimmed.find_first_not_of(" \t"));
  trimmed.erase(trimmed.find_last_not_of(" \t") + 1);
  return parse_real(trimmed);
}

nlohmann::json to_json(const AccelerationReport& report) {
  nlohmann::json per_p = nlohmann::json::array();
  for (const auto& e : report.per_p) {
    nlohmann::json r = nlohmann::json::array();
    for (const auto& v : e.r) r.push_back(complex_json(v));
    nlohmann::json entry{{"p", e.p},
                         {"r", r},
                         {"remainder_terms", e.remainder_terms},
                         {"total_terms", e.total_terms},
                         {"achieved_error", e.achieved_error},
                         {"head_count", e.head_count},
                         {"head_sum", complex_json(e.head_sum)}};
    if (e.error) entry["error"] = *e.error;
    per_p.push_back(std::move(entry));
  }
  const auto& v = report.validation;
  nlohmann::json j{{"reference_sum", complex_json(report.reference_sum)},
                   {"reference_terms", report.reference_terms},
                   {"direct_terms", report.direct_terms},
                   {"tolerance", report.tolerance},
                   {"validation",
                    {{"domain_ok", v.domain_ok},
                     {"r_positive_real", v.r_positive_real},
                     {"decay_condition", v.decay_condition},
                     {"decay_model", v.decay_model},
                     {"lambda_hat", v.lambda_hat},
                     {"denominators_ok", v.denominators_ok},
                     {"probed", v.probed}}},
                   {"per_p", per_p},
                   {"r_selection_stop", report.r_selection_stop}};
  if (report.reference_error) j["reference_error"] = *report.reference_error;
  if (report.direct_error) j["direct_error"] = *report.direct_error;
  if (report.sine_crosscheck) j["sine_crosscheck"] = *report.sine_crosscheck;
  return j;
}

AccelerationReport report_from_json(const nlohmann::json& j) {
  AccelerationReport report;
  report.reference_sum = complex_from_json(j.at("reference_sum"));
  report.reference_terms = j.at("reference_terms").get<index_t>();
  report.direct_terms = j.at("direct_terms").get<index_t>();
  report.tolerance = j.at("tolerance").get<double>();
  const auto& v = j.at("validation");
  report.validation.domain_ok = v.at("domain_ok").get<bool>();
  report.validation.r_positive_real = v.at("r_positive_real").get<bool>();
  report.validation.decay_condition = v.at("decay_condition").get<std::string>();
  report.validation.decay_model = v.at("decay_model").get<std::string>();
  report.validation.lambda_hat = v.at("lambda_hat").get<double>();
  report.validation.denominators_ok = v.at("denominators_ok").get<bool>();
  report.validation.probed = v.at("probed").get<std::size_t>();
  for (const auto& e : j.at("per_p")) {
    PerPEntry entry;
    entry.p = e.at("p").get<std::size_t>();
    for (const auto& r : e.at("r")) entry.r.push_back(complex_from_json(r));
    entry.remainder_terms = e.at("remainder_terms").get<index_t>();
    entry.total_terms = e.at("total_terms").get<index_t>();
    entry.achieved_error = e.at("achieved_error").get<double>();
    entry.head_count = e.value("head_count", entry.p);
    if (e.contains("head_sum")) entry.head_sum = complex_from_json(e.at("head_sum"));
    if (e.contains("error")) entry.error = e.at("error").get<std::string>();
    report.per_p.push_back(std::move(entry));
  }
  report.r_selection_stop = j.value("r_selection_stop", std::string{});
  if (j.contains("reference_error")) report.reference_error = j.at("reference_error").get<std::string>();
  if (j.contains("direct_error")) report.direct_error = j.at("direct_error").get<std::string>();
  if (j.contains("sine_crosscheck")) report.sine_crosscheck = j.at("sine_crosscheck").get<double>();
  return report;
}

std::string to_csv(const AccelerationReport& report) {
  std::ostringstream out;
  out << "p,r_values,remainder_terms,total_terms,achieved_error\n";
  for (const auto& e : report.per_p) {
    out << e.p << ',';
    for (std::size_t i = 0; i < e.r.size(); ++i) out << (i ? ";" : "") << complex_text(e.r[i]);
    out << ',';
    if (!e.error) {
      out << e.remainder_terms << ',' << e.total_terms << ',' << format_double(e.achieved_error);
    } else {
      out << ",,";
    }
    out << '\n';
  }
  return out.str();
}

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Accelerated summation of trigonometric series"};
  app.require_subcommand(1);
  Options o;
  auto* sum = app.add_subcommand("sum", "reference sum by compensated direct summation");
  add_common_options(*sum, o);
  sum->add_option("--tail-bound", o.tail_bound, "oracle tail bound (default tol * 1e-4)")
      ->check(CLI::PositiveNumber);
  auto* accelerate = app.add_subcommand("accelerate", "term counts for direct and transformed sums");
  add_common_options(*accelerate, o);
  auto* estimate = app.add_subcommand("estimate-r", "select r_1..r_p from ratio limits");
  add_common_options(*estimate, o);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kSuccess;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kSuccess;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kInvalidInput;
  }

  try {
    if (sum->parsed()) return cmd_sum(o, out);
    if (accelerate->parsed()) return cmd_accelerate(o, out, err);
    return cmd_estimate_r(o, out);
  } catch (const InvalidArgument& e) {
    err << "error: " << e.what() << '\n';
    return kInvalidInput;
  } catch (const BudgetExceeded& e) {
    err << "error: " << e.what() << '\n';
    return kBudgetExceeded;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kInvalidInput;
  }
}

}  // namespace trigaccel::cli
