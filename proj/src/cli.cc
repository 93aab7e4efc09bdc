// Copyright 2026 The matchdice Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "matchdice/cli.h"

#include <algorithm>
#include <cmath>
#include <iomanip>
#include <optional>
#include <regex>
#include <sstream>
#include <string_view>

#include "CLI11.hpp"
#include "json.hpp"
#include "matchdice/analytic.h"
#include "matchdice/decimal.h"
#include "matchdice/model.h"
#include "matchdice/montecarlo.h"
#include "matchdice/notation.h"
#include "matchdice/pmf.h"
#include "matchdice/powers.h"

namespace matchdice::cli {
namespace {

using nlohmann::json;

enum class Format { kTable, kCsv, kJson };

struct GlobalOptions {
  Format format = Format::kTable;
  int precision = 6;
};

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Arbitrary-size integers travel through nlohmann::json as tagged strings
// and are spliced back in as bare JSON numbers by dump_json().
constexpr std::string_view kBigIntTag = "#bigint:";

json big_integer(const Integer& value) {
  return std::string(kBigIntTag) + value.get_str();
}

std::string dump_json(const json& document) {
  static const std::regex tagged("\"#bigint:(-?[0-9]+)\"");
  return std::regex_replace(document.dump(), tagged, "$1");
}

json rational_json(const Rational& value, int precision) {
  return json{{"numerator", big_integer(value.get_num())},
              {"denominator", big_integer(value.get_den())},
              {"decimal", format_decimal(value, precision)}};
}

json exact_value_json(const ExactValue& value, int precision) {
  if (value.is_divergent()) return "divergent";
  return rational_json(value.value(), precision);
}

json nullable(double x) { return std::isnan(x) ? json(nullptr) : json(x); }

std::string exact_text(const Rational& value, int precision) {
  return value.get_str() + " = " + format_decimal(value, precision);
}

json record(const RollExpression& expr, const char* command, json payload) {
  return json{{"expr", format(expr)},
              {"n", expr.spec.n},
              {"s", expr.spec.s},
              {"explode", expr.explode},
              {"command", command},
              {"payload", std::move(payload)}};
}

// csv fields for an exact value: result,numerator,denominator,decimal
std::string csv_exact(const ExactValue& value, int precision) {
  if (value.is_divergent()) return "divergent,,,";
  const Rational& v = value.value();
  return "finite," + v.get_num().get_str() + "," + v.get_den().get_str() +
         "," + format_decimal(v, precision);
}

std::string csv_rational(const Rational& v, int precision) {
  return v.get_num().get_str() + "," + v.get_den().get_str() + "," +
         format_decimal(v, precision);
}

std::string format_double(double x, int precision) {
  if (std::isnan(x)) return "nan";
  std::ostringstream os;
  os << std::setprecision(precision) << x;
  return os.str();
}

// ---------------------------------------------------------------- expect

int cmd_expect(const GlobalOptions& opts, const RollExpression& expr,
               std::ostream& out) {
  const ExactValue value = expr.explode
                               ? expectation_exploding(expr.spec)
                               : ExactValue::finite(expectation_single(expr.spec));
  const char* scheme = expr.explode ? "exploding" : "single";
  switch (opts.format) {
    case Format::kTable:
      out << (value.is_finite() ? exact_text(value.value(), opts.precision)
                                : "divergent")
          << '\n';
      break;
    case Format::kCsv:
      out << "expr,scheme,result,numerator,denominator,decimal\n"
          << format(expr) << ',' << scheme << ','
          << csv_exact(value, opts.precision) << '\n';
      break;
    case Format::kJson:
      out << dump_json(record(
                 expr, "expect",
                 json{{"scheme", scheme},
                      {"expectation", exact_value_json(value, opts.precision)}}))
          << '\n';
      break;
  }
  return kExitOk;
}

// ---------------------------------------------------------------- pmf

TruncatedPmf truncate(const ExactPmf& pmf, Outcome x_max) {
  ExactPmf::Map kept;
  Rational tail = 0;
  for (const auto& [x, p] : pmf) {
    if (x <= x_max) {
      kept.emplace(x, p);
    } else {
      tail += p;
    }
  }
  return TruncatedPmf(ExactPmf(std::move(kept)), x_max, tail);
}

TruncatedPmf pmf_for(const RollExpression& expr, std::optional<Outcome> x_max) {
  const DiceSpec& spec = expr.spec;
  if (spec.has_no_dice()) {
    return truncate(ExactPmf::point_mass(0), x_max.value_or(0));
  }
  if (!expr.explode) {
    return truncate(single_round_pmf(spec),
                    x_max.value_or(Outcome{spec.n} * spec.s));
  }
  if (spec.explodes_forever()) {
    throw DomainError("divergent distribution: " + format(expr) +
                      " has no finite law");
  }
  return exploding_pmf(spec, x_max);
}

int cmd_pmf(const GlobalOptions& opts, const RollExpression& expr,
            std::optional<Outcome> x_max, std::ostream& out) {
  const TruncatedPmf pmf = pmf_for(expr, x_max);
  const int digits = opts.precision;
  switch (opts.format) {
    case Format::kTable: {
      out << "# " << format(expr) << " x_max=" << pmf.x_max() << '\n';
      out << "outcome\tprobability\tdecimal\n";
      for (const auto& [x, p] : pmf.entries()) {
        out << x << '\t' << p.get_str() << '\t' << format_decimal(p, digits)
            << '\n';
      }
      out << "tail\t" << pmf.tail_mass().get_str() << '\t'
          << format_decimal(pmf.tail_mass(), digits) << '\n';
      break;
    }
    case Format::kCsv: {
      out << "outcome,numerator,denominator,decimal\n";
      for (const auto& [x, p] : pmf.entries()) {
        out << x << ',' << csv_rational(p, digits) << '\n';
      }
      out << "tail," << csv_rational(pmf.tail_mass(), digits) << '\n';
      break;
    }
    case Format::kJson: {
      json rows = json::array();
      for (const auto& [x, p] : pmf.entries()) {
        rows.push_back(
            json{{"outcome", x}, {"probability", rational_json(p, digits)}});
      }
      out << dump_json(record(
                 expr, "pmf",
                 json{{"x_max", pmf.x_max()},
                      {"rows", std::move(rows)},
                      {"tail_mass", rational_json(pmf.tail_mass(), digits)}}))
          << '\n';
      break;
    }
  }
  return kExitOk;
}

// ---------------------------------------------------------------- simulate

struct SimulateFlags {
  std::uint64_t samples = 100000;
  std::uint64_t seed = 0;
  unsigned workers = 1;
  std::uint64_t max_rounds = 1000;
};

int cmd_simulate(const GlobalOptions& opts, const RollExpression& expr,
                 const SimulateFlags& flags, std::ostream& out) {
  if (!expr.explode) {
    throw UsageError("simulation targets the exploding scheme; use " +
                     format(RollExpression{expr.spec, true}));
  }
  const SimSummary sim = simulate(SamplerConfig{
      expr.spec, flags.samples, flags.seed, flags.workers, flags.max_rounds});
  const int digits = opts.precision;
  const std::vector<std::pair<std::string, std::string>> scalars = {
      {"samples", std::to_string(sim.samples)},
      {"seed", std::to_string(sim.seed)},
      {"workers", std::to_string(sim.workers)},
      {"max_rounds", std::to_string(sim.max_rounds)},
      {"mean", format_double(sim.mean, digits)},
      {"variance", format_double(sim.variance, digits)},
      {"ci99_low", format_double(sim.ci99_low, digits)},
      {"ci99_high", format_double(sim.ci99_high, digits)},
      {"max_rounds_hit", std::to_string(sim.max_rounds_hit)},
  };
  switch (opts.format) {
    case Format::kTable:
      out << "# " << format(expr) << '\n';
      for (const auto& [key, value] : scalars) {
        out << key << '\t' << value << '\n';
      }
      out << "outcome\tcount\n";
      for (const auto& [x, count] : sim.histogram) {
        out << x << '\t' << count << '\n';
      }
      break;
    case Format::kCsv:
      out << "section,key,value\n";
      for (const auto& [key, value] : scalars) {
        out << "summary," << key << ',' << value << '\n';
      }
      for (const auto& [x, count] : sim.histogram) {
        out << "histogram," << x << ',' << count << '\n';
      }
      break;
    case Format::kJson: {
      json histogram = json::array();
      for (const auto& [x, count] : sim.histogram) {
        histogram.push_back(json{{"outcome", x}, {"count", count}});
      }
      out << dump_json(record(expr, "simulate",
                              json{{"samples", sim.samples},
                                   {"seed", sim.seed},
                                   {"workers", sim.workers},
                                   {"max_rounds", sim.max_rounds},
                                   {"mean", nullable(sim.mean)},
                                   {"variance", nullable(sim.variance)},
                                   {"ci99_low", nullable(sim.ci99_low)},
                                   {"ci99_high", nullable(sim.ci99_high)},
                                   {"max_rounds_hit", sim.max_rounds_hit},
                                   {"histogram", std::move(histogram)}}))
          << '\n';
      break;
    }
  }
  return kExitOk;
}

// ---------------------------------------------------------------- diff

struct Range {
  long long lo;
  long long hi;
};

Range parse_range(const std::string& text, const char* name, long long min,
                  long long max) {
  static const std::regex shape("([0-9]{1,9})(?:\\.\\.([0-9]{1,9}))?");
  std::smatch m;
  if (!std::regex_match(text, m, shape)) {
    throw UsageError(std::string("malformed ") + name + " range '" + text +
                     "', expected A..B");
  }
  Range r{std::stoll(m[1]), m[2].matched ? std::stoll(m[2]) : std::stoll(m[1])};
  if (r.lo > r.hi || r.lo < min || r.hi > max) {
    throw UsageError(std::string(name) + " range '" + text + "' must satisfy " +
                     std::to_string(min) + " <= A <= B <= " +
                     std::to_string(max));
  }
  return r;
}

std::optional<ExactValue> limit_or_none(LimitAxis axis, long long fixed) {
  if (fixed < 2) return std::nullopt;
  return difference_limit(axis, fixed);
}

std::string cell_text(const ExactValue& value, int precision) {
  if (value.is_divergent()) return "divergent";
  return value.value().get_str() + " (" +
         format_decimal(value.value(), precision) + ")";
}

int cmd_diff(const GlobalOptions& opts, const std::string& n_text,
             const std::string& s_text, std::ostream& out) {
  const Range n_range = parse_range(n_text, "n", 0, kMaxDice);
  const Range s_range = parse_range(s_text, "s", 1, kMaxSides);
  const int digits = opts.precision;

  std::vector<long long> ns;
  std::vector<long long> ss;
  for (long long n = n_range.lo; n <= n_range.hi; ++n) ns.push_back(n);
  for (long long s = s_range.lo; s <= s_range.hi; ++s) ss.push_back(s);
  auto cell = [](long long n, long long s) {
    return expectation_difference(validate_spec(n, s));
  };

  switch (opts.format) {
    case Format::kTable: {
      std::vector<std::vector<std::string>> grid;
      std::vector<std::string> header{"n\\s"};
      for (long long s : ss) header.push_back(std::to_string(s));
      header.push_back("s->inf");
      grid.push_back(std::move(header));
      for (long long n : ns) {
        std::vector<std::string> row{std::to_string(n)};
        for (long long s : ss) row.push_back(cell_text(cell(n, s), digits));
        auto limit = limit_or_none(LimitAxis::kSidesToInfinity, n);
        row.push_back(limit ? cell_text(*limit, digits) : "-");
        grid.push_back(std::move(row));
      }
      std::vector<std::string> footer{"n->inf"};
      for (long long s : ss) {
        auto limit = limit_or_none(LimitAxis::kDiceToInfinity, s);
        footer.push_back(limit ? cell_text(*limit, digits) : "-");
      }
      footer.push_back("");
      grid.push_back(std::move(footer));

      std::vector<std::size_t> widths(grid.front().size(), 0);
      for (const auto& row : grid) {
        for (std::size_t c = 0; c < row.size(); ++c) {
          widths[c] = std::max(widths[c], row[c].size());
        }
      }
      for (const auto& row : grid) {
        std::string line;
        for (std::size_t c = 0; c < row.size(); ++c) {
          if (c > 0) line += "  ";
          line += row[c] + std::string(widths[c] - row[c].size(), ' ');
        }
        while (!line.empty() && line.back() == ' ') line.pop_back();
        out << line << '\n';
      }
      break;
    }
    case Format::kCsv: {
      out << "n,s,result,numerator,denominator,decimal\n";
      for (long long n : ns) {
        for (long long s : ss) {
          out << n << ',' << s << ',' << csv_exact(cell(n, s), digits) << '\n';
        }
      }
      for (long long n : ns) {
        if (auto limit = limit_or_none(LimitAxis::kSidesToInfinity, n)) {
          out << n << ",inf," << csv_exact(*limit, digits) << '\n';
        }
      }
      for (long long s : ss) {
        if (auto limit = limit_or_none(LimitAxis::kDiceToInfinity, s)) {
          out << "inf," << s << ',' << csv_exact(*limit, digits) << '\n';
        }
      }
      break;
    }
    case Format::kJson: {
      json cells = json::array();
      for (long long n : ns) {
        for (long long s : ss) {
          cells.push_back(
              json{{"n", n},
                   {"s", s},
                   {"difference", exact_value_json(cell(n, s), digits)}});
        }
      }
      json along_s = json::array();
      for (long long n : ns) {
        if (auto limit = limit_or_none(LimitAxis::kSidesToInfinity, n)) {
          along_s.push_back(
              json{{"n", n}, {"limit", exact_value_json(*limit, digits)}});
        }
      }
      json along_n = json::array();
      for (long long s : ss) {
        if (auto limit = limit_or_none(LimitAxis::kDiceToInfinity, s)) {
          along_n.push_back(
              json{{"s", s}, {"limit", exact_value_json(*limit, digits)}});
        }
      }
      json document{{"expr", nullptr},
                    {"n", nullptr},
                    {"s", nullptr},
                    {"explode", nullptr},
                    {"command", "diff"},
                    {"payload",
                     json{{"n_range", json::array({n_range.lo, n_range.hi})},
                          {"s_range", json::array({s_range.lo, s_range.hi})},
                          {"cells", std::move(cells)},
                          {"limits",
                           json{{"s_to_infinity", std::move(along_s)},
                                {"n_to_infinity", std::move(along_n)}}}}}};
      out << dump_json(document) << '\n';
      break;
    }
  }
  return kExitOk;
}

// ---------------------------------------------------------------- check

struct CheckFlags {
  std::optional<int> depth;
  std::uint64_t samples = 100000;
  std::uint64_t seed = 0;
  unsigned workers = 1;
  std::optional<Outcome> x_max;
};

enum class Status { kPass, kFail, kSkip };

struct CheckResult {
  std::string name;
  Status status;
  std::string expected;
  std::string actual;
};

const char* status_name(Status s) {
  switch (s) {
    case Status::kPass: return "pass";
    case Status::kFail: return "fail";
    case Status::kSkip: return "skip";
  }
  return "?";
}

// The mean lost above x_max is at most the mean carried by histories whose
// first K = floor(x_max / (n s)) rounds all matched, since every outcome
// above x_max needs more than K rounds. That mass is p^K (K n(s+1)/2 + E).
CheckResult check_truncation_gap(const DiceSpec& spec,
                                 const TruncatedPmf& pmf, int digits) {
  const Rational expectation = expectation_exploding(spec).value();
  const Rational gap = expectation - truncated_mean(pmf);
  const long k = static_cast<long>(pmf.x_max() / (Outcome{spec.n} * spec.s));
  const Rational p_to_k(Integer(1),
                        pow_int(spec.s, static_cast<unsigned long>(spec.n - 1) *
                                            static_cast<unsigned long>(k)));
  const Rational bound =
      p_to_k * (expectation_single(spec) * Rational(Integer(k)) + expectation);
  const bool ok = sgn(gap) > 0 && gap <= bound && pmf.tail_mass() <= p_to_k;
  return CheckResult{"analytic-vs-truncated-mean", ok ? Status::kPass : Status::kFail,
                     "0 < E - truncated mean <= " + format_decimal(bound, digits) +
                         " (E = " + exact_text(expectation, digits) + ")",
                     "gap " + format_decimal(gap, digits) + ", tail " +
                         format_decimal(pmf.tail_mass(), digits)};
}

CheckResult check_oracle(const DiceSpec& spec, std::optional<int> depth_flag,
                         Outcome x_max) {
  const std::optional<int> depth =
      depth_flag ? depth_flag : max_oracle_depth(spec);
  if (!depth) {
    return CheckResult{"oracle-vs-engine", Status::kSkip,
                       "s^(depth+n) <= " + std::to_string(kOracleBudget),
                       "no depth fits the enumeration budget"};
  }
  const EnumerationResult oracle = enumerate_oracle(spec, *depth);
  const Outcome below = oracle_exact_below(spec, *depth);
  const TruncatedPmf engine =
      exploding_pmf(spec, std::max(x_max, below - 1));
  for (Outcome x = 0; x < below; ++x) {
    const Rational expected = oracle.pmf.at(x);
    const Rational actual = engine.at(x);
    if (expected != actual) {
      return CheckResult{"oracle-vs-engine", Status::kFail,
                         "P(" + std::to_string(x) + ") = " + expected.get_str(),
                         actual.get_str()};
    }
  }
  return CheckResult{
      "oracle-vs-engine", Status::kPass,
      "exact agreement below " + std::to_string(below) + " at depth " +
          std::to_string(*depth),
      std::to_string(oracle.paths_explored) + " histories, tail " +
          oracle.pmf.tail_mass().get_str()};
}

CheckResult check_monte_carlo(const DiceSpec& spec, const CheckFlags& flags,
                              int digits) {
  const double expectation =
      expectation_exploding(spec).value().get_d();
  const SimSummary sim = simulate(
      SamplerConfig{spec, flags.samples, flags.seed, flags.workers, 1000});
  const double se = std::sqrt(sim.variance / static_cast<double>(sim.completed()));
  const bool ok = sim.max_rounds_hit == 0 &&
                  std::abs(sim.mean - expectation) <= 5 * se;
  return CheckResult{"monte-carlo-mean", ok ? Status::kPass : Status::kFail,
                     format_double(expectation, digits) + " within 5 standard errors (" +
                         format_double(5 * se, digits) + ")",
                     "mean " + format_double(sim.mean, digits) + " over " +
                         std::to_string(sim.completed()) + " samples"};
}

int cmd_check(const GlobalOptions& opts, const RollExpression& expr,
              const CheckFlags& flags, std::ostream& out, std::ostream& err) {
  if (!expr.explode || !expr.spec.is_regular()) {
    throw UsageError("check needs an exploding expression with n >= 2 and "
                     "s >= 2, got " + format(expr));
  }
  if (flags.depth && !oracle_depth_in_budget(expr.spec, *flags.depth)) {
    throw UsageError("--depth " + std::to_string(*flags.depth) +
                     " exceeds the oracle budget s^(depth+n) <= " +
                     std::to_string(kOracleBudget));
  }
  const int digits = opts.precision;
  const TruncatedPmf pmf = exploding_pmf(expr.spec, flags.x_max);
  const std::vector<CheckResult> results = {
      check_truncation_gap(expr.spec, pmf, digits),
      check_oracle(expr.spec, flags.depth, pmf.x_max()),
      check_monte_carlo(expr.spec, flags, digits),
  };
  const bool passed =
      std::none_of(results.begin(), results.end(),
                   [](const CheckResult& r) { return r.status == Status::kFail; });

  switch (opts.format) {
    case Format::kTable:
      out << "# " << format(expr) << '\n';
      for (const auto& r : results) {
        out << status_name(r.status) << '\t' << r.name << "\texpected "
            << r.expected << "\tactual " << r.actual << '\n';
      }
      break;
    case Format::kCsv:
      out << "check,status,expected,actual\n";
      for (const auto& r : results) {
        out << r.name << ',' << status_name(r.status) << ",\"" << r.expected
            << "\",\"" << r.actual << "\"\n";
      }
      break;
    case Format::kJson: {
      json checks = json::array();
      for (const auto& r : results) {
        checks.push_back(json{{"name", r.name},
                              {"status", status_name(r.status)},
                              {"expected", r.expected},
                              {"actual", r.actual}});
      }
      out << dump_json(record(expr, "check",
                              json{{"passed", passed},
                                   {"checks", std::move(checks)}}))
          << '\n';
      break;
    }
  }
  for (const auto& r : results) {
    if (r.status == Status::kFail) {
      err << "check failed: " << r.name << ": expected " << r.expected
          << ", actual " << r.actual << '\n';
    }
  }
  return passed ? kExitOk : kExitFailure;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err) {
  CLI::App app{"Exact probabilities for match-and-reroll dice", "matchdice"};
  app.require_subcommand(1);
  app.fallthrough();

  GlobalOptions opts;
  std::string format_name = "table";
  app.add_option("--format", format_name, "Output format")
      ->check(CLI::IsMember({"table", "csv", "json"}));
  app.add_option("--precision", opts.precision,
                 "Significant digits of decimal renderings")
      ->check(CLI::Range(1, 100));

  std::string expr_text;

  auto* expect = app.add_subcommand("expect", "Exact expectation");
  expect->add_option("expr", expr_text, "Dice expression, e.g. 3d6!")->required();

  auto* pmf = app.add_subcommand("pmf", "Exact probability mass function");
  pmf->add_option("expr", expr_text, "Dice expression")->required();
  std::optional<Outcome> pmf_x_max;
  pmf->add_option("--xmax", pmf_x_max,
                  "Largest outcome to list (default 40 n s when exploding)");

  auto* sim = app.add_subcommand("simulate", "Monte Carlo sampling");
  sim->add_option("expr", expr_text, "Dice expression")->required();
  SimulateFlags sim_flags;
  sim->add_option("--samples", sim_flags.samples)->check(CLI::PositiveNumber);
  sim->add_option("--seed", sim_flags.seed);
  sim->add_option("--workers", sim_flags.workers)->check(CLI::PositiveNumber);
  sim->add_option("--max-rounds", sim_flags.max_rounds)
      ->check(CLI::PositiveNumber);

  auto* diff = app.add_subcommand(
      "diff", "Grid of E(exploding) - E(single) with limit rows");
  std::string n_range = "2..8";
  std::string s_range = "2..12";
  diff->add_option("--n-range", n_range, "Dice counts A..B");
  diff->add_option("--s-range", s_range, "Side counts C..D");

  auto* check = app.add_subcommand(
      "check", "Cross-validate closed form, exact engine and simulation");
  check->add_option("expr", expr_text, "Dice expression")->required();
  CheckFlags check_flags;
  check->add_option("--depth", check_flags.depth,
                    "Oracle depth (default: largest within budget)")
      ->check(CLI::PositiveNumber);
  check->add_option("--samples", check_flags.samples)->check(CLI::PositiveNumber);
  check->add_option("--seed", check_flags.seed);
  check->add_option("--workers", check_flags.workers)->check(CLI::PositiveNumber);
  check->add_option("--xmax", check_flags.x_max);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  opts.format = format_name == "json" ? Format::kJson
                : format_name == "csv" ? Format::kCsv
                                       : Format::kTable;
  try {
    if (*diff) return cmd_diff(opts, n_range, s_range, out);
    const RollExpression expr = parse(expr_text);
    if (*expect) return cmd_expect(opts, expr, out);
    if (*pmf) return cmd_pmf(opts, expr, pmf_x_max, out);
    if (*sim) return cmd_simulate(opts, expr, sim_flags, out);
    if (*check) return cmd_check(opts, expr, check_flags, out, err);
  } catch (const ParseError& e) {
    err << "error: cannot parse '" << expr_text << "': " << e.what() << '\n'
        << "  " << expr_text << '\n'
        << "  " << std::string(e.position(), ' ') << "^\n";
    return kExitUsage;
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const ValidationError& e) {
    err << "error: " << e.what() << '\n';
    return kExitFailure;
  } catch (const DomainError& e) {
    err << "error: " << e.what() << '\n';
    return kExitFailure;
  }
  err << "error: no command given\n";
  return kExitUsage;
}

}  // namespace matchdice::cli
