// Copyright 2026 The sternbsd Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "cli.h"

#include <algorithm>
#include <charconv>
#include <cstdint>
#include <functional>
#include <iomanip>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "sternbsd/bijections.h"
#include "sternbsd/errors.h"
#include "sternbsd/representations.h"
#include "sternbsd/series.h"
#include "sternbsd/stern.h"
#include "sternbsd/verify.h"

namespace sternbsd::cli {
namespace {

using json = nlohmann::ordered_json;

enum class OutputFormat { kPlain, kJson, kCsv };

const std::map<std::string, OutputFormat> kFormats = {
    {"plain", OutputFormat::kPlain},
    {"json", OutputFormat::kJson},
    {"csv", OutputFormat::kCsv},
};

// Raised for command-line misuse detected after CLI11 parsing.
class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Verification found a disagreement; maps to exit code 1.
class DisagreementError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

std::int64_t parse_int(const std::string& text, const char* what) {
  std::int64_t value = 0;
  const char* first = text.data();
  const char* last = text.data() + text.size();
  auto [ptr, ec] = std::from_chars(first, last, value);
  if (ec != std::errc() || ptr != last || text.empty()) {
    throw UsageError(std::string(what) + ": not an integer: '" + text + "'");
  }
  return value;
}

std::int64_t parse_nonnegative(const std::string& text, const char* what) {
  const std::int64_t value = parse_int(text, what);
  if (value < 0) {
    throw UsageError(std::string(what) + " must be nonnegative, got " + text);
  }
  return value;
}

int parse_width(const std::string& text) {
  const std::int64_t value = parse_int(text, "i");
  if (value < 1 || value > kMaxWidth) {
    throw UsageError("i must be in [1, " + std::to_string(kMaxWidth) +
                     "], got " + text);
  }
  return static_cast<int>(value);
}

void add_format_option(CLI::App* cmd, std::string& format) {
  cmd->add_option("--format", format, "Output format: plain, json or csv")
      ->check(CLI::IsMember({"plain", "json", "csv"}))
      ->capture_default_str();
}

// Representation kinds shared by `enumerate` and `count`.
struct KindArgs {
  std::string kind;
  std::string n;
  std::string i_positional;
  std::string i_option;
  std::string format = "plain";

  void attach(CLI::App* cmd) {
    cmd->add_option("kind", kind, "short-bsd, fixed or hyperbinary")
        ->required()
        ->check(CLI::IsMember({"short-bsd", "fixed", "hyperbinary"}));
    cmd->add_option("n", n, "Target integer")->required();
    cmd->add_option("width", i_positional, "Digit count i (fixed only)");
    cmd->add_option("--i", i_option, "Digit count (fixed only)");
    add_format_option(cmd, format);
  }

  std::int64_t value() const {
    const std::int64_t v = parse_int(n, "n");
    if (kind == "hyperbinary" && v < 0) {
      throw UsageError("hyperbinary representations need n >= 0, got " + n);
    }
    return v;
  }

  std::optional<int> width() const {
    if (!i_positional.empty() && !i_option.empty() &&
        i_positional != i_option) {
      throw UsageError("conflicting values for i");
    }
    const std::string& text = i_option.empty() ? i_positional : i_option;
    if (kind != "fixed") {
      if (!text.empty()) throw UsageError("i only applies to kind 'fixed'");
      return std::nullopt;
    }
    if (text.empty()) throw UsageError("kind 'fixed' requires i");
    return parse_width(text);
  }
};

// --- stern -----------------------------------------------------------------

void cmd_stern(const std::string& n_text, OutputFormat format,
               std::ostream& out) {
  const std::int64_t n = parse_nonnegative(n_text, "n");
  const CountValue s = stern(n);
  switch (format) {
    case OutputFormat::kPlain:
      out << s << "\n";
      break;
    case OutputFormat::kJson:
      out << json{{"n", n}, {"stern", s.value()}}.dump() << "\n";
      break;
    case OutputFormat::kCsv:
      out << "n,stern\n" << n << ',' << s << "\n";
      break;
  }
}

// --- enumerate -------------------------------------------------------------

std::vector<std::string> enumerate_strings(const KindArgs& args) {
  const std::int64_t n = args.value();
  const std::optional<int> i = args.width();
  std::vector<std::string> out;
  if (args.kind == "short-bsd") {
    for (const auto& r : enumerate_short_bsd(n)) out.push_back(format_bsd(r));
  } else if (args.kind == "fixed") {
    for (const auto& r : enumerate_bsd_fixed(n, *i)) {
      out.push_back(format_bsd(r));
    }
  } else {
    for (const auto& h : enumerate_hyperbinary(n)) out.push_back(format_hb(h));
  }
  return out;
}

void cmd_enumerate(const KindArgs& args, OutputFormat format,
                   std::ostream& out) {
  const auto reps = enumerate_strings(args);
  switch (format) {
    case OutputFormat::kPlain:
      for (const auto& r : reps) out << r << "\n";
      out << "count: " << reps.size() << "\n";
      break;
    case OutputFormat::kJson:
      out << json(reps).dump() << "\n";
      break;
    case OutputFormat::kCsv:
      out << "representation\n";
      for (const auto& r : reps) out << r << "\n";
      break;
  }
}

// --- count -----------------------------------------------------------------

CountValue count_closed_form(const std::string& kind, std::int64_t n,
                             std::optional<int> i) {
  if (kind == "short-bsd") {
    if (n == std::numeric_limits<std::int64_t>::min()) {
      throw DomainError("|n| not representable");
    }
    return stern(n < 0 ? -n : n);
  }
  if (kind == "hyperbinary") {
    if (n == std::numeric_limits<std::int64_t>::max()) {
      throw DomainError("n + 1 overflows");
    }
    return stern(n + 1);
  }
  // f(n, i) = s(2^i - |n|); s(2^i) = 1 also covers n = 0.
  const std::int64_t limit = (std::int64_t{1} << *i) - 1;
  if (n < -limit || n > limit) {
    throw DomainError("|n| exceeds 2^i - 1 for i = " + std::to_string(*i));
  }
  return stern((std::int64_t{1} << *i) - (n < 0 ? -n : n));
}

CountValue count_recurrence(const std::string& kind, std::int64_t n,
                            std::optional<int> i) {
  if (kind == "short-bsd") return count_short_bsd_recurrence(n);
  if (kind == "hyperbinary") return count_short_bsd_recurrence(n + 1);
  return count_bsd_fixed_recurrence(n, *i);
}

CountValue count_enumerate(const std::string& kind, std::int64_t n,
                           std::optional<int> i) {
  if (kind == "short-bsd") return CountValue{enumerate_short_bsd(n).size()};
  if (kind == "hyperbinary") {
    return CountValue{enumerate_hyperbinary(n).size()};
  }
  return CountValue{enumerate_bsd_fixed(n, *i).size()};
}

void cmd_count(const KindArgs& args, const std::string& method,
               OutputFormat format, std::ostream& out) {
  const std::int64_t n = args.value();
  const std::optional<int> i = args.width();

  CountValue result;
  if (method == "closed-form") {
    result = count_closed_form(args.kind, n, i);
  } else if (method == "recurrence") {
    result = count_recurrence(args.kind, n, i);
  } else if (method == "enumerate") {
    result = count_enumerate(args.kind, n, i);
  } else {
    const CountValue closed = count_closed_form(args.kind, n, i);
    const CountValue recurrence = count_recurrence(args.kind, n, i);
    const CountValue enumerated = count_enumerate(args.kind, n, i);
    if (closed != recurrence || closed != enumerated) {
      throw DisagreementError(
          "methods disagree: closed-form=" + closed.to_string() +
          " recurrence=" + recurrence.to_string() +
          " enumerate=" + enumerated.to_string());
    }
    result = closed;
  }

  switch (format) {
    case OutputFormat::kPlain:
      out << result << "\n";
      break;
    case OutputFormat::kJson: {
      json doc{{"kind", args.kind}, {"n", n}};
      doc["i"] = i ? json(*i) : json(nullptr);
      doc["method"] = method;
      doc["count"] = result.value();
      out << doc.dump() << "\n";
      break;
    }
    case OutputFormat::kCsv:
      out << "kind,n,i,method,count\n"
          << args.kind << ',' << n << ',' << (i ? std::to_string(*i) : "")
          << ',' << method << ',' << result << "\n";
      break;
  }
}

// --- map -------------------------------------------------------------------

void cmd_map(const std::string& direction, const std::string& digits,
             OutputFormat format, std::ostream& out) {
  std::string image;
  if (direction == "hb-to-bsd") {
    image = format_bsd(hb_to_short_bsd(parse_hb(digits)));
  } else {
    image = format_hb(short_bsd_to_hb(parse_bsd(digits)));
  }
  switch (format) {
    case OutputFormat::kPlain:
      out << image << "\n";
      break;
    case OutputFormat::kJson:
      out << json{{"direction", direction},
                  {"input", digits},
                  {"output", image}}
                 .dump()
          << "\n";
      break;
    case OutputFormat::kCsv:
      out << "direction,input,output\n"
          << direction << ',' << digits << ',' << image << "\n";
      break;
  }
}

// --- series ----------------------------------------------------------------

void cmd_series(const std::string& side, const std::string& order_text,
                OutputFormat format, std::ostream& out) {
  const std::int64_t order = parse_nonnegative(order_text, "M");
  if (order > kMaxSeriesOrder) {
    throw UsageError("M must be at most " + std::to_string(kMaxSeriesOrder));
  }
  const int M = static_cast<int>(order);
  const SparseSeries s = side == "lhs" ? lhs_finite(M) : rhs_finite(M);
  switch (format) {
    case OutputFormat::kPlain:
      out << s.to_string() << "\n";
      break;
    case OutputFormat::kJson: {
      json terms = json::array();
      for (const auto& [e, c] : s.terms()) {
        terms.push_back({{"exponent", e}, {"coefficient", c.value()}});
      }
      out << terms.dump() << "\n";
      break;
    }
    case OutputFormat::kCsv:
      out << "exponent,coefficient\n";
      for (const auto& [e, c] : s.terms()) out << e << ',' << c << "\n";
      break;
  }
}

// --- table -----------------------------------------------------------------

struct Column {
  std::string name;
  std::function<json(std::int64_t)> value;
};

// Widths of the short representations of n, from the per-width counts
// s(2^i - n) at width i and s(n) - s(2^i - n) at width i + 1.
std::vector<int> short_widths(std::int64_t n) {
  if (n == 0) return {};
  const int i = binary_width(n);
  const CountValue narrow = stern((std::int64_t{1} << i) - n);
  std::vector<int> widths;
  if (narrow > CountValue{0}) widths.push_back(i);
  if (stern(n) > narrow) widths.push_back(i + 1);
  return widths;
}

const std::map<std::string, std::string>& column_aliases() {
  static const std::map<std::string, std::string> aliases = {
      {"stern", "stern"},
      {"short", "short_bsd"},
      {"short_bsd", "short_bsd"},
      {"short-bsd", "short_bsd"},
      {"hyperbinary_prev", "hyperbinary_prev"},
      {"hyperbinary", "hyperbinary_prev"},
      {"hb", "hyperbinary_prev"},
      {"widths", "widths"},
  };
  return aliases;
}

Column make_column(const std::string& name) {
  if (name == "stern") {
    return {name, [](std::int64_t n) { return json(stern(n).value()); }};
  }
  if (name == "short_bsd") {
    return {name, [](std::int64_t n) {
              return json(count_short_bsd_recurrence(n).value());
            }};
  }
  if (name == "hyperbinary_prev") {
    // f_HB(n - 1) = s(n); zero for n = 0 since -1 has no representation.
    return {name, [](std::int64_t n) {
              return json(n == 0 ? 0 : stern(n).value());
            }};
  }
  return {name, [](std::int64_t n) { return json(short_widths(n)); }};
}

std::string render_cell(const json& v) {
  if (!v.is_array()) return v.dump();
  std::string out;
  for (std::size_t k = 0; k < v.size(); ++k) {
    if (k > 0) out += ';';
    out += v[k].dump();
  }
  return out;
}

void cmd_table(const std::string& max_text, const std::string& columns_text,
               OutputFormat format, std::ostream& out) {
  const std::int64_t max_n = parse_nonnegative(max_text, "--max");
  std::vector<Column> columns;
  std::stringstream ss(columns_text);
  for (std::string item; std::getline(ss, item, ',');) {
    auto it = column_aliases().find(item);
    if (it == column_aliases().end()) {
      throw UsageError("unknown column: '" + item +
                       "' (expected stern, short_bsd, hyperbinary_prev, "
                       "widths)");
    }
    columns.push_back(make_column(it->second));
  }
  if (columns.empty()) throw UsageError("--columns must name a column");

  std::vector<std::vector<json>> rows;
  for (std::int64_t n = 0; n <= max_n; ++n) {
    std::vector<json> row{json(n)};
    for (const auto& c : columns) row.push_back(c.value(n));
    rows.push_back(std::move(row));
  }
  std::vector<std::string> header{"n"};
  for (const auto& c : columns) header.push_back(c.name);

  switch (format) {
    case OutputFormat::kJson: {
      json doc = json::array();
      for (const auto& row : rows) {
        json obj;
        for (std::size_t k = 0; k < header.size(); ++k) obj[header[k]] = row[k];
        doc.push_back(std::move(obj));
      }
      out << doc.dump() << "\n";
      break;
    }
    case OutputFormat::kCsv:
      for (std::size_t k = 0; k < header.size(); ++k) {
        out << (k ? "," : "") << header[k];
      }
      out << "\n";
      for (const auto& row : rows) {
        for (std::size_t k = 0; k < row.size(); ++k) {
          out << (k ? "," : "") << render_cell(row[k]);
        }
        out << "\n";
      }
      break;
    case OutputFormat::kPlain: {
      std::vector<std::size_t> widths;
      for (const auto& h : header) widths.push_back(h.size());
      for (const auto& row : rows) {
        for (std::size_t k = 0; k < row.size(); ++k) {
          widths[k] = std::max(widths[k], render_cell(row[k]).size());
        }
      }
      auto emit = [&](const std::vector<std::string>& cells) {
        for (std::size_t k = 0; k < cells.size(); ++k) {
          if (k) out << "  ";
          out << std::setw(static_cast<int>(widths[k])) << cells[k];
        }
        out << "\n";
      };
      emit(header);
      for (const auto& row : rows) {
        std::vector<std::string> cells;
        for (const auto& v : row) cells.push_back(render_cell(v));
        emit(cells);
      }
      break;
    }
  }
}

// --- verify ----------------------------------------------------------------

struct VerifyArgs {
  std::vector<std::string> checks{"all"};
  std::optional<std::int64_t> max_n;
  std::optional<int> max_i;
  std::optional<int> max_j;
  std::optional<int> max_M;
  bool fail_fast = false;
  bool parallel = false;
  std::string format = "plain";
};

int cmd_verify(const VerifyArgs& args, OutputFormat format,
               std::ostream& out) {
  VerifyConfig config;
  for (const auto& c : args.checks) {
    if (c == "all") {
      config.checks.clear();
      break;
    }
    const auto& names = all_check_names();
    if (std::find(names.begin(), names.end(), c) == names.end()) {
      throw UsageError("unknown check: '" + c + "'");
    }
    config.checks.push_back(c);
  }
  if (args.max_n) {
    config.theorem1_max_n = config.theorem2_max_n = config.theorem3_max_n =
        config.reznick_max_n = *args.max_n;
  }
  if (args.max_i) config.monroe_max_i = config.stolarsky_max_i = *args.max_i;
  if (args.max_j) config.stolarsky_max_j = *args.max_j;
  if (args.max_M) config.gf_max_M = *args.max_M;
  config.fail_fast = args.fail_fast;
  config.parallel = args.parallel;

  const VerificationReport report = run_all(config);
  switch (format) {
    case OutputFormat::kPlain:
      out << report_to_text(report);
      break;
    case OutputFormat::kJson:
      out << report_to_json(report) << "\n";
      break;
    case OutputFormat::kCsv:
      out << report_to_csv(report);
      break;
  }
  return report.pass() ? kExitOk : kExitVerificationFailed;
}

}  // namespace

int RunCli(const std::vector<std::string>& args, std::ostream& out,
           std::ostream& err) {
  CLI::App app{
      "Counts and enumerates binary signed-digit, short signed-digit and "
      "hyperbinary representations, evaluates the Stern sequence, and "
      "verifies the identities connecting them.",
      "sternbsd"};
  app.require_subcommand(1);

  std::string stern_n;
  std::string stern_format = "plain";
  auto* stern_cmd = app.add_subcommand("stern", "Print s(n)");
  stern_cmd->add_option("n", stern_n, "Nonnegative index")->required();
  add_format_option(stern_cmd, stern_format);

  KindArgs enum_args;
  auto* enum_cmd =
      app.add_subcommand("enumerate", "List representations of n");
  enum_args.attach(enum_cmd);

  KindArgs count_args;
  std::string method = "closed-form";
  auto* count_cmd = app.add_subcommand("count", "Count representations of n");
  count_args.attach(count_cmd);
  count_cmd->add_option("--method", method, "closed-form, recurrence, "
                                            "enumerate or all")
      ->check(CLI::IsMember({"closed-form", "recurrence", "enumerate", "all"}))
      ->capture_default_str();

  std::string direction;
  std::string digits;
  std::string map_format = "plain";
  auto* map_cmd = app.add_subcommand(
      "map", "Apply the hyperbinary <-> short BSD bijection");
  map_cmd->add_option("direction", direction, "hb-to-bsd or bsd-to-hb")
      ->required()
      ->check(CLI::IsMember({"hb-to-bsd", "bsd-to-hb"}));
  map_cmd->add_option("digits", digits, "Digit string, most significant first")
      ->required();
  add_format_option(map_cmd, map_format);

  std::string side;
  std::string order;
  std::string series_format = "plain";
  auto* series_cmd = app.add_subcommand(
      "series", "Print a truncated generating function as exponent:coefficient");
  series_cmd->add_option("side", side, "lhs (hyperbinary) or rhs (short BSD)")
      ->required()
      ->check(CLI::IsMember({"lhs", "rhs"}));
  series_cmd->add_option("M", order, "Truncation order")->required();
  add_format_option(series_cmd, series_format);

  std::string table_max = "16";
  std::string table_columns = "stern,short_bsd,hyperbinary_prev,widths";
  std::string table_format = "plain";
  auto* table_cmd = app.add_subcommand("table", "Tabulate counts for 0..N");
  table_cmd->add_option("--max", table_max, "Largest n")->capture_default_str();
  table_cmd
      ->add_option("--columns", table_columns,
                   "Comma separated: stern, short_bsd, hyperbinary_prev, "
                   "widths")
      ->capture_default_str();
  add_format_option(table_cmd, table_format);

  VerifyArgs verify_args;
  auto* verify_cmd =
      app.add_subcommand("verify", "Exhaustively check the identities");
  verify_cmd
      ->add_option("--check", verify_args.checks,
                   "theorem1, theorem2, theorem3, monroe, reznick, "
                   "stolarsky, gf or all")
      ->capture_default_str();
  verify_cmd->add_option("--max-n", verify_args.max_n,
                         "Upper n for theorem1/2/3 and reznick");
  verify_cmd->add_option("--max-i", verify_args.max_i,
                         "Upper i for monroe and stolarsky");
  verify_cmd->add_option("--max-j", verify_args.max_j, "Upper j for stolarsky");
  verify_cmd->add_option("--max-M", verify_args.max_M, "Upper M for gf");
  verify_cmd->add_flag("--fail-fast", verify_args.fail_fast,
                       "Stop after the first failing check");
  verify_cmd->add_flag("--parallel", verify_args.parallel,
                       "Run checks concurrently");
  add_format_option(verify_cmd, verify_args.format);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (*stern_cmd) {
      cmd_stern(stern_n, kFormats.at(stern_format), out);
    } else if (*enum_cmd) {
      cmd_enumerate(enum_args, kFormats.at(enum_args.format), out);
    } else if (*count_cmd) {
      cmd_count(count_args, method, kFormats.at(count_args.format), out);
    } else if (*map_cmd) {
      cmd_map(direction, digits, kFormats.at(map_format), out);
    } else if (*series_cmd) {
      cmd_series(side, order, kFormats.at(series_format), out);
    } else if (*table_cmd) {
      cmd_table(table_max, table_columns, kFormats.at(table_format), out);
    } else if (*verify_cmd) {
      return cmd_verify(verify_args, kFormats.at(verify_args.format), out);
    }
  } catch (const DisagreementError& e) {
    err << "error: " << e.what() << "\n";
    return kExitVerificationFailed;
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const DomainError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const OverflowError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitOk;
}

}  // namespace sternbsd::cli
