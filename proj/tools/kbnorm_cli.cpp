// SPDX-License-Identifier: Apache-2.0

// Command-line front end for the kbnorm shared library. Talks to the library
// exclusively through the C interface in kbnorm.h; everything else here is
// argument parsing and CSV/JSON formatting.

#include <algorithm>
#include <atomic>
#include <cstdint>
#include <cstdio>
#include <cstdlib>
#include <iostream>
#include <memory>
#include <stdexcept>
#include <string>
#include <thread>
#include <vector>

#include "CLI11.hpp"
#include "kbnorm.h"

namespace {

// ---- number formatting: 12 significant digits, '.' separator --------------

std::string format_number(double value) {
  char buffer[64];
  std::snprintf(buffer, sizeof buffer, "%.12g", value);
  return buffer;
}

// Computed real quantities always carry a decimal point so that integral
// values read as reals (15 -> "15.0").
std::string format_computed(double value) {
  std::string text = format_number(value);
  if (text.find_first_of(".eE") == std::string::npos &&
      text.find_first_of("0123456789") != std::string::npos)
    text += ".0";
  return text;
}

struct Field {
  std::string name;
  std::string value;  // valid JSON literal (number)
};

using Record = std::vector<Field>;

Field integer_field(const std::string& name, long long value) {
  return {name, std::to_string(value)};
}

Field input_field(const std::string& name, double value) {
  return {name, format_number(value)};
}

Field computed_field(const std::string& name, double value) {
  return {name, format_computed(value)};
}

void emit_csv(const std::vector<Record>& records, std::ostream& out) {
  if (records.empty()) throw std::invalid_argument("nothing to emit");
  const Record& head = records.front();
  for (std::size_t i = 0; i < head.size(); ++i)
    out << head[i].name << (i + 1 < head.size() ? "," : "\n");
  for (const Record& record : records) {
    for (std::size_t i = 0; i < record.size(); ++i)
      out << record[i].value << (i + 1 < record.size() ? "," : "\n");
  }
}

void emit_json(const std::vector<Record>& records, std::ostream& out,
               bool as_array) {
  if (records.empty()) throw std::invalid_argument("nothing to emit");
  const auto emit_object = [&](const Record& record, const char* indent) {
    out << indent << "{";
    for (std::size_t i = 0; i < record.size(); ++i) {
      out << "\"" << record[i].name << "\": " << record[i].value;
      if (i + 1 < record.size()) out << ", ";
    }
    out << "}";
  };
  if (!as_array) {
    emit_object(records.front(), "");
    out << "\n";
    return;
  }
  out << "[\n";
  for (std::size_t i = 0; i < records.size(); ++i) {
    emit_object(records[i], "  ");
    out << (i + 1 < records.size() ? ",\n" : "\n");
  }
  out << "]\n";
}

void emit(const std::vector<Record>& records, const std::string& format,
          bool single_object = false) {
  if (format == "csv")
    emit_csv(records, std::cout);
  else
    emit_json(records, std::cout, !single_object);
}

// ---- argument parsing ------------------------------------------------------

struct ArgumentError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

double parse_real(const std::string& text) {
  std::size_t used = 0;
  double value = 0.0;
  try {
    value = std::stod(text, &used);
  } catch (const std::exception&) {
    throw ArgumentError("cannot parse number '" + text + "'");
  }
  if (used != text.size())
    throw ArgumentError("cannot parse number '" + text + "'");
  return value;
}

// Poles come as bare reals or as a+bi pairs ("0.5", "0.3-0.2i", "0.4i").
void parse_pole(const std::string& text, double& re, double& im) {
  if (text.empty()) throw ArgumentError("empty pole");
  if (text.back() != 'i') {
    re = parse_real(text);
    im = 0.0;
    return;
  }
  const std::string body = text.substr(0, text.size() - 1);
  std::size_t split = std::string::npos;
  for (std::size_t k = body.size(); k-- > 1;) {
    if ((body[k] == '+' || body[k] == '-') &&
        body[k - 1] != 'e' && body[k - 1] != 'E') {
      split = k;
      break;
    }
  }
  if (split == std::string::npos) {
    re = 0.0;
    im = body.empty() ? 1.0 : (body == "-" ? -1.0 : parse_real(body));
    return;
  }
  re = parse_real(body.substr(0, split));
  const std::string imag_part = body.substr(split);
  im = imag_part == "+" ? 1.0 : (imag_part == "-" ? -1.0 : parse_real(imag_part));
}

std::vector<std::string> split_list(const std::string& text) {
  std::vector<std::string> items;
  std::size_t start = 0;
  while (start <= text.size()) {
    const std::size_t comma = text.find(',', start);
    if (comma == std::string::npos) {
      items.push_back(text.substr(start));
      break;
    }
    items.push_back(text.substr(start, comma - start));
    start = comma + 1;
  }
  return items;
}

// Accepts "2,4,8" and the doubling form "4..64x2".
std::vector<int> parse_degree_list(const std::string& text) {
  std::vector<int> values;
  for (const std::string& token : split_list(text)) {
    const std::size_t dots = token.find("..");
    if (dots != std::string::npos) {
      const std::size_t factor_mark = token.find('x', dots + 2);
      if (factor_mark == std::string::npos)
        throw ArgumentError("range needs the form a..bxk: '" + token + "'");
      const int lo = static_cast<int>(parse_real(token.substr(0, dots)));
      const int hi = static_cast<int>(
          parse_real(token.substr(dots + 2, factor_mark - dots - 2)));
      const int factor =
          static_cast<int>(parse_real(token.substr(factor_mark + 1)));
      if (lo < 1 || hi < lo || factor < 2)
        throw ArgumentError("bad range '" + token + "'");
      for (long long v = lo; v <= hi; v *= factor)
        values.push_back(static_cast<int>(v));
      continue;
    }
    values.push_back(static_cast<int>(parse_real(token)));
  }
  if (values.empty()) throw ArgumentError("empty list");
  return values;
}

std::vector<double> parse_real_list(const std::string& text) {
  std::vector<double> values;
  for (const std::string& token : split_list(text))
    values.push_back(parse_real(token));
  if (values.empty()) throw ArgumentError("empty list");
  return values;
}

void check_status(kbn_status status) {
  if (status == KBN_OK) return;
  const std::string message =
      std::string(kbn_status_name(status)) + ": " + kbn_last_error();
  if (status == KBN_ERR_INVALID_ARGUMENT ||
      status == KBN_ERR_POLE_OUTSIDE_DISC)
    throw ArgumentError(message);
  throw std::runtime_error(message);
}

using ConfigHandle = std::unique_ptr<kbn_config, decltype(&kbn_config_destroy)>;

ConfigHandle make_config(const std::vector<double>& re,
                         const std::vector<double>& im) {
  kbn_config* raw = nullptr;
  check_status(kbn_config_create(re.data(), im.data(),
                                 static_cast<int32_t>(re.size()), &raw));
  return ConfigHandle(raw, &kbn_config_destroy);
}

// ---- subcommands -----------------------------------------------------------

struct SweepCell {
  int n = 0;
  double r = 0.0;
  kbn_bound_report report{};
};

std::vector<SweepCell> run_cells(std::vector<int> ns, std::vector<double> rs) {
  std::sort(ns.begin(), ns.end());
  ns.erase(std::unique(ns.begin(), ns.end()), ns.end());
  std::sort(rs.begin(), rs.end());
  rs.erase(std::unique(rs.begin(), rs.end()), rs.end());
  for (int n : ns)
    if (n < 2) throw ArgumentError("sweep degrees must be >= 2");
  for (double r : rs)
    if (!(r >= 0.0 && r <= 0.95))
      throw ArgumentError("sweep radii must lie in [0, 0.95]");

  std::vector<SweepCell> cells;
  cells.reserve(ns.size() * rs.size());
  for (int n : ns)
    for (double r : rs) cells.push_back({n, r, {}});

  int workers = static_cast<int>(std::thread::hardware_concurrency());
  if (const char* env = std::getenv("KBNORM_THREADS")) {
    const int parsed = std::atoi(env);
    if (parsed > 0) workers = parsed;
  }
  workers = std::max(1, std::min<int>(workers, static_cast<int>(cells.size())));

  std::atomic<std::size_t> next{0};
  std::atomic<int> first_error{KBN_OK};
  const auto worker = [&] {
    for (;;) {
      const std::size_t i = next.fetch_add(1);
      if (i >= cells.size()) return;
      const kbn_status status =
          kbn_confluent_report(cells[i].n, cells[i].r, &cells[i].report);
      if (status != KBN_OK) {
        int expected = KBN_OK;
        first_error.compare_exchange_strong(expected, status);
        return;
      }
    }
  };
  if (workers == 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (int t = 0; t < workers; ++t) pool.emplace_back(worker);
    for (auto& thread : pool) thread.join();
  }
  check_status(static_cast<kbn_status>(first_error.load()));
  return cells;
}

int run_norm(const std::string& poles_text, int grid,
             const std::string& format) {
  std::vector<double> re, im;
  for (const std::string& token : split_list(poles_text)) {
    double a = 0.0, b = 0.0;
    parse_pole(token, a, b);
    re.push_back(a);
    im.push_back(b);
  }
  const ConfigHandle config = make_config(re, im);
  kbn_norm_result result{};
  check_status(kbn_operator_norm(config.get(), grid, &result));
  Record record{integer_field("gram_size", result.dimension),
                input_field("r", kbn_config_max_modulus(config.get())),
                computed_field("norm", result.norm),
                computed_field("lambda_max", result.lambda_max),
                integer_field("iterations", result.iterations),
                computed_field("residual", result.residual)};
  emit({record}, format, /*single_object=*/true);
  return 0;
}

int run_bounds(const std::string& n_text, const std::string& r_text,
               const std::string& format) {
  const auto cells = run_cells(parse_degree_list(n_text),
                               parse_real_list(r_text));
  std::vector<Record> records;
  records.reserve(cells.size());
  for (const SweepCell& cell : cells) {
    records.push_back({integer_field("n", cell.report.n),
                       input_field("r", cell.report.r),
                       computed_field("norm_confluent", cell.report.norm),
                       computed_field("a_lower", cell.report.a_lower),
                       computed_field("A_upper", cell.report.A_upper),
                       computed_field("legacy_52", cell.report.legacy_52),
                       computed_field("ratio", cell.report.ratio)});
  }
  emit(records, format);
  return 0;
}

int run_sweep(const std::string& n_text, const std::string& r_text,
              const std::string& format) {
  const auto cells = run_cells(parse_degree_list(n_text),
                               parse_real_list(r_text));
  std::vector<Record> records;
  records.reserve(cells.size());
  for (const SweepCell& cell : cells) {
    const double limit = (1.0 + cell.report.r) / (1.0 - cell.report.r);
    records.push_back({integer_field("n", cell.report.n),
                       input_field("r", cell.report.r),
                       computed_field("norm", cell.report.norm),
                       computed_field("ratio", cell.report.ratio),
                       computed_field("a_lower", cell.report.a_lower),
                       computed_field("A_upper", cell.report.A_upper),
                       computed_field("legacy_52", cell.report.legacy_52),
                       computed_field("limit", limit)});
  }
  emit(records, format);
  return 0;
}

int run_extremal(int n, double r, int s, const std::string& format) {
  kbn_certificate certificate{};
  check_status(kbn_extremal_certificate(n, r, s, &certificate));
  Record record{integer_field("n", certificate.n),
                integer_field("s", certificate.s),
                input_field("r", certificate.r),
                computed_field("Q", certificate.q),
                computed_field("certified_lower", certificate.certified_lower),
                computed_field("measured", certificate.measured),
                computed_field("f_norm_squared", certificate.f_norm_squared)};
  emit({record}, format, /*single_object=*/true);
  return 0;
}

int run_embeddings(const std::string& space, double s,
                   const std::string& n_text, const std::string& r_text,
                   int trials, std::uint64_t seed, const std::string& format) {
  const int32_t which =
      space == "wiener" ? KBN_SPACE_WIENER : KBN_SPACE_BESOV;
  std::vector<int> ns = parse_degree_list(n_text);
  std::vector<double> rs = parse_real_list(r_text);
  std::sort(ns.begin(), ns.end());
  ns.erase(std::unique(ns.begin(), ns.end()), ns.end());
  std::sort(rs.begin(), rs.end());
  rs.erase(std::unique(rs.begin(), rs.end()), rs.end());
  std::vector<Record> records;
  for (int n : ns) {
    for (double r : rs) {
      kbn_embedding_record record{};
      check_status(
          kbn_embedding_ratio(which, s, n, r, trials, seed, &record));
      records.push_back({{"space", std::string("\"") + space + "\""},
                         input_field("s", record.s),
                         integer_field("n", record.n),
                         input_field("r", record.r),
                         integer_field("trials", record.trials),
                         computed_field("max_ratio", record.max_ratio),
                         computed_field("normalized", record.normalized)});
    }
  }
  emit(records, format);
  return 0;
}

int run_verify() {
  const auto print = [](const char* name, int32_t passed, const char* detail,
                        void*) {
    std::cout << (passed ? "[PASS] " : "[FAIL] ") << name << ": " << detail
              << "\n";
  };
  int32_t failures = 0;
  check_status(kbn_verify(print, nullptr, &failures));
  std::cout << (failures == 0 ? "verification passed" : "verification FAILED")
            << " (" << failures << " failing checks)\n";
  return failures == 0 ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"model-space differentiation norms, brackets and certificates"};
  app.require_subcommand(1);

  std::string poles_text, n_text = "8", r_text = "0.5";
  std::string format = "json", space = "besov";
  int grid = 0, s = 0, trials = 20;
  std::uint64_t seed = 1;

  CLI::App* norm = app.add_subcommand("norm", "operator norm for given poles");
  norm->add_option("--poles", poles_text, "comma-separated poles (a+bi)")
      ->required();
  norm->add_option("--grid", grid, "quadrature grid override");
  norm->add_option("--format", format)->check(CLI::IsMember({"csv", "json"}));

  CLI::App* bounds = app.add_subcommand("bounds", "bracket report per (n, r)");
  bounds->add_option("--n", n_text, "degrees, e.g. 2,4,8 or 4..64x2");
  bounds->add_option("--r", r_text, "radii, comma separated");
  bounds->add_option("--format", format)
      ->check(CLI::IsMember({"csv", "json"}));

  CLI::App* sweep = app.add_subcommand("sweep", "convergence sweep over (n, r)");
  sweep->add_option("--n", n_text, "degrees, e.g. 2,4,8 or 4..64x2");
  sweep->add_option("--r", r_text, "radii, comma separated");
  sweep->add_option("--format", format)->check(CLI::IsMember({"csv", "json"}));

  CLI::App* extremal =
      app.add_subcommand("extremal", "certified extremal lower bound");
  extremal->add_option("--n", n_text, "degree");
  extremal->add_option("--r", r_text, "radius");
  extremal->add_option("--s", s, "even window parameter, n >= s+3");
  extremal->add_option("--format", format)
      ->check(CLI::IsMember({"csv", "json"}));

  CLI::App* embeddings =
      app.add_subcommand("embeddings", "norm-ratio study of Besov/Wiener");
  embeddings->add_option("--space", space)
      ->check(CLI::IsMember({"besov", "wiener"}));
  embeddings->add_option("--s", s, "Besov smoothness (>= 0)");
  embeddings->add_option("--n", n_text, "degrees");
  embeddings->add_option("--r", r_text, "radii");
  embeddings->add_option("--trials", trials);
  embeddings->add_option("--seed", seed);
  embeddings->add_option("--format", format)
      ->check(CLI::IsMember({"csv", "json"}));

  CLI::App* verify =
      app.add_subcommand("verify", "run the library invariant suite");
  (void)verify;

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& help) {
    return app.exit(help);
  } catch (const CLI::ParseError& error) {
    app.exit(error);
    return 2;
  }

  try {
    if (norm->parsed()) return run_norm(poles_text, grid, format);
    if (bounds->parsed()) return run_bounds(n_text, r_text, format);
    if (sweep->parsed()) return run_sweep(n_text, r_text, format);
    if (extremal->parsed()) {
      const auto ns = parse_degree_list(n_text);
      const auto rs = parse_real_list(r_text);
      if (ns.size() != 1 || rs.size() != 1)
        throw ArgumentError("extremal expects a single n and a single r");
      return run_extremal(ns.front(), rs.front(), s, format);
    }
    if (embeddings->parsed())
      return run_embeddings(space, s, n_text, r_text, trials, seed, format);
    if (verify->parsed()) return run_verify();
  } catch (const ArgumentError& error) {
    std::cerr << "error: " << error.what() << "\n";
    return 2;
  } catch (const std::exception& error) {
    std::cerr << "error: " << error.what() << "\n";
    return 1;
  }
  return 2;
}
