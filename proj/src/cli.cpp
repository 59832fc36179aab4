#include "ptorus/cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <fstream>
#include <optional>
#include <sstream>

#include "ptorus/counting.hpp"
#include "ptorus/cusp.hpp"
#include "ptorus/error.hpp"
#include "ptorus/farey.hpp"
#include "ptorus/norm.hpp"

namespace ptorus::cli {
namespace {

using json = nlohmann::json;

struct Config {
  std::string triple = "modular";
  std::vector<double> lengths;
  int depth = 12;
  std::int64_t word_bound = 8;
  int conj_depth = 6;
  std::string mode = "float";
  std::string format;  // empty: csv, or json for verify
  std::string out;
  unsigned parallel = 1;
  bool with_ball = false;
  std::string convention = "unoriented";
  std::string suite = "all";
};

struct ParsedTriple {
  FrickeTriple real;
  std::optional<std::array<BigInt, 3>> integer;  // set when every coordinate is an integer
};

ParsedTriple parse_triple(const std::string& text) {
  if (text == "modular") return {kModularTriple, std::array<BigInt, 3>{3, 3, 3}};
  std::vector<std::string> parts;
  std::stringstream ss(text);
  std::string part;
  while (std::getline(ss, part, ',')) parts.push_back(part);
  if (parts.size() != 3) {
    throw Error(ErrorCode::InvalidTriple, "expected 'modular' or x,y,z, got '" + text + "'");
  }
  ParsedTriple parsed;
  std::array<double, 3> v{};
  std::array<BigInt, 3> ints;
  bool all_integer = true;
  for (std::size_t i = 0; i < 3; ++i) {
    const std::string& p = parts[i];
    std::size_t used = 0;
    try {
      v[i] = std::stod(p, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used == 0 || used != p.size()) {
      throw Error(ErrorCode::InvalidTriple, "bad coordinate '" + p + "'");
    }
    const bool digits = !p.empty() && std::all_of(p.begin() + (p[0] == '-' ? 1 : 0), p.end(),
                                                  [](char c) { return c >= '0' && c <= '9'; });
    if (digits) {
      ints[i] = BigInt(p);
    } else {
      all_integer = false;
    }
  }
  parsed.real = {v[0], v[1], v[2]};
  if (all_integer) parsed.integer = ints;
  return parsed;
}

void load_config_file(const std::string& path, Config& cfg) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::InvalidArgument, "cannot read config file '" + path + "'");
  json j;
  try {
    in >> j;
  } catch (const json::exception& e) {
    throw Error(ErrorCode::InvalidArgument, "config file: " + std::string(e.what()));
  }
  auto take = [&j](const char* key, auto& field) {
    if (j.contains(key)) j.at(key).get_to(field);
  };
  try {
    take("triple", cfg.triple);
    if (j.contains("L")) {
      if (j.at("L").is_array()) {
        j.at("L").get_to(cfg.lengths);
      } else {
        cfg.lengths = {j.at("L").get<double>()};
      }
    }
    take("depth", cfg.depth);
    take("word_bound", cfg.word_bound);
    take("conj_depth", cfg.conj_depth);
    take("mode", cfg.mode);
    take("format", cfg.format);
    take("out", cfg.out);
    take("parallel", cfg.parallel);
    take("with_ball", cfg.with_ball);
    take("convention", cfg.convention);
    take("suite", cfg.suite);
  } catch (const json::exception& e) {
    throw Error(ErrorCode::InvalidArgument, "config file: " + std::string(e.what()));
  }
}

// --config has to be honoured before CLI11 assigns flag values, so that
// explicit flags override it.
std::optional<std::string> find_config_path(const std::vector<std::string>& args) {
  for (std::size_t i = 0; i < args.size(); ++i) {
    if (args[i] == "--config" && i + 1 < args.size()) return args[i + 1];
    if (args[i].rfind("--config=", 0) == 0) return args[i].substr(9);
  }
  return std::nullopt;
}

void require_float_mode(const Config& cfg, const char* command) {
  if (cfg.mode != "float") {
    throw Error(ErrorCode::InvalidArgument,
                std::string("exact mode is only available for count and spectrum, not ") + command);
  }
}

const std::array<BigInt, 3>& integer_triple(const ParsedTriple& t) {
  if (!t.integer) throw Error(ErrorCode::InvalidTriple, "exact mode requires an integer triple");
  return *t.integer;
}

std::vector<double> require_lengths(const Config& cfg) {
  if (cfg.lengths.empty()) throw Error(ErrorCode::InvalidArgument, "at least one --L is required");
  for (double l : cfg.lengths) {
    if (!(l > 0.0)) throw Error(ErrorCode::InvalidArgument, "--L values must be positive");
  }
  std::vector<double> sorted = cfg.lengths;
  std::sort(sorted.begin(), sorted.end());
  sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
  return sorted;
}

void cmd_count(const Config& cfg, std::ostream& out) {
  const ParsedTriple triple = parse_triple(cfg.triple);
  const auto lengths = require_lengths(cfg);
  const Convention convention = parse_convention(cfg.convention);
  const EnumerateOptions options{cfg.parallel};

  CountSeries series;
  series.convention = convention;
  if (cfg.mode == "exact") {
    const auto& t = integer_triple(triple);
    const std::uint64_t factor = convention == Convention::oriented ? 2 : 1;
    for (double l : lengths) {
      series.entries.push_back({l, factor * exact_spectrum(t[0], t[1], t[2], l, options).size()});
    }
  } else {
    series = count_series(triple.real, lengths, convention, options);
  }

  std::optional<double> fitted;
  if (series.entries.size() >= 3) fitted = fit_quadratic_coefficient(series).c;
  std::optional<double> predicted;
  if (cfg.with_ball) predicted = predict_c(build_ball(triple.real, cfg.depth), convention);

  if (cfg.format == "json") {
    json rows = json::array();
    for (const auto& p : series.entries) {
      rows.push_back({{"L", p.length},
                      {"N", p.count},
                      {"N_over_L2", static_cast<double>(p.count) / (p.length * p.length)}});
    }
    json doc{{"convention", convention_name(convention)}, {"rows", rows}};
    if (fitted) doc["fitted_c"] = *fitted;
    if (predicted) doc["predicted_c"] = *predicted;
    out << doc.dump(2) << '\n';
    return;
  }
  out << "L,N,N_over_L2\n";
  for (const auto& p : series.entries) {
    out << format_sig10(p.length) << ',' << p.count << ','
        << format_sig10(static_cast<double>(p.count) / (p.length * p.length)) << '\n';
  }
  if (fitted) out << "# fitted_c=" << format_sig10(*fitted) << '\n';
  if (predicted) out << "# predicted_c=" << format_sig10(*predicted) << '\n';
}

template <class Entries, class TraceText>
void emit_spectrum(const Config& cfg, const Entries& entries, TraceText trace_text,
                   std::ostream& out) {
  if (cfg.format == "json") {
    json arr = json::array();
    for (const auto& e : entries) {
      json row{{"m", e.slope.m()}, {"n", e.slope.n()}, {"length", e.length}};
      trace_text(row, e.trace);
      arr.push_back(std::move(row));
    }
    out << arr.dump(2) << '\n';
    return;
  }
  out << "m,n,trace,length\n";
  for (const auto& e : entries) {
    json cell;
    trace_text(cell, e.trace);
    const std::string trace = cell["trace"].is_string() ? cell["trace"].get<std::string>()
                                                        : format_sig10(cell["trace"].get<double>());
    out << e.slope.m() << ',' << e.slope.n() << ',' << trace << ',' << format_sig10(e.length)
        << '\n';
  }
}

void cmd_spectrum(const Config& cfg, std::ostream& out) {
  const ParsedTriple triple = parse_triple(cfg.triple);
  const double max_length = require_lengths(cfg).back();
  const EnumerateOptions options{cfg.parallel};
  if (cfg.mode == "exact") {
    const auto& t = integer_triple(triple);
    emit_spectrum(cfg, exact_spectrum(t[0], t[1], t[2], max_length, options),
                  [](json& row, const BigInt& v) { row["trace"] = v.str(); }, out);
  } else {
    emit_spectrum(cfg, enumerate_spectrum(triple.real, max_length, options),
                  [](json& row, double v) { row["trace"] = v; }, out);
  }
}

void cmd_ball(const Config& cfg, std::ostream& out) {
  require_float_mode(cfg, "ball");
  const ParsedTriple triple = parse_triple(cfg.triple);
  const BallApprox ball = build_ball(triple.real, cfg.depth);
  if (cfg.format == "json") {
    json doc{{"depth", ball.depth},
             {"area", ball.area},
             {"c_unoriented", predict_c(ball, Convention::unoriented)},
             {"c_oriented", predict_c(ball, Convention::oriented)},
             {"vertex_count", ball.vertices.size()},
             {"sample_count", ball.sample_count}};
    out << doc.dump(2) << '\n';
    return;
  }
  out << "x,y\n";
  for (const auto& v : ball.vertices) out << format_sig10(v.x) << ',' << format_sig10(v.y) << '\n';
}

void cmd_cusp(const Config& cfg, std::ostream& out) {
  require_float_mode(cfg, "cusp");
  const ParsedTriple triple = parse_triple(cfg.triple);
  const auto reports = verify_cusp_avoidance(triple.real, cfg.word_bound, cfg.conj_depth, cfg.parallel);
  if (cfg.format == "json") {
    json arr = json::array();
    for (const auto& r : reports) {
      arr.push_back({{"slope_m", r.slope.m()},
                     {"slope_n", r.slope.n()},
                     {"max_height", r.max_height},
                     {"conj_depth", r.conj_depth}});
    }
    out << arr.dump(2) << '\n';
    return;
  }
  write_cusp_csv(out, reports);
}

int cmd_verify(const Config& cfg, std::ostream& out, std::ostream& err, const VerifyHooks& hooks) {
  require_float_mode(cfg, "verify");
  const ParsedTriple triple = parse_triple(cfg.triple);
  require_valid_triple(triple.real);
  const auto names = resolve_suites(cfg.suite);
  const auto results = run_suites(names, triple.real, hooks);

  bool all_passed = true;
  for (const auto& r : results) all_passed = all_passed && r.passed;

  if (cfg.format == "csv") {
    out << "suite,passed,detail\n";
    for (const auto& r : results) {
      out << r.name << ',' << (r.passed ? "true" : "false") << ",\"" << r.detail << "\"\n";
    }
  } else {
    json suites = json::array();
    for (const auto& r : results) {
      suites.push_back({{"name", r.name}, {"passed", r.passed}, {"detail", r.detail}});
    }
    json doc{{"passed", all_passed}, {"suites", suites}};
    out << doc.dump(2) << '\n';
  }
  for (const auto& r : results) {
    if (!r.passed) err << "verify: suite " << r.name << " failed: " << r.detail << '\n';
  }
  return all_passed ? kOk : kPropertyFailure;
}

void add_common(CLI::App* sub, Config& cfg) {
  sub->add_option("--triple", cfg.triple, "Fricke triple x,y,z or 'modular' (3,3,3)");
  sub->add_option("--mode", cfg.mode, "float or exact (exact needs an integer triple)")
      ->check(CLI::IsMember({"float", "exact"}));
  sub->add_option("--format", cfg.format, "csv or json (verify defaults to json)")->check(CLI::IsMember({"csv", "json"}));
  sub->add_option("--out", cfg.out, "Write output to PATH instead of stdout")->type_name("PATH");
  sub->add_option("--parallel", cfg.parallel, "Worker threads; output does not depend on it")
      ->check(CLI::Range(1u, 256u));
  sub->add_option("--config", "JSON file with default option values (flags win)")->type_name("PATH");
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err,
        const VerifyHooks& hooks) {
  Config cfg;
  try {
    if (auto path = find_config_path(args)) load_config_file(*path, cfg);
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kInvalidInput;
  }

  CLI::App app{"Simple closed geodesics on hyperbolic punctured tori.\n"
               "Counts are unoriented (one geodesic per slope) unless --convention oriented.",
               "ptorus"};
  app.require_subcommand(1);

  auto* count = app.add_subcommand("count", "N(L) table, fitted c and optional ball prediction");
  add_common(count, cfg);
  count->add_option("--L", cfg.lengths, "Length cutoff (repeatable)");
  count->add_option("--convention", cfg.convention, "unoriented or oriented")
      ->check(CLI::IsMember({"unoriented", "oriented"}));
  count->add_flag("--with-ball", cfg.with_ball, "Also report c predicted from the unit ball");
  count->add_option("--depth", cfg.depth, "Farey depth for --with-ball")->check(CLI::Range(0, 24));

  auto* spectrum = app.add_subcommand("spectrum", "Simple length spectrum up to the largest --L");
  add_common(spectrum, cfg);
  spectrum->add_option("--L", cfg.lengths, "Length cutoff");

  auto* ball = app.add_subcommand("ball", "Unit ball of the length norm");
  add_common(ball, cfg);
  ball->add_option("--depth", cfg.depth, "Farey generation depth")->check(CLI::Range(0, 24));

  auto* cusp = app.add_subcommand("cusp", "Largest lift radius per slope in the cusp frame");
  add_common(cusp, cfg);
  cusp->add_option("--word-bound", cfg.word_bound, "Largest |m|+|n|")->check(CLI::PositiveNumber);
  cusp->add_option("--conj-depth", cfg.conj_depth, "Longest conjugating word")->check(CLI::NonNegativeNumber);

  auto* verify = app.add_subcommand("verify", "Run property suites; exit 1 on failure");
  add_common(verify, cfg);
  verify->add_option("--suite", cfg.suite,
                     "all, oracle-equivalence, totient-identity, triangle-inequality, "
                     "strict-convexity or cusp-avoidance");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    // Prints help (to out) or the parse error (to err).
    return app.exit(e, out, err) == 0 ? kOk : kInvalidInput;
  }

  std::ofstream file;
  std::ostream* sink = &out;
  if (!cfg.out.empty()) {
    file.open(cfg.out);
    if (!file) {
      err << "error: cannot open '" << cfg.out << "' for writing\n";
      return kInvalidInput;
    }
    sink = &file;
  }

  try {
    if (count->parsed()) {
      cmd_count(cfg, *sink);
    } else if (spectrum->parsed()) {
      cmd_spectrum(cfg, *sink);
    } else if (ball->parsed()) {
      cmd_ball(cfg, *sink);
    } else if (cusp->parsed()) {
      cmd_cusp(cfg, *sink);
    } else {
      return cmd_verify(cfg, *sink, err, hooks);
    }
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    switch (e.code()) {
      case ErrorCode::Overflow: return kOverflow;
      case ErrorCode::Internal: return kPropertyFailure;
      default: return kInvalidInput;
    }
  }
  return kOk;
}

}  // namespace ptorus::cli
