#include "gencomp/cli.hpp"

#include <algorithm>
#include <cstdint>
#include <optional>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include "CLI11.hpp"
#include "json.hpp"

#include "gencomp/errors.hpp"
#include "gencomp/serialize.hpp"
#include "gencomp/triangle.hpp"
#include "gencomp/verify.hpp"
#include "gencomp/words.hpp"

namespace gencomp::cli {

namespace {

class UsageError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

struct RunConfig {
  std::string preset;
  std::string seed;
  unsigned m = 1;
  std::size_t order = 0;
  std::string algo = "recurrence";
  std::string format = "csv";
  std::uint64_t budget = kDefaultEnumerationBudget;
  std::string suite;
  std::size_t max = 0;
};

SeedPreset resolve_seed(const RunConfig& cfg) {
  SeedPreset seed;
  if (!cfg.seed.empty()) {
    if (!cfg.preset.empty() && cfg.preset != "custom") {
      throw UsageError("--seed only combines with --preset custom");
    }
    seed.tag = Preset::Custom;
    std::stringstream in(cfg.seed);
    std::string item;
    while (std::getline(in, item, ',')) {
      try {
        seed.custom_values.emplace_back(item);
      } catch (const std::exception&) {
        throw UsageError("--seed: '" + item + "' is not an integer");
      }
    }
    return seed;
  }
  if (cfg.preset.empty()) throw UsageError("one of --preset or --seed is required");
  const auto tag = parse_preset(cfg.preset);
  if (!tag) throw UsageError("unknown preset '" + cfg.preset + "'");
  if (*tag == Preset::Custom) throw UsageError("--preset custom needs --seed");
  seed.tag = *tag;
  return seed;
}

Format resolve_format(const RunConfig& cfg) {
  const auto format = parse_format(cfg.format);
  if (!format) throw UsageError("unknown format '" + cfg.format + "'");
  return *format;
}

void require_order(const RunConfig& cfg) {
  if (cfg.order == 0) throw UsageError("--N must be >= 1");
}

int cmd_transform(const RunConfig& cfg, std::ostream& out) {
  require_order(cfg);
  const SeedPreset seed = resolve_seed(cfg);
  const Format format = resolve_format(cfg);
  const auto f = iterate_invert(make_seed(seed, cfg.order), cfg.m);
  out << format_sequence(f, seed, cfg.m, format);
  return kExitOk;
}

void print_diff(const CompositionTriangle& reference,
                const CompositionTriangle& other, Algorithm algo,
                std::ostream& err) {
  for (std::size_t n = 1; n <= reference.order(); ++n) {
    for (std::size_t k = 1; k <= n; ++k) {
      if (reference(n, k) != other(n, k)) {
        err << "disagreement (" << algorithm_name(algo) << ") at n=" << n
            << " k=" << k << ": recurrence=" << reference(n, k) << " "
            << algorithm_name(algo) << "=" << other(n, k) << '\n';
      }
    }
  }
}

int cmd_triangle(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  require_order(cfg);
  if (cfg.m == 0) throw UsageError("--m must be >= 1 for triangles");
  const SeedPreset seed = resolve_seed(cfg);
  const Format format = resolve_format(cfg);
  const auto f0 = make_seed(seed, cfg.order);
  if (cfg.algo == "all") {
    const auto reference = triangle_recurrence(f0, cfg.m, cfg.order);
    bool agree = true;
    for (Algorithm algo : kAllAlgorithms) {
      if (algo == Algorithm::Recurrence) continue;
      const auto other = build_triangle(algo, f0, cfg.m, cfg.order);
      if (!(other == reference)) {
        agree = false;
        print_diff(reference, other, algo, err);
      }
    }
    if (!agree) return kExitVerificationFailure;
    out << format_triangle(reference, seed, format);
    return kExitOk;
  }
  const auto algo = parse_algorithm(cfg.algo);
  if (!algo) throw UsageError("unknown algorithm '" + cfg.algo + "'");
  out << format_triangle(build_triangle(*algo, f0, cfg.m, cfg.order), seed,
                         format);
  return kExitOk;
}

int cmd_oracle(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  require_order(cfg);
  if (cfg.m == 0) throw UsageError("--m must be >= 1 for the oracle");
  const SeedPreset seed = resolve_seed(cfg);
  if (seed.tag == Preset::Custom) {
    throw UsageError("custom seeds have no word model");
  }
  const Format format = resolve_format(cfg);
  if (format == Format::Bfile) throw UsageError("oracle reports are csv or json");

  const auto tri =
      triangle_recurrence(make_seed(seed, cfg.order), cfg.m, cfg.order);
  const std::size_t first = seed.tag == Preset::Ge2 ? 4 : 1;

  nlohmann::ordered_json entries = nlohmann::ordered_json::array();
  std::ostringstream table;
  table << "n,k,engine,oracle,match\n";
  bool all_match = true;
  for (std::size_t n = first; n <= cfg.order; ++n) {
    std::vector<Count> row;
    try {
      row = oracle_row(seed.tag, cfg.m, n, cfg.budget);
    } catch (const EnumerationTooLargeError& e) {
      err << "budget exceeded at n=" << n << " k=1: " << e.what() << '\n';
      return kExitBudget;
    }
    for (std::size_t k = 1; k <= n; ++k) {
      const bool match = row[k - 1] == tri(n, k);
      all_match = all_match && match;
      table << n << ',' << k << ',' << tri(n, k) << ',' << row[k - 1] << ','
            << (match ? "yes" : "no") << '\n';
      entries.push_back({{"n", n},
                         {"k", k},
                         {"engine", to_decimal(tri(n, k))},
                         {"oracle", to_decimal(row[k - 1])},
                         {"match", match}});
    }
  }
  if (format == Format::Json) {
    nlohmann::ordered_json doc;
    doc["seed"] = std::string(preset_name(seed.tag));
    doc["m"] = cfg.m;
    doc["N"] = cfg.order;
    doc["entries"] = std::move(entries);
    doc["all_match"] = all_match;
    out << doc.dump() << '\n';
  } else {
    out << table.str();
  }
  return all_match ? kExitOk : kExitVerificationFailure;
}

int cmd_verify(const RunConfig& cfg, std::ostream& out) {
  std::vector<std::string_view> suites;
  if (cfg.suite.empty()) {
    suites = suite_names();
  } else {
    const auto& known = suite_names();
    if (std::find(known.begin(), known.end(), cfg.suite) == known.end()) {
      throw UsageError("unknown suite '" + cfg.suite + "'");
    }
    suites.push_back(cfg.suite);
  }
  std::optional<std::size_t> bound;
  if (cfg.max != 0) bound = cfg.max;

  bool all_ok = true;
  for (auto name : suites) {
    SuiteResult result;
    try {
      result = run_suite(name, bound, cfg.budget);
    } catch (const EnumerationTooLargeError& e) {
      out << name << ": budget exceeded: " << e.what() << '\n';
      return kExitBudget;
    }
    out << result.name << ": " << result.passed << "/" << result.total << ' '
        << (result.ok() ? "PASS" : "FAIL") << '\n';
    for (const auto& f : result.failures) out << "  failed: " << f << '\n';
    all_ok = all_ok && result.ok();
  }
  return all_ok ? kExitOk : kExitVerificationFailure;
}

void add_seed_options(CLI::App* cmd, RunConfig& cfg) {
  cmd->add_option("--preset", cfg.preset,
                  "ones|fib|odd|natural|ge2|two_three|custom");
  cmd->add_option("--seed", cfg.seed, "comma-separated custom seed values");
  cmd->add_option("--m", cfg.m, "number of invert transforms");
  cmd->add_option("--N", cfg.order, "prefix length / triangle order")
      ->required();
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err) {
  RunConfig cfg;
  CLI::App app{"Generalized composition numbers and restricted words",
               "gencomp"};
  app.require_subcommand(1);

  auto* transform = app.add_subcommand("transform", "print f_m(1..N)");
  add_seed_options(transform, cfg);
  transform->add_option("--format", cfg.format, "json|csv|bfile");

  auto* triangle = app.add_subcommand("triangle", "print c_m(n,k)");
  add_seed_options(triangle, cfg);
  triangle->add_option("--algo", cfg.algo,
                       "recurrence|conv|bell|pascal|all");
  triangle->add_option("--format", cfg.format, "json|csv|bfile");

  auto* oracle = app.add_subcommand("oracle", "compare with word counts");
  add_seed_options(oracle, cfg);
  oracle->add_option("--format", cfg.format, "csv|json");
  oracle->add_option("--budget", cfg.budget, "max words per enumeration");

  auto* verify = app.add_subcommand("verify", "run verification suites");
  verify->add_option("--suite", cfg.suite, "suite name (default: all)");
  verify->add_option("--max", cfg.max, "sweep bound");
  verify->add_option("--budget", cfg.budget, "max words per enumeration");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << '\n' << app.help();
    return kExitUsage;
  }

  try {
    if (*transform) return cmd_transform(cfg, out);
    if (*triangle) return cmd_triangle(cfg, out, err);
    if (*oracle) return cmd_oracle(cfg, out, err);
    return cmd_verify(cfg, out);
  } catch (const EnumerationTooLargeError& e) {
    err << "budget error: " << e.what() << '\n';
    return kExitBudget;
  } catch (const std::invalid_argument& e) {
    // Usage errors, invalid or insufficient seeds.
    err << "usage error: " << e.what() << '\n';
    return kExitUsage;
  }
}

}  // namespace gencomp::cli
