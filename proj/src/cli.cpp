#include "tropseq/cli.hpp"

#include "tropseq/dimension.hpp"
#include "tropseq/io.hpp"
#include "tropseq/tropical.hpp"

#include <CLI11.hpp>

#include <random>
#include <sstream>
#include <stdexcept>

namespace tropseq::cli {

namespace {

using io::json;

/// Input problem detected while preparing a command; maps to exit code 2.
struct InputError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

HolonomicSystem load_system(const RunConfig& cfg) {
  if (cfg.system_path.empty()) throw InputError("--system is required");
  return io::system_from_json(io::read_json_file(cfg.system_path));
}

void require_order_two(const HolonomicSystem& sys, const std::string& command) {
  if (sys.order() != 2) {
    throw InputError("'" + command + "' needs a second-order system, got order " + std::to_string(sys.order()));
  }
}

void require_json_format(const RunConfig& cfg) {
  if (cfg.format != "json") throw InputError("'" + cfg.command + "' only supports --format json");
}

int require_n(const RunConfig& cfg, int lo, int hi) {
  if (!cfg.n) throw InputError("--n is required for '" + cfg.command + "'");
  if (*cfg.n < lo || *cfg.n > hi) {
    throw InputError("--n must lie in [" + std::to_string(lo) + ", " + std::to_string(hi) + "]");
  }
  return *cfg.n;
}

EnumerationOptions enumeration(const RunConfig& cfg) {
  if (cfg.jobs < 1) throw InputError("--jobs must be positive");
  return {true, cfg.jobs};
}

/// Slacks p/q with p in [0, 20] and q in [1, 4], drawn from the raw engine output for
/// byte-identical reports across standard libraries.
std::vector<Rational> random_slacks(std::size_t count, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::vector<Rational> out;
  for (std::size_t i = 0; i < count; ++i) {
    const auto num = static_cast<long>(rng() % 21);
    const auto den = static_cast<long>(rng() % 4 + 1);
    out.push_back(ratio(num, den));
  }
  return out;
}

int cmd_classify(const RunConfig& cfg, std::ostream& out) {
  require_json_format(cfg);
  const auto sys = load_system(cfg);
  require_order_two(sys, cfg.command);
  out << io::to_json(classify(sys)).dump() << '\n';
  return kOk;
}

int cmd_check(const RunConfig& cfg, std::ostream& out) {
  require_json_format(cfg);
  const auto sys = load_system(cfg);
  if (!cfg.sequence_path) throw InputError("--sequence is required for 'check'");
  const auto w = io::sequence_from_json(io::read_json_file(*cfg.sequence_path));
  const auto result = check_sequence(sys, w);
  json report = {{"valid", result.ok}, {"failing_window", nullptr}};
  if (!result.ok) {
    report["failing_window"] = *result.failing_window;
    report["argmin"] = argmin_set(sys, w, *result.failing_window);
  }
  out << report.dump() << '\n';
  return result.ok ? kOk : kValidationFailure;
}

int cmd_witness(const RunConfig& cfg, std::ostream& out) {
  if (cfg.format != "json" && cfg.format != "csv") throw InputError("unknown format " + cfg.format);
  const auto sys = load_system(cfg);
  require_order_two(sys, cfg.command);
  const int n = require_n(cfg, 0, 1'000'000);
  const auto cls = classify(sys);
  const auto& [a, b, c] = std::tie(sys.coeff(0), sys.coeff(1), sys.coeff(2));

  std::size_t expected = 0;
  if (cls.case_id == EntropyCase::Case1) {
    expected = case1_slack_count(n);
  } else if (cls.case_id == EntropyCase::Case2) {
    expected = case2_slack_count(n, cls.j0);
  } else {
    throw InputError("system is in Case3 (entropy 0); no witness family is generated");
  }
  std::vector<Rational> slacks =
      cfg.slacks_path ? io::sequence_from_json(io::read_json_file(*cfg.slacks_path)) : random_slacks(expected, cfg.seed);

  Sequence w;
  if (cls.case_id == EntropyCase::Case1) {
    w = witness_case1(a, b, c, n, Rational(0), slacks);
  } else {
    Sequence prefix;
    if (cfg.prefix_path) {
      prefix = io::sequence_from_json(io::read_json_file(*cfg.prefix_path));
    } else {
      const auto len = static_cast<std::size_t>(4 * cls.j0 + 1);
      prefix.assign(std::min<std::size_t>(len, 2), Rational(0));
      while (prefix.size() < len) prefix = extend_greedy(sys, prefix);
    }
    w = witness_case2(a, b, c, n, prefix, slacks);
  }

  const bool valid = check_sequence(sys, w).ok;
  if (cfg.format == "csv") {
    out << "index,value\n";
    for (std::size_t i = 0; i < w.size(); ++i) out << i << ',' << to_string(w[i]) << '\n';
  } else {
    out << json{{"case", std::string(to_string(cls.case_id))},
                {"N", n},
                {"sequence", io::sequence_to_json(w)},
                {"slacks", io::sequence_to_json(slacks)},
                {"valid", valid}}
               .dump()
        << '\n';
  }
  return valid ? kOk : kValidationFailure;
}

int cmd_dim(const RunConfig& cfg, std::ostream& out) {
  const auto sys = load_system(cfg);
  const int n = require_n(cfg, 0, kMaxEnumerationLength);
  const auto r = dim_WN(sys, n, enumeration(cfg));
  if (cfg.format == "csv") {
    const Rational share = n > 0 ? ratio(r.dim, n) : Rational(0);
    out << "N,dim,ratio_num,ratio_den\n"
        << n << ',' << r.dim << ',' << share.get_num().get_str() << ',' << share.get_den().get_str() << '\n';
  } else if (cfg.format == "json") {
    json report = {{"N", n},
                   {"dim", r.dim},
                   {"pattern", io::to_json(r.pattern)},
                   {"witness", io::sequence_to_json(r.witness)}};
    if (n > 0) report["ratio"] = io::to_json(ratio(r.dim, n));
    out << report.dump() << '\n';
  } else {
    throw InputError("unknown format " + cfg.format);
  }
  return kOk;
}

int cmd_scan(const RunConfig& cfg, std::ostream& out) {
  const auto sys = load_system(cfg);
  if (!cfg.n_min || !cfg.n_max) throw InputError("--n-min and --n-max are required for 'scan'");
  if (*cfg.n_min < 2 || *cfg.n_max < *cfg.n_min || *cfg.n_max > kMaxEnumerationLength) {
    throw InputError("need 2 <= n-min <= n-max <= " + std::to_string(kMaxEnumerationLength));
  }
  const auto report = entropy_scan(sys, *cfg.n_min, *cfg.n_max, enumeration(cfg));
  if (cfg.format == "csv") {
    out << io::scan_to_csv(report);
  } else if (cfg.format == "json") {
    out << io::to_json(report).dump() << '\n';
  } else {
    throw InputError("unknown format " + cfg.format);
  }
  return kOk;
}

int cmd_lemmas(const RunConfig& cfg, std::ostream& out) {
  require_json_format(cfg);
  const auto sys = load_system(cfg);
  require_order_two(sys, cfg.command);
  const int n = require_n(cfg, 0, kMaxEnumerationLength);
  const auto report = lemma_predicates(sys, n, enumeration(cfg));
  out << io::to_json(report).dump() << '\n';
  return report.violations.empty() ? kOk : kValidationFailure;
}

}  // namespace

int run(const RunConfig& config, std::ostream& out, std::ostream& err) {
  try {
    if (config.command == "classify") return cmd_classify(config, out);
    if (config.command == "check") return cmd_check(config, out);
    if (config.command == "witness") return cmd_witness(config, out);
    if (config.command == "dim") return cmd_dim(config, out);
    if (config.command == "scan") return cmd_scan(config, out);
    if (config.command == "lemmas") return cmd_lemmas(config, out);
    err << "error: unknown command '" << config.command << "'\n";
    return kInputError;
  } catch (const InputError& e) {
    err << "error: " << e.what() << '\n';
    return kInputError;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return kInputError;
  } catch (const std::out_of_range& e) {
    err << "error: " << e.what() << '\n';
    return kInputError;
  } catch (const io::json::exception& e) {
    err << "error: " << e.what() << '\n';
    return kInputError;
  } catch (const std::logic_error& e) {
    err << "validation failure: " << e.what() << '\n';
    return kValidationFailure;
  }
}

int main(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Tropical holonomic sequences: classification, witnesses and exact dim(W_N)"};
  app.require_subcommand(1);
  RunConfig cfg;

  const auto common = [&](CLI::App* sub) {
    sub->add_option("--system", cfg.system_path, "HolonomicSystem JSON file")->required();
    sub->add_option("--format", cfg.format, "json or csv")->check(CLI::IsMember({"json", "csv"}));
  };
  const auto jobs = [&](CLI::App* sub) { sub->add_option("--jobs", cfg.jobs, "worker threads")->check(CLI::PositiveNumber); };
  const auto length = [&](CLI::App* sub) { sub->add_option("--n", cfg.n, "sequence length N")->required(); };

  auto* classify_cmd = app.add_subcommand("classify", "entropy case of a second-order system");
  common(classify_cmd);

  auto* check_cmd = app.add_subcommand("check", "verify a sequence against the relation");
  common(check_cmd);
  check_cmd->add_option("--sequence", cfg.sequence_path, "sequence JSON file")->required();

  auto* witness_cmd = app.add_subcommand("witness", "generate a member of the positive-entropy family");
  common(witness_cmd);
  length(witness_cmd);
  witness_cmd->add_option("--seed", cfg.seed, "seed for random slacks");
  witness_cmd->add_option("--slacks", cfg.slacks_path, "slack JSON file");
  witness_cmd->add_option("--prefix", cfg.prefix_path, "Case2 prefix JSON file");

  auto* dim_cmd = app.add_subcommand("dim", "exact dim(W_N)");
  common(dim_cmd);
  length(dim_cmd);
  jobs(dim_cmd);

  auto* scan_cmd = app.add_subcommand("scan", "dim(W_N) over a range of N");
  common(scan_cmd);
  scan_cmd->add_option("--n-min", cfg.n_min)->required();
  scan_cmd->add_option("--n-max", cfg.n_max)->required();
  jobs(scan_cmd);

  auto* lemmas_cmd = app.add_subcommand("lemmas", "check structural claims over all feasible patterns");
  common(lemmas_cmd);
  length(lemmas_cmd);
  jobs(lemmas_cmd);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kInputError;
  }
  cfg.command = app.get_subcommands().front()->get_name();
  return run(cfg, out, err);
}

}  // namespace tropseq::cli
