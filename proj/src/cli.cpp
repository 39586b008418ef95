#include "alphatree/cli.hpp"

#include <algorithm>
#include <array>
#include <fstream>
#include <iomanip>
#include <iterator>
#include <sstream>

#include <CLI11.hpp>

#include "alphatree/bench.hpp"
#include "alphatree/bst.hpp"
#include "alphatree/codegen.hpp"
#include "alphatree/errors.hpp"
#include "alphatree/json_io.hpp"
#include "alphatree/oracle.hpp"
#include "alphatree/treebuild.hpp"

namespace alphatree {

namespace {

constexpr double kBoundTolerance = 1e-9;
constexpr std::uint64_t kDefaultSeed = 20240229;

const std::vector<std::string> kSubcommands = {"encode", "bst", "bounds", "check-lengths",
                                               "tree-from-lengths", "oracle", "bench"};
const std::vector<std::string> kOracleModes = {"alphabetic", "bst", "feasible", "dyadic-fillers"};

std::vector<std::size_t> default_bench_sizes() {
  std::vector<std::size_t> sizes;
  for (std::size_t e = 10; e <= 16; ++e) sizes.push_back(std::size_t{1} << e);
  return sizes;
}

std::string read_input(const RunConfig& config, std::istream& in) {
  if (config.inline_json) return *config.inline_json;
  if (config.input_path) {
    std::ifstream file(*config.input_path);
    if (!file) throw InvalidInput("cannot open input file '" + *config.input_path + "'");
    return {std::istreambuf_iterator<char>(file), std::istreambuf_iterator<char>()};
  }
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

const Json& field_or_self(const Json& doc, std::initializer_list<const char*> keys) {
  if (doc.is_object()) {
    for (const char* key : keys) {
      if (doc.contains(key)) return doc[key];
    }
    std::string names;
    for (const char* key : keys) names += std::string(names.empty() ? "" : ", ") + "'" + key + "'";
    throw InvalidInput("input object needs one of " + names);
  }
  return doc;
}

bool is_search_input(const Json& doc) {
  return doc.is_object() && (doc.contains("p") || doc.contains("sigma"));
}

SearchDist search_from_json(const Json& doc, bool allow_float) {
  if (doc.is_object() && doc.contains("p")) {
    if (!doc.contains("q")) throw InvalidInput("search input needs both 'p' and 'q'");
    const Json& p = doc["p"];
    const Json& q = doc["q"];
    if (!p.is_array() || !q.is_array()) throw InvalidInput("'p' and 'q' must be arrays");
    // Parsed as one sequence so float input is rescaled jointly.
    Json joined = p;
    for (const auto& v : q) joined.push_back(v);
    std::vector<Rational> all = probabilities_from_json(joined, allow_float).values;
    const auto split = all.begin() + static_cast<std::ptrdiff_t>(p.size());
    return SearchDist(std::vector<Rational>(all.begin(), split), std::vector<Rational>(split, all.end()));
  }
  const Json& sigma = field_or_self(doc, {"sigma"});
  return SearchDist::from_interleaved(probabilities_from_json(sigma, allow_float).values);
}

Json rationals_to_json(std::span<const Rational> values) {
  Json j = Json::array();
  for (const auto& v : values) j.push_back(rational_to_json(v));
  return j;
}

std::string format_double(double x) {
  std::ostringstream os;
  os << std::setprecision(12) << x;
  return os.str();
}

std::string render_json(const Json& j) { return j.dump(2) + "\n"; }

// Throws ContractViolation if the cost misses any applicable bound the
// construction guarantees.
void require_within(const Rational& cost, double bound, const std::string& id) {
  if (to_double(cost) > bound + kBoundTolerance) {
    throw ContractViolation("cost " + to_string(cost) + " exceeds the '" + id + "' bound " +
                            format_double(bound));
  }
}

std::string run_encode(const RunConfig& config, const Json& doc, OutputFormat format) {
  ParsedProbabilities parsed =
      probabilities_from_json(field_or_self(doc, {"probabilities", "phi"}), config.float_input);
  const ProbDist phi(parsed.values);
  const BoundsReport report = alphabetic_bounds(phi);

  CodeTree tree;
  AlphabeticCode code;
  Rational cost = 0;
  std::string route = "single";
  bool zero_tails = false;
  std::string guarantee_id;
  double guarantee = 0;
  if (phi.size() == 1) {
    tree.set_root(tree.add_leaf(0));
    code.codewords = {""};
  } else {
    AlphabeticBuild build = build_alphabetic(phi);
    require_within(build.cost, build.bound, build.bound_id);
    tree = std::move(build.tree);
    code = std::move(build.code);
    cost = build.cost;
    route = std::string(route_name(build.route));
    zero_tails = build.zero_tails;
    guarantee_id = build.bound_id;
    guarantee = build.bound;
  }

  if (format != OutputFormat::kJson) {
    std::ostringstream os;
    os << "symbol  probability  codeword\n";
    for (std::size_t i = 0; i < phi.size(); ++i) {
      os << std::left << std::setw(8) << (i + 1) << std::setw(13) << to_string(phi[i])
         << (code.codewords[i].empty() ? "(empty)" : code.codewords[i]) << "\n";
    }
    os << "cost: " << to_string(cost) << " (" << format_double(to_double(cost)) << ")\n";
    os << "route: " << route << (zero_tails ? " + zero tails" : "") << "\n";
    if (!guarantee_id.empty()) os << "guarantee: " << guarantee_id << " " << format_double(guarantee) << "\n";
    if (parsed.normalized) os << "note: float input rescaled to sum to 1\n";
    os << "\n" << render_report(report, cost);
    return os.str();
  }
  Json out;
  out["probabilities"] = rationals_to_json(phi.values());
  out["normalized"] = parsed.normalized;
  out["route"] = route;
  out["zero_tails"] = zero_tails;
  out["codewords"] = code.codewords;
  out["cost"] = rational_to_json(cost);
  out["cost_value"] = to_double(cost);
  if (!guarantee_id.empty()) out["guarantee"] = Json{{"id", guarantee_id}, {"value", guarantee}};
  out["tree"] = tree_to_json(tree);
  Json bounds = bounds_to_json(report);
  out["entropy"] = bounds["entropy"];
  if (bounds.contains("entropy_exact")) out["entropy_exact"] = bounds["entropy_exact"];
  out["bounds"] = bounds["bounds"];
  return render_json(out);
}

std::string run_bst(const RunConfig& config, const Json& doc, OutputFormat format) {
  const SearchDist sigma = search_from_json(doc, config.float_input);
  const BstBuild build = build_bst(sigma);
  const BoundsReport report = bst_bounds(sigma);
  require_within(build.cost, report.value("fold-corrected"), "fold-corrected");
  if (format != OutputFormat::kJson) {
    std::ostringstream os;
    os << "n: " << sigma.n() << "\n";
    os << "cost: " << to_string(build.cost) << " (" << format_double(to_double(build.cost)) << ")\n";
    os << "alphabetic cost before folding: " << to_string(build.alphabetic_cost) << "\n";
    os << "tree: " << search_tree_to_json(build.tree).dump() << "\n\n";
    os << render_report(report, build.cost);
    return os.str();
  }
  Json out;
  out["n"] = sigma.n();
  out["p"] = rationals_to_json(sigma.ps());
  out["q"] = rationals_to_json(sigma.qs());
  out["cost"] = rational_to_json(build.cost);
  out["cost_value"] = to_double(build.cost);
  out["alphabetic_cost"] = rational_to_json(build.alphabetic_cost);
  out["tree"] = search_tree_to_json(build.tree);
  Json bounds = bounds_to_json(report);
  out["entropy"] = bounds["entropy"];
  out["bounds"] = bounds["bounds"];
  return render_json(out);
}

std::string run_bounds(const RunConfig& config, const Json& doc, OutputFormat format) {
  BoundsReport report;
  if (is_search_input(doc)) {
    report = bst_bounds(search_from_json(doc, config.float_input));
  } else {
    ParsedProbabilities parsed =
        probabilities_from_json(field_or_self(doc, {"probabilities", "phi"}), config.float_input);
    report = alphabetic_bounds(ProbDist(parsed.values));
  }
  if (format != OutputFormat::kJson) return render_report(report);
  return render_json(bounds_to_json(report));
}

std::string run_check_lengths(const Json& doc, OutputFormat format) {
  const LengthList lengths = lengths_from_json(field_or_self(doc, {"lengths"}));
  const SumSequence seq = sum_sequence(lengths);
  const bool feasible = seq.last() < DyadicFraction(BigNat(1), 0);
  if (format != OutputFormat::kJson) {
    std::ostringstream os;
    os << "verdict: " << (feasible ? "feasible" : "infeasible") << "\n";
    os << "final sum: " << to_binary_string(seq.last()) << " (" << to_string(seq.last().to_rational()) << ")\n";
    os << "partial sums:";
    for (const auto& s : seq.sums) os << " " << to_binary_string(s);
    os << "\n";
    if (feasible) {
      os << "codewords:";
      for (const auto& w : nakatsu_code(lengths).codewords) os << " " << (w.empty() ? "(empty)" : w);
      os << "\n";
    }
    return os.str();
  }
  Json out;
  out["lengths"] = lengths_to_json(lengths);
  out["feasible"] = feasible;
  out["verdict"] = feasible ? "feasible" : "infeasible";
  out["final_sum"] = to_binary_string(seq.last());
  out["final_sum_exact"] = rational_to_json(seq.last().to_rational());
  Json sums = Json::array();
  for (const auto& s : seq.sums) sums.push_back(to_binary_string(s));
  out["partial_sums"] = sums;
  if (feasible) out["codewords"] = nakatsu_code(lengths).codewords;
  return render_json(out);
}

std::string run_tree_from_lengths(const Json& doc, OutputFormat format) {
  const LengthList lengths = lengths_from_json(field_or_self(doc, {"lengths"}));
  ProbeCounter counter;
  const CodeTree tree = construct_tree(lengths, &counter);
  const AlphabeticCode code = tree.codewords();
  const auto depths = tree.depths();
  if (format != OutputFormat::kJson) {
    std::ostringstream os;
    os << "symbol  length  depth  codeword\n";
    for (std::size_t i = 0; i < lengths.size(); ++i) {
      os << std::left << std::setw(8) << (i + 1) << std::setw(8) << lengths[i] << std::setw(7)
         << depths[i] << (code.codewords[i].empty() ? "(empty)" : code.codewords[i]) << "\n";
    }
    os << "probes: " << counter.probes << " over " << counter.splits << " splits\n";
    return os.str();
  }
  Json out;
  out["lengths"] = lengths_to_json(lengths);
  out["codewords"] = code.codewords;
  out["depths"] = depths;
  out["tree"] = tree_to_json(tree);
  out["probes"] = counter.probes;
  out["splits"] = counter.splits;
  return render_json(out);
}

std::string run_oracle(const RunConfig& config, const Json& doc, OutputFormat format) {
  Json out;
  out["mode"] = config.oracle_mode;
  std::ostringstream table;
  if (config.oracle_mode == "alphabetic") {
    ParsedProbabilities parsed =
        probabilities_from_json(field_or_self(doc, {"probabilities", "phi"}), config.float_input);
    const ProbDist phi(parsed.values);
    AlphabeticOptimum opt = optimal_alphabetic_dp(phi);
    out["cost"] = rational_to_json(opt.cost);
    out["cost_value"] = to_double(opt.cost);
    out["codewords"] = opt.tree.codewords().codewords;
    out["tree"] = tree_to_json(opt.tree);
    table << "optimal alphabetic cost: " << to_string(opt.cost) << " (" << format_double(to_double(opt.cost))
          << ")\n";
  } else if (config.oracle_mode == "bst") {
    const SearchDist sigma = search_from_json(doc, config.float_input);
    BstOptimum opt = optimal_bst_dp(sigma, config.fast_bst_dp);
    out["cost"] = rational_to_json(opt.cost);
    out["cost_value"] = to_double(opt.cost);
    out["tree"] = search_tree_to_json(opt.tree);
    table << "optimal search tree cost: " << to_string(opt.cost) << " ("
          << format_double(to_double(opt.cost)) << ")\n";
  } else if (config.oracle_mode == "feasible") {
    const LengthList lengths = lengths_from_json(field_or_self(doc, {"lengths"}));
    const bool feasible = feasible_by_enumeration(lengths);
    out["lengths"] = lengths_to_json(lengths);
    out["feasible"] = feasible;
    table << "enumeration verdict: " << (feasible ? "feasible" : "infeasible") << "\n";
  } else {
    ParsedProbabilities parsed =
        probabilities_from_json(field_or_self(doc, {"probabilities", "phi"}), config.float_input);
    const ProbDist phi(parsed.values);
    Length x_max = 0;
    if (config.x_max) {
      x_max = *config.x_max;
    } else {
      // One past the longest neighbour length.
      for (const auto& p : phi.values()) {
        if (p > 0) x_max = std::max<Length>(x_max, static_cast<Length>(ceil_neg_log2(p) + 2));
      }
    }
    const bool holds = dyadic_fillers_infeasible(phi, x_max);
    out["x_max"] = x_max;
    out["no_code_exists"] = holds;
    table << "every filler assignment up to " << x_max << " infeasible: " << (holds ? "yes" : "no")
          << "\n";
  }
  return format == OutputFormat::kJson ? render_json(out) : table.str();
}

std::string run_bench(const RunConfig& config, OutputFormat format) {
  const std::vector<std::size_t> sizes =
      config.bench_sizes.empty() ? default_bench_sizes() : config.bench_sizes;
  const auto samples = probe_benchmark(sizes, config.seed);
  const double slope = fit_exponent(samples);
  if (format == OutputFormat::kJson) {
    Json out;
    out["seed"] = config.seed;
    out["samples"] = Json::array();
    for (const auto& s : samples) {
      out["samples"].push_back(
          Json{{"m", s.m}, {"probes", s.probes}, {"splits", s.splits}, {"wall_ms", s.wall_ms}});
    }
    out["probe_slope"] = slope;
    return render_json(out);
  }
  std::ostringstream os;
  os << "m,probes,splits,wall_ms\n";
  for (const auto& s : samples) {
    os << s.m << "," << s.probes << "," << s.splits << "," << std::fixed << std::setprecision(3)
       << s.wall_ms << "\n";
    os.unsetf(std::ios::floatfield);
  }
  os << "# probe_slope," << std::setprecision(6) << slope << "\n";
  return os.str();
}

}  // namespace

void validate(const RunConfig& config) {
  if (std::find(kSubcommands.begin(), kSubcommands.end(), config.subcommand) == kSubcommands.end()) {
    throw InvalidInput("unknown subcommand '" + config.subcommand + "'");
  }
  if (std::find(kOracleModes.begin(), kOracleModes.end(), config.oracle_mode) == kOracleModes.end()) {
    throw InvalidInput("unknown oracle mode '" + config.oracle_mode + "'");
  }
  for (std::size_t i = 0; i < config.bench_sizes.size(); ++i) {
    if (config.bench_sizes[i] < 2) throw InvalidInput("bench sizes must be at least 2");
    if (i > 0 && config.bench_sizes[i] <= config.bench_sizes[i - 1]) {
      throw InvalidInput("bench sizes must be strictly increasing");
    }
  }
  if (config.x_max && *config.x_max == 0) throw InvalidInput("--x-max must be positive");
}

RunResult run(const RunConfig& config, std::istream& in) {
  RunResult result;
  try {
    validate(config);
    const OutputFormat format = config.format.value_or(
        config.subcommand == "bench" ? OutputFormat::kCsv : OutputFormat::kJson);
    if (config.subcommand == "bench") {
      result.out = run_bench(config, format);
      return result;
    }
    const std::string text = read_input(config, in);
    const Json doc = Json::parse(text);
    if (config.subcommand == "encode") {
      result.out = run_encode(config, doc, format);
    } else if (config.subcommand == "bst") {
      result.out = run_bst(config, doc, format);
    } else if (config.subcommand == "bounds") {
      result.out = run_bounds(config, doc, format);
    } else if (config.subcommand == "check-lengths") {
      result.out = run_check_lengths(doc, format);
    } else if (config.subcommand == "tree-from-lengths") {
      result.out = run_tree_from_lengths(doc, format);
    } else {
      result.out = run_oracle(config, doc, format);
    }
  } catch (const InvalidInput& e) {
    result = {kExitInvalidInput, "", std::string("error: ") + e.what() + "\n"};
  } catch (const Json::exception& e) {
    result = {kExitInvalidInput, "", std::string("error: malformed JSON input: ") + e.what() + "\n"};
  } catch (const ContractViolation& e) {
    result = {kExitContractViolation, "", std::string("internal error: ") + e.what() + "\n"};
  } catch (const std::exception& e) {
    result = {kExitContractViolation, "", std::string("internal error: ") + e.what() + "\n"};
  }
  return result;
}

std::string render_report(const BoundsReport& report, const std::optional<Rational>& cost) {
  std::vector<std::array<std::string, 6>> rows;
  rows.push_back({"bound", "formula", "value", "applicable", "satisfied", "note"});
  rows.push_back({"entropy", "H", format_double(report.entropy), "yes", "-", ""});
  for (const auto& e : report.entries) {
    std::string satisfied = "-";
    if (!e.holds) {
      satisfied = "INVALID";
    } else if (cost && e.applicable && e.upper_bound) {
      satisfied = to_double(*cost) <= e.value + kBoundTolerance ? "yes" : "NO";
    }
    rows.push_back({e.id, e.label, e.applicable ? format_double(e.value) : "-", e.applicable ? "yes" : "no",
                    satisfied, e.note});
  }
  std::array<std::size_t, 6> width{};
  for (const auto& row : rows) {
    for (std::size_t c = 0; c < row.size(); ++c) width[c] = std::max(width[c], row[c].size());
  }
  std::ostringstream os;
  for (const auto& row : rows) {
    std::string line;
    for (std::size_t c = 0; c < row.size(); ++c) {
      line += row[c];
      if (c + 1 < row.size()) line += std::string(width[c] - row[c].size() + 2, ' ');
    }
    while (!line.empty() && line.back() == ' ') line.pop_back();
    os << line << "\n";
  }
  return os.str();
}

std::variant<RunConfig, RunResult> parse_command_line(int argc, const char* const* argv) {
  CLI::App app{"Alphabetic codes and binary search trees from codeword lengths"};
  app.require_subcommand(1);
  app.fallthrough();

  RunConfig config;
  config.seed = seed_from_env(kDefaultSeed);
  std::string format;
  std::string input_path;
  std::string inline_json;
  std::vector<std::size_t> sizes;
  long long x_max = 0;

  app.add_option("--json", inline_json, "Input JSON given inline");
  app.add_option("-i,--input", input_path, "Input JSON file (default: stdin)");
  app.add_option("--format", format, "Output format")->check(CLI::IsMember({"json", "table", "csv"}));
  app.add_flag("--float", config.float_input,
               "Accept floating-point probabilities, rescaled if within 1e-12 of summing to 1");

  app.add_subcommand("encode", "Build an alphabetic code for a distribution");
  app.add_subcommand("bst", "Build a binary search tree for {\"p\": [...], \"q\": [...]}");
  app.add_subcommand("bounds", "Evaluate the bound table for a distribution or search distribution");
  app.add_subcommand("check-lengths", "Decide whether codeword lengths admit an alphabetic code");
  app.add_subcommand("tree-from-lengths", "Build the code tree for feasible lengths");
  auto* oracle = app.add_subcommand("oracle", "Brute-force reference computations");
  oracle->add_option("--mode", config.oracle_mode, "alphabetic | bst | feasible | dyadic-fillers")
      ->check(CLI::IsMember(kOracleModes));
  oracle->add_option("--x-max", x_max, "Largest filler length tried in dyadic-fillers mode")
      ->check(CLI::PositiveNumber);
  oracle->add_flag("--fast-bst-dp", config.fast_bst_dp, "Restrict BST roots to the monotone range");
  auto* bench = app.add_subcommand("bench", "Probe counts of the split search over growing sizes");
  bench->add_option("--sizes", sizes, "Strictly increasing sizes (default 2^10..2^16)");
  bench->add_option("--seed", config.seed, "Random seed (default: ALPHATREE_SEED or a fixed value)");

  std::ostringstream out;
  std::ostringstream err;
  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int status = app.exit(e, out, err);
    return RunResult{status == 0 ? kExitOk : kExitInvalidInput, out.str(), err.str()};
  }

  config.subcommand = app.get_subcommands().front()->get_name();
  if (!inline_json.empty()) config.inline_json = inline_json;
  if (!input_path.empty()) config.input_path = input_path;
  if (format == "json") config.format = OutputFormat::kJson;
  if (format == "table") config.format = OutputFormat::kTable;
  if (format == "csv") config.format = OutputFormat::kCsv;
  config.bench_sizes = sizes;
  if (x_max > 0) config.x_max = static_cast<Length>(x_max);
  return config;
}

}  // namespace alphatree
