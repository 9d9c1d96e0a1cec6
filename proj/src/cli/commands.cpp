#include <algorithm>
#include <fstream>

#include <CLI11.hpp>

#include "cfgpoly/cli.hpp"
#include "cfgpoly/poly_json.hpp"

namespace cfgpoly::cli {

namespace {

using nlohmann::ordered_json;

// Writes to --output when given, else to the stream.
class Sink {
 public:
  Sink(const RunConfig& config, std::ostream& fallback) : out_(&fallback) {
    if (config.output) {
      file_.open(*config.output, std::ios::binary);
      if (!file_) throw usage_error("cannot open output file " + *config.output);
      out_ = &file_;
    }
  }
  std::ostream& stream() { return *out_; }

 private:
  std::ofstream file_;
  std::ostream* out_;
};

unsigned required_n(const RunConfig& config) {
  if (!config.n) throw usage_error("--n is required");
  return *config.n;
}

}  // namespace

int cmd_poly(const RunConfig& config, std::ostream& out) {
  const unsigned n = required_n(config);
  Polynomial p;
  if (auto uni = parse_univariate_kind(config.family)) {
    if (n == 0) throw usage_error(std::string(to_string(*uni)) + " needs n >= 1");
    check_bound(config, to_string(*uni), n);
    p = univariate_polynomial(*uni, n, config.via);
  } else if (auto kind = parse_grammar_kind(config.family)) {
    check_bound(config, to_string(*kind), n);
    p = family_polynomial(*kind, n, config.via);
  } else {
    throw usage_error("unknown kind: " + config.family);
  }

  const Format format = config.format.value_or(Format::json);
  if (format == Format::csv) throw usage_error("poly supports json and text output");
  Sink sink(config, out);
  if (format == Format::json)
    sink.stream() << to_json(p).dump() << '\n';
  else
    sink.stream() << to_string(p) << '\n';
  return kExitPass;
}

int cmd_enumerate(const RunConfig& config, std::ostream& out) {
  const auto family = parse_structure_family(config.family);
  if (!family) throw usage_error("unknown family: " + config.family);
  const unsigned n = required_n(config);
  std::uint32_t r = 0;
  if (*family == StructureFamily::r_stirling) {
    if (!config.r || *config.r == 0) throw usage_error("r_stirling needs --r >= 1");
    r = *config.r;
    if (structure_count(*family, n, r) > 5000000) throw usage_error("too many r-Stirling words; lower n or r");
  }
  check_bound(config, to_string(*family), n);

  Sink sink(config, out);
  std::ostream& os = sink.stream();

  if (config.stats.empty()) {
    const auto words = enumerate(*family, n, r);
    switch (config.format.value_or(Format::text)) {
      case Format::text:
        for (const auto& w : words) os << w.to_string() << '\n';
        break;
      case Format::csv:
        os << "word\n";
        for (const auto& w : words) os << w.to_string() << '\n';
        break;
      case Format::json: {
        ordered_json arr = ordered_json::array();
        for (const auto& w : words) arr.push_back(w.to_string());
        os << arr.dump() << '\n';
        break;
      }
    }
    return kExitPass;
  }

  std::vector<Statistic> stats;
  for (const std::string& name : config.stats) {
    auto s = parse_statistic(name);
    if (!s) throw usage_error("unknown statistic: " + name);
    stats.push_back(*s);
  }
  std::map<std::vector<std::uint32_t>, std::uint64_t> table;
  try {
    table = coefficient_table(*family, n, stats, r);
  } catch (const std::invalid_argument& e) {
    throw usage_error(e.what());
  }

  switch (config.format.value_or(Format::csv)) {
    case Format::csv:
      for (const std::string& name : config.stats) os << name << ',';
      os << "count\n";
      for (const auto& [key, count] : table) {
        for (std::uint32_t v : key) os << v << ',';
        os << count << '\n';
      }
      break;
    case Format::text:
      for (const auto& [key, count] : table) {
        for (std::size_t k = 0; k < key.size(); ++k) os << config.stats[k] << '=' << key[k] << ' ';
        os << "count=" << count << '\n';
      }
      break;
    case Format::json: {
      ordered_json rows = ordered_json::array();
      for (const auto& [key, count] : table) {
        ordered_json row = ordered_json::object();
        for (std::size_t k = 0; k < key.size(); ++k) row[config.stats[k]] = key[k];
        row["count"] = count;
        rows.push_back(std::move(row));
      }
      ordered_json doc{{"family", to_string(*family)}, {"n", n}};
      if (r != 0) doc["r"] = r;
      doc["stats"] = config.stats;
      doc["rows"] = std::move(rows);
      os << doc.dump() << '\n';
      break;
    }
  }
  return kExitPass;
}

int cmd_verify(const RunConfig& config, std::ostream& out) {
  if (config.checks.empty()) throw usage_error("--check is required");
  for (const std::string& name : config.checks)
    if (std::find(check_names().begin(), check_names().end(), name) == check_names().end())
      throw usage_error("unknown check: " + name);

  const Format format = config.format.value_or(Format::json);
  if (format == Format::csv) throw usage_error("verify supports json and text output");

  std::vector<CheckResult> results;
  for (const std::string& name : config.checks) results.push_back(run_check(name, config));
  bool all = true;
  for (const CheckResult& r : results) all = all && r.passed;

  Sink sink(config, out);
  std::ostream& os = sink.stream();
  if (format == Format::json) {
    ordered_json doc;
    doc["status"] = all ? "pass" : "fail";
    doc["checks"] = ordered_json::array();
    for (const CheckResult& r : results) {
      ordered_json entry{{"name", r.name}, {"status", r.passed ? "pass" : "fail"}, {"details", r.details}};
      if (config.timings) entry["seconds"] = r.seconds;
      doc["checks"].push_back(std::move(entry));
    }
    os << doc.dump(2) << '\n';
  } else {
    for (const CheckResult& r : results) {
      os << (r.passed ? "PASS " : "FAIL ") << r.name;
      if (config.timings) os << " (" << r.seconds << " s)";
      os << '\n';
    }
  }
  return all ? kExitPass : kExitFail;
}

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  RunConfig config;
  config.seed = default_seed();
  std::string format, via = "grammar";

  CLI::App app{"Grammar-generated combinatorial polynomials with exact verification.", "cfgpoly"};
  app.require_subcommand(1);
  app.set_help_all_flag("--help-all", "Show help for all subcommands");

  auto* poly = app.add_subcommand("poly", "Compute a family polynomial");
  poly->add_option("--kind", config.family, "Grammar kind (e.g. stirling2-multi) or An, Bn, Cn, Mn, Sn, Tn")
      ->required();
  poly->add_option("--n", config.n, "Order")->required();
  poly->add_option("--via", via, "grammar or enumeration")->check(CLI::IsMember({"grammar", "enumeration"}));
  poly->add_option("--format", format, "json or text");
  poly->add_option("--output", config.output, "Write to this file instead of stdout");
  poly->add_option("--max-n", config.max_n, "Override the bound on n");

  auto* enumerate_cmd = app.add_subcommand("enumerate", "List structures or tabulate statistics");
  enumerate_cmd->add_option("--family", config.family, "partition, permutation, stirling, r-stirling, legendre, "
                                                       "marked-stirling")
      ->required();
  enumerate_cmd->add_option("--n", config.n, "Order")->required();
  enumerate_cmd->add_option("--r", config.r, "Copies per value for r-stirling");
  enumerate_cmd->add_option("--stats", config.stats, "Statistics: asc, des, plat, barred_des, blocks")
      ->delimiter(',');
  enumerate_cmd->add_option("--format", format, "text, csv or json");
  enumerate_cmd->add_option("--output", config.output, "Write to this file instead of stdout");
  enumerate_cmd->add_option("--max-n", config.max_n, "Override the bound on n");

  auto* verify = app.add_subcommand("verify", "Run verification checks");
  std::string names;
  for (const auto& name : check_names()) names += (names.empty() ? "" : ", ") + name;
  verify->add_option("--check", config.checks, "One or more of: " + names)->required()->delimiter(',');
  verify->add_option("--family", config.family, "Restrict the check to one family");
  verify->add_option("--n", config.n, "Upper end of the order range");
  verify->add_option("--r", config.r, "Copies per value for r-stirling checks");
  verify->add_option("--samples", config.samples, "Random points per falsification run");
  verify->add_option("--seed", config.seed, "Sampling seed (default: CFGPOLY_SEED or 42)");
  verify->add_option("--re-bound", config.box.re_bound, "Bound on sampled real parts");
  verify->add_option("--im-bound", config.box.im_bound, "Bound on sampled imaginary parts");
  verify->add_option("--max-denominator", config.box.max_denominator, "Largest sampled denominator");
  verify->add_flag("--timings", config.timings, "Include wall-clock seconds per check");
  verify->add_option("--format", format, "json or text");
  verify->add_option("--output", config.output, "Write to this file instead of stdout");
  verify->add_option("--max-n", config.max_n, "Override the bound on n");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitPass;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitPass;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }

  try {
    if (!format.empty()) {
      config.format = parse_format(format);
      if (!config.format) throw usage_error("unknown format: " + format);
    }
    config.via = via == "enumeration" ? Via::enumeration : Via::grammar;
    if (config.box.max_denominator < 1 || config.box.im_bound < 1 || config.box.re_bound < 0)
      throw usage_error("sampling bounds must be positive");
    if (*poly) {
      config.command = "poly";
      return cmd_poly(config, out);
    }
    if (*enumerate_cmd) {
      config.command = "enumerate";
      return cmd_enumerate(config, out);
    }
    config.command = "verify";
    return cmd_verify(config, out);
  } catch (const usage_error& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }
}

}  // namespace cfgpoly::cli
