#include "kpush_cli/run.hpp"

#include <cstdlib>
#include <fstream>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>

#include "kpush/cohomology.hpp"
#include "kpush/g2.hpp"
#include "kpush/random.hpp"
#include "kpush/spaces.hpp"
#include "kpush_cli/expression.hpp"

namespace kpush::cli {

namespace {

using Json = nlohmann::ordered_json;

struct Row {
  std::string label;
  LaurentPolynomial value;
};

std::string render_rows(const std::vector<Row>& rows, Format format, const std::string& label_key) {
  std::string out;
  switch (format) {
    case Format::text:
      for (const auto& r : rows) out += r.label + ": " + r.value.to_string() + "\n";
      return out;
    case Format::json: {
      Json arr = Json::array();
      for (const auto& r : rows) arr.push_back({{label_key, r.label}, {"value", to_json(r.value)}});
      return Json{{"rows", std::move(arr)}}.dump() + "\n";
    }
    case Format::latex:
      for (const auto& r : rows) out += r.label + " & " + to_latex(r.value) + " \\\\\n";
      return out;
  }
  return out;
}

SpaceDescriptor require_space(const RunConfig& config) {
  if (config.space.empty()) throw InvalidArgument("--space is required");
  return SpaceDescriptor::parse(config.space);
}

std::vector<FormulaVariant> selected_variants(const SpaceDescriptor& space, const RunConfig& config) {
  if (config.variant.empty()) return space.variants();
  return {parse_variant(config.variant)};
}

std::string run_pushforward(const RunConfig& config, int& exit_code) {
  const auto space = require_space(config);
  if (config.expression.empty()) throw InvalidArgument("--f is required");
  const auto f = parse_polynomial(config.expression, space.table());
  const FormulaVariant variant = config.variant.empty() ? space.variants().front() : parse_variant(config.variant);
  const auto loc = localization_pushforward(space, f);
  const auto res = residue_pushforward(space, f, variant);
  const bool agree = loc == res;
  if (!agree) exit_code = kMismatch;
  switch (config.format) {
    case Format::json:
      return Json{{"space", space.to_string()},
                  {"variant", to_string(variant)},
                  {"f", to_json(f)},
                  {"localization", to_json(loc)},
                  {"residue", to_json(res)},
                  {"agree", agree}}
                 .dump() +
             "\n";
    case Format::latex:
      return "space: " + space.to_string() + "\nvariant: " + to_string(variant) + "\nf: " + to_latex(f) +
             "\nlocalization: " + to_latex(loc) + "\nresidue: " + to_latex(res) +
             "\nagree: " + (agree ? "true" : "false") + "\n";
    case Format::text:
      break;
  }
  return "space: " + space.to_string() + "\nvariant: " + to_string(variant) + "\nf: " + f.to_string() +
         "\nlocalization: " + loc.to_string() + "\nresidue: " + res.to_string() +
         "\nagree: " + (agree ? "true" : "false") + "\n";
}

std::string run_verify(const RunConfig& config, int& exit_code) {
  const auto space = require_space(config);
  if (config.trials < 1) throw InvalidArgument("--trials must be positive");
  const auto variants = selected_variants(space, config);
  RandomSource rng(config.seed);
  RandomPolyOptions options;
  options.max_exponent = config.max_exponent;
  int agreeing = 0;
  std::string text;
  Json results = Json::array();
  for (int trial = 1; trial <= config.trials; ++trial) {
    const auto f = random_admissible(rng, space, options);
    const auto loc = localization_pushforward(space, f);
    std::vector<std::string> failed;
    for (auto v : variants) {
      if (!(residue_pushforward(space, f, v) == loc)) failed.push_back(to_string(v));
    }
    const bool ok = failed.empty();
    if (ok) ++agreeing;
    std::string status = ok ? "agree" : "MISMATCH";
    for (const auto& v : failed) status += " " + v;
    text += "trial " + std::to_string(trial) + ": " + status + " f = " + f.to_string() + "\n";
    results.push_back({{"trial", trial}, {"f", f.to_string()}, {"agree", ok}, {"failed_variants", failed}});
  }
  if (agreeing != config.trials) exit_code = kMismatch;
  std::string variant_names;
  for (auto v : variants) variant_names += (variant_names.empty() ? "" : ",") + to_string(v);
  if (config.format == Format::json) {
    return Json{{"space", space.to_string()},
                {"variants", variant_names},
                {"seed", config.seed},
                {"trials", config.trials},
                {"max_exponent", config.max_exponent},
                {"results", std::move(results)},
                {"agreeing", agreeing}}
               .dump() +
           "\n";
  }
  return "space: " + space.to_string() + "\nvariants: " + variant_names + "\nseed: " + std::to_string(config.seed) +
         "\ntrials: " + std::to_string(config.trials) + "\n" + text + "result: " + std::to_string(agreeing) + "/" +
         std::to_string(config.trials) + " trials agree\n";
}

std::string run_expand(const RunConfig& config) {
  if (config.expression.empty()) throw InvalidArgument("--f is required");
  const auto p = config.space.empty() ? parse_polynomial(config.expression)
                                      : parse_polynomial(config.expression, SpaceDescriptor::parse(config.space).table());
  return emit(p, config.format) + "\n";
}

std::string run_g2(const RunConfig& config) {
  if (config.action == "table") {
    std::vector<Row> rows;
    for (auto& [p, v] : grothendieck_table()) rows.push_back({p.to_string(), std::move(v)});
    return render_rows(rows, config.format, "partition");
  }
  if (config.action == "matrix") {
    const auto m = intersection_matrix();
    const auto det = bareiss_determinant(m.entries);
    if (config.determinant_only) {
      if (config.format == Format::json) return Json{{"determinant", to_json(det)}}.dump() + "\n";
      return emit(det, config.format) + "\n";
    }
    std::vector<Row> rows;
    for (std::size_t i = 0; i < m.basis.size(); ++i) {
      for (std::size_t j = i; j < m.basis.size(); ++j) {
        rows.push_back({m.basis[i].to_string() + "," + m.basis[j].to_string(), m.entries[i][j]});
      }
    }
    rows.push_back({"det", det});
    return render_rows(rows, config.format, "entry");
  }
  if (config.action == "class") {
    std::vector<Row> rows;
    for (auto& [p, c] : fundamental_class_solve()) rows.push_back({p.to_string(), std::move(c)});
    return render_rows(rows, config.format, "partition");
  }
  throw InvalidArgument("g2 action must be table, matrix or class");
}

std::string run_cohomology(const RunConfig& config) {
  if (config.action != "g2-integrals") throw InvalidArgument("cohomology action must be g2-integrals");
  std::vector<Row> rows;
  for (const auto& p : rectangle_partitions(2, 5)) {
    rows.push_back({p.to_string(), g2_integral(schur_pair(p, cohomology_table()))});
  }
  return render_rows(rows, config.format, "partition");
}

}  // namespace

RunResult run(const RunConfig& config) {
  RunResult result;
  try {
    if (config.command == "pushforward") {
      result.output = run_pushforward(config, result.exit_code);
    } else if (config.command == "verify") {
      result.output = run_verify(config, result.exit_code);
    } else if (config.command == "expand") {
      result.output = run_expand(config);
    } else if (config.command == "g2") {
      result.output = run_g2(config);
    } else if (config.command == "cohomology") {
      result.output = run_cohomology(config);
    } else {
      throw InvalidArgument("unknown command '" + config.command + "'");
    }
  } catch (const SyntaxError& e) {
    return {kUsageError, "", std::string("error: ") + e.what() + "\n"};
  } catch (const NotPolynomial& e) {
    return {kNotPolynomial, "", std::string("error: ") + e.what() + "\n"};
  } catch (const InvariantViolation& e) {
    return {kInternalError, "", std::string("internal error: ") + e.what() + "\n"};
  } catch (const Error& e) {
    // Bad arguments, asymmetric f, inexact division, mixed tables.
    return {kUsageError, "", std::string("error: ") + e.what() + "\n"};
  } catch (const std::exception& e) {
    return {kInternalError, "", std::string("internal error: ") + e.what() + "\n"};
  }
  if (!config.output.empty()) {
    std::ofstream file(config.output, std::ios::binary);
    if (!file) return {kUsageError, "", "error: cannot write " + config.output + "\n"};
    file << result.output;
    result.output.clear();
  }
  return result;
}

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Equivariant push-forwards by localization and iterated residues"};
  app.set_config("--config", "", "key=value file with option defaults");
  // Every config value is a single string; expressions contain spaces and
  // space specs contain commas, so array splitting is disabled.
  app.get_config_formatter_base()->arrayBounds('\x02', '\x03')->arrayDelimiter('\x1f');
  app.require_subcommand(1);

  RunConfig config;
  std::string format;
  app.add_option("--space", config.space, "space: gr:m,n gr2:m,n lg:n ogE:n ogO:n fl:n q:n g2p2 g2b");
  app.add_option("--variant", config.variant, "formula variant: full compact sharp simplified");
  app.add_option("--f", config.expression, "Laurent polynomial expression");
  app.add_option("--seed", config.seed, "random seed for verify");
  app.add_option("--trials", config.trials, "number of random trials for verify");
  app.add_option("--max-exp", config.max_exponent, "exponent bound for random f");
  app.add_option("--format", format, "text, json or latex (default from KPUSH_FORMAT, else text)");
  app.add_option("--output", config.output, "write the result to this file");
  app.add_flag("--det", config.determinant_only, "g2 matrix: print only the determinant");

  auto* pushforward = app.add_subcommand("pushforward", "push-forward of f by both methods");
  auto* verify = app.add_subcommand("verify", "randomized differential campaign");
  auto* expand = app.add_subcommand("expand", "evaluate an expression to canonical form");
  auto* g2 = app.add_subcommand("g2", "G2/P2 tables");
  auto* cohomology = app.add_subcommand("cohomology", "cohomological integrals");
  g2->add_option("action", config.action, "table, matrix or class")->required();
  cohomology->add_option("action", config.action, "g2-integrals")->required();
  for (auto* sub : {pushforward, verify, expand, g2, cohomology}) sub->fallthrough();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kUsageError;
  }
  for (auto* sub : {pushforward, verify, expand, g2, cohomology}) {
    if (sub->parsed()) config.command = sub->get_name();
  }
  try {
    if (format.empty()) {
      const char* env = std::getenv("KPUSH_FORMAT");
      format = env && *env ? env : "text";
    }
    config.format = parse_format(format);
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kUsageError;
  }
  const RunResult result = run(config);
  out << result.output;
  err << result.error;
  return result.exit_code;
}

}  // namespace kpush::cli
