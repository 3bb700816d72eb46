#include <ostream>

#include <CLI11.hpp>

#include "owf/errors.hpp"
#include "owf_cli/commands.hpp"

namespace owf::cli {

namespace {

void add_common(CLI::App& app, Options& o) {
  app.add_option("--config", o.config_path, "configuration file (JSON)");
  app.add_option("--seed", o.seed, "64-bit seed");
  app.add_option("--samples", o.samples, "sample count");
  app.add_option("--radius", o.radius, "window radius");
  app.add_option("--levels", o.levels, "tower levels");
  app.add_option("--depth", o.depth, "word length bound");
  app.add_flag("--json", o.json, "machine-readable report on stdout");
}

LoadedConfig load(const Options& o) {
  return o.config_path ? load_config_file(*o.config_path) : default_config();
}

int emit(const Report& report, const Options& o, std::ostream& out) {
  if (o.json) {
    out << report.to_json().dump(2) << '\n';
  } else {
    out << report.to_text();
  }
  return report.passed() ? kPass : kCheckFailed;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Ornstein-Weiss factor, Timar tower and coinduction toolkit", "owf"};
  app.require_subcommand(1);
  Options o;

  std::string suite;
  auto* verify_cmd = app.add_subcommand("verify", "run a verification suite");
  verify_cmd->add_option("suite", suite, "suite name")->required()->check(CLI::IsMember(suite_names()));
  add_common(*verify_cmd, o);
  verify_cmd->add_option("--count", o.count, "transversal entries / coordinates");

  auto* demo_cmd = app.add_subcommand("factor-demo", "sample the 2 -> 4 symbol factor and test it");
  add_common(*demo_cmd, o);
  demo_cmd->add_option("--bias", o.bias, "probability of a 1 in the input (negative control)");

  auto* kernel_cmd = app.add_subcommand("kernel", "enumerate the kernel group on a ball");
  add_common(*kernel_cmd, o);

  std::string table;
  auto* dump_cmd = app.add_subcommand("dump", "print delta, gamma or the transversal as JSON");
  dump_cmd->add_option("table", table, "table name")
      ->required()
      ->check(CLI::IsMember({"delta", "gamma", "transversal"}));
  add_common(*dump_cmd, o);
  dump_cmd->add_option("--count", o.count, "entries (transversal) or indices n (delta, gamma)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kPass : kUsage;
  }

  try {
    const LoadedConfig config = load(o);
    if (verify_cmd->parsed()) return emit(verify(suite, config, o), o, out);
    if (demo_cmd->parsed()) return emit(factor_demo(config, o), o, out);
    if (kernel_cmd->parsed()) return emit(kernel(config, o), o, out);
    const json rows = dump(table, config, o);
    if (o.json) {
      out << rows.dump() << '\n';
    } else {
      for (const json& row : rows) out << (row.is_string() ? row.get<std::string>() : row.dump()) << '\n';
    }
    return kPass;
  } catch (const UsageError& e) {
    err << "owf: " << e.what() << '\n';
  } catch (const ConfigError& e) {
    err << "owf: config error: " << e.what() << '\n';
  } catch (const ParseError& e) {
    err << "owf: parse error: " << e.what() << '\n';
  } catch (const ResourceGuard& e) {
    err << "owf: " << e.what() << " (raise OWF_MAX_RADIUS to allow it)\n";
  } catch (const Error& e) {
    err << "owf: " << e.what() << '\n';
    return kCheckFailed;
  }
  return kUsage;
}

}  // namespace owf::cli
