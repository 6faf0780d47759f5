#include <grpoisson/cli.hpp>

#include <CLI11.hpp>

#include <iostream>

int main(int argc, char** argv) {
  using namespace grpoisson;
  RunConfig cfg;
  std::string point;
  std::string format = "json";

  CLI::App app{"Exact verification of the standard Poisson structure on Gr(k,n) and its cyclic symmetry"};
  app.add_option("command", cfg.command, "Command to run")->required()->check(CLI::IsMember(command_names()));
  app.add_option("--k", cfg.k, "Subspace dimension k")->required();
  app.add_option("--n", cfg.n, "Ambient dimension n")->required();
  app.add_option("--seed", cfg.seed, "Seed for sampled checks")->capture_default_str();
  app.add_option("--samples", cfg.samples, "Number of sampled points")->capture_default_str();
  app.add_option("--point", point, "Point file (JSON) or inline literal such as '(1;1)'");
  app.add_option("--format", format, "Report format")->check(CLI::IsMember({"json", "text"}))->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }
  if (!point.empty()) cfg.point = point;
  cfg.format = format == "text" ? Format::text : Format::json;

  const RunResult res = run(cfg);
  render(res, cfg.format, std::cout);
  return res.exit_code;
}
