// heckelab: command-line front end. One subcommand per experiment.
#include <CLI11.hpp>

#include <iostream>
#include <map>
#include <string>

#include "heckelab/report.hpp"
#include "heckelab/run.hpp"

int main(int argc, char** argv) {
  using heckelab::Command;
  using heckelab::ExperimentConfig;

  CLI::App app{"Gaussian prime angle statistics"};
  app.set_version_flag("--version", std::string(heckelab::kVersion));
  app.require_subcommand(1);

  ExperimentConfig config;
  const std::map<std::string, heckelab::OutputFormat> formats{
      {"csv", heckelab::OutputFormat::csv}, {"json", heckelab::OutputFormat::json}};

  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--out", config.output_path, "output prefix; .csv/.json is appended");
    sub->add_flag("!--exclude-nonsplit", config.include_nonsplit,
                  "drop the ramified and inert ideals");
  };
  auto add_format = [&](CLI::App* sub) {
    sub->add_option("--format", config.format, "csv or json")
        ->transform(CLI::CheckedTransformer(formats, CLI::ignore_case));
  };

  auto* sieve = app.add_subcommand("sieve", "prime ideals with X < N <= 2X");
  sieve->add_option("--x", config.x, "scale X");
  add_format(sieve);
  add_common(sieve);

  auto* sectors = app.add_subcommand("sectors", "narrow-sector counts over a grid of offsets");
  sectors->add_option("--x", config.x, "scale X");
  sectors->add_option("--rho", config.rho, "sector width (pi/2) X^-rho");
  sectors->add_option("--grid", config.grid_size, "number of grid offsets");
  sectors->add_option("--delta", config.delta_list, "deviation thresholds")->delimiter(',');
  add_common(sectors);

  auto* variance = app.add_subcommand("variance", "number variance of the smoothed count");
  variance->add_option("--x", config.x, "scale X (ignored when --x-list is given)");
  variance->add_option("--x-list", config.x_list, "ascending X values")->delimiter(',');
  variance->add_option("--tau", config.tau_list, "K = X^tau")->delimiter(',');
  variance->add_option("--eps", config.eps, "plateau ramp width of Phi");
  variance->add_option("--grid-factor", config.grid_factor, "grid = factor * k_max");
  variance->add_flag("--dump-sums", config.dump_sums, "also write the character sum tables");
  add_common(variance);

  auto* weyl = app.add_subcommand("weyl", "Weyl sums and discrepancy over X < N <= 2X");
  weyl->add_option("--x", config.x, "scale X");
  weyl->add_option("--kmax", config.k_max, "largest k");
  add_format(weyl);
  add_common(weyl);

  auto* realquad = app.add_subcommand("realquad", "split primes of Q(sqrt 2) and their angles");
  realquad->add_option("--limit", config.limit, "largest p");
  realquad->add_option("--kmax", config.k_max, "largest k in the Weyl report");
  realquad->add_option("--out", config.output_path, "output prefix");

  auto* forbidden = app.add_subcommand("forbidden", "smallest positive angle up to a norm");
  forbidden->add_option("--x", config.x, "norm bound");
  forbidden->add_option("--out", config.output_path, "output prefix");

  const std::map<CLI::App*, Command> commands{
      {sieve, Command::sieve},       {sectors, Command::sectors},
      {variance, Command::variance}, {weyl, Command::weyl},
      {realquad, Command::realquad}, {forbidden, Command::forbidden}};

  try {
    app.parse(argc, argv);
  } catch (const CLI::Success& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return heckelab::kExitConfig;
  }
  for (const auto& [sub, command] : commands)
    if (sub->parsed()) config.command = command;
  return heckelab::run(config, std::cerr);
}
