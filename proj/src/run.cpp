#include "heckelab/run.hpp"

#include <cmath>
#include <fstream>
#include <map>
#include <ostream>

#include "heckelab/characters.hpp"
#include "heckelab/errors.hpp"
#include "heckelab/gaussian.hpp"
#include "heckelab/ideal_cache.hpp"
#include "heckelab/real_quadratic.hpp"
#include "heckelab/report.hpp"
#include "heckelab/sectors.hpp"
#include "heckelab/smoothed_variance.hpp"

namespace heckelab {

std::string to_string(Command c) {
  switch (c) {
    case Command::sieve:
      return "sieve";
    case Command::sectors:
      return "sectors";
    case Command::variance:
      return "variance";
    case Command::weyl:
      return "weyl";
    case Command::realquad:
      return "realquad";
    case Command::forbidden:
      return "forbidden";
  }
  return "?";
}

namespace {

constexpr double kMaxX = 1e9;

nlohmann::json config_json(const ExperimentConfig& c) {
  nlohmann::json j = {{"include_nonsplit", c.include_nonsplit}};
  switch (c.command) {
    case Command::sieve:
    case Command::weyl:
      j["x"] = c.x;
      if (c.command == Command::weyl) j["k_max"] = c.k_max;
      break;
    case Command::forbidden:
      j["x"] = c.x;
      break;
    case Command::sectors:
      j["x"] = c.x;
      j["rho"] = c.rho;
      j["grid"] = c.grid_size;
      j["delta"] = c.delta_list;
      break;
    case Command::variance:
      j["x_list"] = c.x_list.empty() ? std::vector<double>{c.x} : c.x_list;
      j["tau"] = c.tau_list;
      j["eps"] = c.eps;
      j["grid_factor"] = c.grid_factor;
      break;
    case Command::realquad:
      j = {{"limit", c.limit}, {"k_max", c.k_max}};
      break;
  }
  return j;
}

std::ofstream open_output(const ExperimentConfig& c, const char* ext) {
  const std::string base = c.output_path.empty() ? to_string(c.command) : c.output_path;
  std::ofstream out(base + ext, std::ios::binary);
  if (!out) throw BadInput("cannot open output file " + base + ext);
  return out;
}

EnumerationOptions enumeration(const ExperimentConfig& c) {
  return EnumerationOptions{c.include_nonsplit};
}

std::int64_t floor_norm(double x) { return static_cast<std::int64_t>(std::floor(x)); }

void run_sieve(const ExperimentConfig& c) {
  const auto lo = floor_norm(c.x);
  const auto hi = floor_norm(2.0 * c.x);
  const auto ideals = enumerate_prime_ideals(lo, hi, enumeration(c));
  if (c.format == OutputFormat::csv) {
    auto out = open_output(c, ".csv");
    write_csv_header(out, "sieve",
                     {{"norm_min", std::to_string(lo)},
                      {"norm_max", std::to_string(hi)},
                      {"format_version", std::to_string(kIdealCacheFormatVersion)}});
    write_ideal_csv(out, ideals);
    return;
  }
  std::map<std::string, std::int64_t> by_type;
  for (const auto& g : ideals) ++by_type[std::string(to_string(g.splitting))];
  auto out = open_output(c, ".json");
  write_json(out, json_envelope("sieve", config_json(c),
                                {{"norm_min", lo},
                                 {"norm_max", hi},
                                 {"ideal_count", ideals.size()},
                                 {"by_splitting", by_type}}));
}

void run_sectors(const ExperimentConfig& c) {
  const auto report = sector_scan(c.x, c.rho, c.grid_size, c.delta_list, enumeration(c));
  {
    auto out = open_output(c, ".csv");
    write_csv_header(out, "sectors",
                     {{"X", format_double(c.x)},
                      {"rho", format_double(c.rho)},
                      {"gamma", format_double(report.gamma)},
                      {"grid", std::to_string(c.grid_size)}});
    out << "beta,count,expected,deviation\n";
    for (int j = 0; j < report.grid_size; ++j) {
      out << format_double(report.betas[j]) << ',' << report.counts[j] << ','
          << format_double(report.expected) << ',' << format_double(report.deviations[j])
          << '\n';
    }
  }
  nlohmann::json fractions = nlohmann::json::array();
  for (const auto& [delta, fraction] : report.exceptional_fraction)
    fractions.push_back({{"delta", delta}, {"fraction", fraction}});
  auto out = open_output(c, ".json");
  write_json(out, json_envelope("sectors", config_json(c),
                                {{"X", report.X},
                                 {"rho", report.rho},
                                 {"gamma", report.gamma},
                                 {"grid_size", report.grid_size},
                                 {"total", report.total},
                                 {"expected", report.expected},
                                 {"exceptional_fraction", fractions}}));
}

void run_variance(const ExperimentConfig& c) {
  const auto f = SmoothWindow::mollifier();
  const auto phi = norm_plateau_plus(c.eps);
  const std::vector<double> xs = c.x_list.empty() ? std::vector<double>{c.x} : c.x_list;
  SweepOptions options;
  options.grid_factor = c.grid_factor;
  const auto reports = variance_sweep(c.tau_list, xs, f, phi, options);

  nlohmann::json cells = nlohmann::json::array();
  for (const auto& r : reports) cells.push_back(to_json(r));
  {
    auto out = open_output(c, ".json");
    write_json(out, json_envelope("variance", config_json(c),
                                  {{"f", f.descriptor()},
                                   {"f_id", f.id()},
                                   {"phi", phi.descriptor()},
                                   {"phi_id", phi.id()},
                                   {"reports", cells}}));
  }
  auto out = open_output(c, ".csv");
  write_csv_header(out, "variance",
                   {{"f_id", f.id()}, {"phi_id", phi.id()}, {"value", "var_direct/mean^2"}});
  out << "X";
  for (const double tau : c.tau_list) out << ",tau=" << format_double(tau);
  out << '\n';
  for (std::size_t xi = 0; xi < xs.size(); ++xi) {
    out << format_double(xs[xi]);
    for (std::size_t ti = 0; ti < c.tau_list.size(); ++ti)
      out << ',' << format_double(reports[ti * xs.size() + xi].ratio);
    out << '\n';
  }

  if (c.dump_sums) {
    for (const auto& r : reports) {
      const auto [lo, hi] = norm_window(r.X, phi);
      const auto entries = lambda_entries(lo, hi);
      const auto table = character_sum_table(entries, r.X, phi, r.k_max);
      ExperimentConfig named = c;
      named.output_path = (c.output_path.empty() ? std::string("variance") : c.output_path) +
                          ".sums_X" + format_double(r.X) + "_tau" + format_double(r.tau);
      auto sums = open_output(named, ".csv");
      write_character_sum_csv(sums, table);
    }
  }
}

void run_weyl(const ExperimentConfig& c) {
  const auto lo = floor_norm(c.x);
  const auto hi = floor_norm(2.0 * c.x);
  const auto ideals = enumerate_prime_ideals(lo, hi, enumeration(c));
  if (ideals.empty()) throw EmptyRange("weyl: no ideals in range");
  const auto count = static_cast<double>(ideals.size());
  std::vector<double> angles;
  for (const auto& g : ideals) angles.push_back(g.theta);
  const double disc = star_discrepancy(angles);

  if (c.format == OutputFormat::csv) {
    auto out = open_output(c, ".csv");
    write_csv_header(out, "weyl",
                     {{"norm_min", std::to_string(lo)},
                      {"norm_max", std::to_string(hi)},
                      {"ideal_count", std::to_string(ideals.size())},
                      {"star_discrepancy", format_double(disc)}});
    out << "k,re,im,normalized_abs\n";
    for (long k = 1; k <= c.k_max; ++k) {
      const auto w = weyl_sum(k, ideals);
      out << k << ',' << format_double(w.real()) << ',' << format_double(w.imag()) << ','
          << format_double(std::abs(w) / count) << '\n';
    }
    return;
  }
  nlohmann::json sums = nlohmann::json::array();
  for (long k = 1; k <= c.k_max; ++k) {
    const auto w = weyl_sum(k, ideals);
    sums.push_back({{"k", k}, {"re", w.real()}, {"im", w.imag()}, {"normalized_abs", std::abs(w) / count}});
  }
  auto out = open_output(c, ".json");
  write_json(out, json_envelope("weyl", config_json(c),
                                {{"norm_min", lo},
                                 {"norm_max", hi},
                                 {"ideal_count", ideals.size()},
                                 {"star_discrepancy", disc},
                                 {"weyl_sums", sums}}));
}

void run_realquad(const ExperimentConfig& c) {
  const auto ideals = realquad::split_prime_ideals(c.limit);
  {
    auto out = open_output(c, ".csv");
    write_csv_header(out, "realquad",
                     {{"limit", std::to_string(c.limit)}, {"period", format_double(realquad::kPeriod)}});
    out << "p,a,b,sign,t\n";
    for (const auto& g : ideals)
      out << g.p << ',' << g.a << ',' << g.b << ',' << g.sign << ',' << format_double(g.t) << '\n';
  }
  nlohmann::json sums = nlohmann::json::array();
  for (const auto& [k, w] : realquad::equidistribution_report_real(c.limit, c.k_max))
    sums.push_back({{"k", k}, {"re", w.real()}, {"im", w.imag()}, {"abs", std::abs(w)}});
  auto out = open_output(c, ".json");
  write_json(out, json_envelope("realquad", config_json(c),
                                {{"ideal_count", ideals.size()}, {"weyl_sums", sums}}));
}

void run_forbidden(const ExperimentConfig& c) {
  const auto r = forbidden_region_check(floor_norm(c.x));
  auto out = open_output(c, ".json");
  write_json(out, json_envelope("forbidden", config_json(c),
                                {{"norm_max", r.norm_max},
                                 {"min_angle", r.min_angle},
                                 {"witness", {{"p", r.witness.p}, {"a", r.witness.a}, {"b", r.witness.b}}},
                                 {"bound", r.bound},
                                 {"holds", r.holds}}));
}

}  // namespace

std::optional<std::string> validate(const ExperimentConfig& c) {
  auto bad_x = [](double x) { return !(x >= 2.0 && x <= kMaxX); };
  switch (c.command) {
    case Command::sieve:
    case Command::weyl:
    case Command::forbidden:
      if (bad_x(c.x)) return "--x must lie in [2, 1e9]";
      if (c.command == Command::weyl && c.k_max < 1) return "--kmax must be >= 1";
      break;
    case Command::sectors:
      if (bad_x(c.x)) return "--x must lie in [2, 1e9]";
      if (!(c.rho >= 0.0 && c.rho < 1.0)) return "--rho must lie in [0, 1)";
      if (c.grid_size < 1) return "--grid must be >= 1";
      for (const double d : c.delta_list)
        if (!(d >= 0.0)) return "--delta values must be >= 0";
      break;
    case Command::variance: {
      const auto& xs = c.x_list.empty() ? std::vector<double>{c.x} : c.x_list;
      for (std::size_t i = 0; i < xs.size(); ++i) {
        if (bad_x(xs[i])) return "--x values must lie in [2, 1e9]";
        if (i > 0 && !(xs[i] > xs[i - 1])) return "--x-list must be strictly ascending";
      }
      if (c.tau_list.empty()) return "--tau needs at least one value";
      for (const double t : c.tau_list)
        if (!(t >= 0.0 && t < 1.0)) return "--tau values must lie in [0, 1)";
      if (!(c.eps > 0.0 && c.eps < 0.5)) return "--eps must lie in (0, 1/2)";
      if (c.grid_factor < 1) return "--grid-factor must be >= 1";
      break;
    }
    case Command::realquad:
      if (c.limit < 17 || c.limit > 1'000'000'000) return "--limit must lie in [17, 1e9]";
      if (c.k_max < 0) return "--kmax must be >= 0";
      break;
  }
  return std::nullopt;
}

int run(const ExperimentConfig& config, std::ostream& log) {
  if (const auto problem = validate(config)) {
    log << "heckelab " << to_string(config.command) << ": invalid configuration: " << *problem
        << '\n';
    return kExitConfig;
  }
  try {
    switch (config.command) {
      case Command::sieve:
        run_sieve(config);
        break;
      case Command::sectors:
        run_sectors(config);
        break;
      case Command::variance:
        run_variance(config);
        break;
      case Command::weyl:
        run_weyl(config);
        break;
      case Command::realquad:
        run_realquad(config);
        break;
      case Command::forbidden:
        run_forbidden(config);
        break;
    }
  } catch (const NumericalFailure& e) {
    log << "heckelab " << to_string(config.command) << ": numerical failure: " << e.what() << '\n';
    return kExitNumerical;
  } catch (const BadInput& e) {
    log << "heckelab " << to_string(config.command) << ": " << e.what() << '\n';
    return kExitConfig;
  }
  return kExitOk;
}

}  // namespace heckelab
