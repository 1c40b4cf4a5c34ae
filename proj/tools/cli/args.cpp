#include <CLI11.hpp>

#include "run_config.hpp"

namespace trunc_hermite::cli {

namespace {

struct Spec {
  const char* name;
  Command command;
  const char* description;
};

constexpr Spec kCommands[] = {
    {"moments", Command::moments, "Even moments u_0..u_n of the truncated Gaussian weight"},
    {"gamma", Command::gamma, "Recurrence coefficients gamma_n and norms h_n"},
    {"quad", Command::quad, "Gauss quadrature rule (zeros of P_n and Christoffel numbers)"},
    {"eval", Command::eval, "P_n(x; z) and its x-derivative on a grid"},
    {"stieltjes", Command::stieltjes, "Stieltjes function S(t; z) and its derivatives"},
    {"series", Command::series, "Maclaurin coefficients of gamma_n (and P_n) in z"},
    {"verify", Command::verify, "Run the identity suite and report pass/fail"},
};

void add_common(CLI::App& sub, RunConfig& cfg) {
  sub.add_option("--z", cfg.z, "Truncation point z > 0 (decimal)")->required();
  sub.add_option("--n", cfg.n, "Degree or point count");
  sub.add_option("--n-max", cfg.n_max, "Largest index");
  sub.add_option("--k-max", cfg.k_max, "Series order in z^2");
  sub.add_option("--method", cfg.method, "Construction route");
  sub.add_option("--digits", cfg.digits, "Working precision in decimal digits (>= 16)");
  sub.add_option("--tol", cfg.tol, "Target relative tolerance (decimal, > 0)");
  sub.add_option("--format", cfg.format, "Output format")
      ->transform(CLI::CheckedTransformer(std::map<std::string, Format>{{"json", Format::json}, {"csv", Format::csv}}));
  sub.add_option("--out", cfg.out, "Output file (default: standard output)");
  sub.add_option("--cache-dir", cfg.cache_dir, "Table cache directory");
  sub.add_flag("!--no-cache", cfg.use_cache, "Disable the table cache");
}

}  // namespace

std::optional<RunConfig> parse_args(int argc, const char* const* argv, std::string& help_text) {
  RunConfig cfg;
  CLI::App app{"Orthogonal polynomials for the Gaussian weight truncated to [-z, z]", "trunc-hermite"};
  app.require_subcommand(1);
  for (const Spec& spec : kCommands) {
    CLI::App* sub = app.add_subcommand(spec.name, spec.description);
    add_common(*sub, cfg);
    sub->callback([&cfg, command = spec.command] { cfg.command = command; });
    if (spec.command == Command::eval) {
      sub->add_option("--x", cfg.x, "Single evaluation point");
      sub->add_option("--x-min", cfg.x_min, "Grid start (default -z)");
      sub->add_option("--x-max", cfg.x_max, "Grid end (default z)");
      sub->add_option("--points", cfg.points, "Grid size");
    }
    if (spec.command == Command::stieltjes) {
      sub->add_option("--t", cfg.t, "Single evaluation point, |t| > z");
      sub->add_option("--t-min", cfg.t_min, "Grid start");
      sub->add_option("--t-max", cfg.t_max, "Grid end");
      sub->add_option("--points", cfg.points, "Grid size");
    }
    if (spec.command == Command::series) {
      sub->add_flag("--alpha", cfg.alpha, "Also emit the polynomial coefficients alpha_{n,k}(x)");
    }
  }
  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    const auto subs = app.get_subcommands();
    help_text = subs.empty() ? app.help() : subs.front()->help();
    return std::nullopt;
  } catch (const CLI::CallForAllHelp&) {
    help_text = app.help("", CLI::AppFormatMode::All);
    return std::nullopt;
  } catch (const CLI::ParseError& e) {
    throw UsageError(e.what());
  }
  return cfg;
}

}  // namespace trunc_hermite::cli
