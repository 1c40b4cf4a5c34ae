#include "run.hpp"

#include <nlohmann/json.hpp>

#include <fstream>
#include <sstream>

#include "cache.hpp"
#include "trunc_hermite/trunc_hermite.hpp"
#include "verify.hpp"

namespace trunc_hermite::cli {

namespace {

using nlohmann::ordered_json;

struct Output {
  std::string text;
  int code = kSuccess;
};

Real parse_decimal(const std::string& text, Digits d, const std::string& flag) {
  try {
    return Real::parse(text, d);
  } catch (const DomainError&) {
    throw UsageError(flag + " must be a decimal number, got '" + text + "'");
  }
}

PrecisionConfig make_precision(const RunConfig& config, int order) {
  int digits = 0;
  if (config.digits) {
    digits = *config.digits;
    if (digits < 16) throw UsageError("--digits must be at least 16");
  } else {
    try {
      digits = default_working_digits(order);
    } catch (const DomainError& e) {
      throw UsageError(e.what());
    }
  }
  if (!config.tol) return PrecisionConfig::with_digits(digits);
  const Real tol = parse_decimal(*config.tol, Digits{digits}, "--tol");
  if (!(tol > 0.0)) throw UsageError("tol must be positive");
  try {
    return PrecisionConfig::with_tolerance(digits, 4, tol);
  } catch (const DomainError& e) {
    throw UsageError(std::string("--tol: ") + e.what());
  }
}

Real parse_z(const RunConfig& config, const PrecisionConfig& cfg) {
  const Real z = parse_decimal(config.z, cfg.digits(), "--z");
  if (!(z > 0.0)) throw UsageError("z must be positive");
  return z;
}

int require_non_negative(int value, const char* flag) {
  if (value < 0) throw UsageError(std::string(flag) + " must be non-negative");
  return value;
}

int index_or(const RunConfig& config, int fallback, const char* flag) {
  return require_non_negative(config.n_max.value_or(config.n.value_or(fallback)), flag);
}

int degree_or(const RunConfig& config, int fallback, const char* flag) {
  return require_non_negative(config.n.value_or(config.n_max.value_or(fallback)), flag);
}

GammaMethod parse_method(const RunConfig& config) {
  try {
    return gamma_method_from_string(config.method.value_or("moments"));
  } catch (const DomainError&) {
    throw UsageError("--method must be one of moments, laguerre_freud, series, asymptotic");
  }
}

void reject_method(const RunConfig& config, const char* command) {
  if (config.method && *config.method != "moments") {
    throw UsageError(std::string("--method is not supported by '") + command + "' (only moments)");
  }
}

std::optional<TableCache> open_cache(const RunConfig& config) {
  if (!config.use_cache) return std::nullopt;
  return TableCache(config.cache_dir ? std::filesystem::path(*config.cache_dir) : TableCache::default_dir());
}

/// Moment-route table covering `cover`, through the cache when enabled.
GammaTable moment_route(const RunConfig& config, const Real& z, int cover, const PrecisionConfig& cfg,
                        std::ostream& err) {
  const std::optional<TableCache> cache = open_cache(config);
  const CacheKey key{config.z, cover, cfg.working_digits, "moments"};
  if (cache) {
    if (auto hit = cache->load_or_warn(key, err)) return *std::move(hit);
  }
  GammaTable table = build_gamma_table(cover, z, cfg);
  table.validate();
  if (cache) {
    try {
      cache->store(key, table);
    } catch (const std::exception& e) {
      err << "warning: could not store cache entry: " << e.what() << '\n';
    }
  }
  return table;
}

GammaTable gamma_by_method(const RunConfig& config, const Real& z, int cover, const PrecisionConfig& cfg,
                           GammaMethod method, std::ostream& err) {
  const Digits d = cfg.digits();
  std::vector<Real> gamma;
  switch (method) {
    case GammaMethod::moments:
      return moment_route(config, z, cover, cfg, err);
    case GammaMethod::laguerre_freud: {
      const MomentTable m = build_moment_table(1, z, cfg);
      GammaTable table = gammas_laguerre_freud(z, m.u[1] / m.u[0], std::max(cover, 1), cfg);
      table.validate();
      return table;
    }
    case GammaMethod::series: {
      if (config.k_max < 1) throw UsageError("--k-max must be at least 1");
      const EtaTable eta = build_eta_table(cover, config.k_max, cfg);
      for (int n = 1; n <= cover; ++n) gamma.push_back(gamma_series(n, z, config.k_max, eta));
      break;
    }
    case GammaMethod::asymptotic:
      for (int n = 1; n <= cover; ++n) gamma.push_back(gamma_asymptotic(n, z.at(d)));
      break;
  }
  GammaTable table = make_gamma_table(z, gamma, moment_zero(z, cfg), method, cfg);
  table.validate();
  return table;
}

Output cmd_moments(const RunConfig& config) {
  reject_method(config, "moments");
  const int n_max = index_or(config, 10, "--n-max");
  const PrecisionConfig cfg = make_precision(config, n_max);
  const MomentTable table = build_moment_table(n_max, parse_z(config, cfg), cfg);
  std::ostringstream os;
  if (config.format == Format::csv) {
    write_moments_csv(os, table);
  } else {
    os << to_json(table) << '\n';
  }
  return {os.str()};
}

Output cmd_gamma(const RunConfig& config, std::ostream& err) {
  const int n_max = index_or(config, 10, "--n-max");
  const GammaMethod method = parse_method(config);
  const PrecisionConfig cfg = make_precision(config, n_max + 1);
  const Real z = parse_z(config, cfg);
  GammaTable table = gamma_by_method(config, z, n_max + 1, cfg, method, err);
  std::ostringstream os;
  if (config.format == Format::csv) {
    write_gamma_csv(os, table, n_max);
  } else {
    table.gamma.resize(n_max + 1);
    table.h.resize(n_max + 1);
    os << to_json(table) << '\n';
  }
  return {os.str()};
}

Output cmd_quad(const RunConfig& config, std::ostream& err) {
  reject_method(config, "quad");
  const int n = degree_or(config, 8, "--n");
  if (n < 1) throw UsageError("--n must be at least 1");
  const PrecisionConfig cfg = make_precision(config, n + 1);
  const Real z = parse_z(config, cfg);
  const GammaTable table = moment_route(config, z, n + 1, cfg, err);
  const QuadratureRule rule = zeros_newton_refine(gauss_rule(n, table, table.h[0]), table);
  std::ostringstream os;
  if (config.format == Format::csv) {
    write_quadrature_csv(os, rule);
  } else {
    os << to_json(rule) << '\n';
  }
  return {os.str()};
}

Output cmd_eval(const RunConfig& config, std::ostream& err) {
  reject_method(config, "eval");
  const int n = degree_or(config, 5, "--n");
  const PrecisionConfig cfg = make_precision(config, n);
  const Real z = parse_z(config, cfg);
  const Digits d = cfg.digits();
  const GammaTable table = moment_route(config, z, std::max(n, 1), cfg, err);
  std::vector<Real> xs;
  if (config.x) {
    xs.push_back(parse_decimal(*config.x, d, "--x"));
  } else {
    if (config.points < 1) throw UsageError("--points must be at least 1");
    const Real lo = config.x_min ? parse_decimal(*config.x_min, d, "--x-min") : -z;
    const Real hi = config.x_max ? parse_decimal(*config.x_max, d, "--x-max") : z;
    for (int i = 0; i < config.points; ++i) {
      xs.push_back(config.points == 1 ? lo : lo + (hi - lo) * i / (config.points - 1));
    }
  }
  std::vector<PolyEval> grid;
  for (const Real& x : xs) grid.push_back(eval_poly(n, x, table));
  std::ostringstream os;
  if (config.format == Format::csv) {
    write_eval_csv(os, grid);
  } else {
    ordered_json points = ordered_json::array();
    for (const PolyEval& e : grid) {
      points.push_back(
          {{"x", e.x.str()}, {"value", e.value.str()}, {"dvalue", e.dvalue.str()}, {"d2value", e.d2value.str()}});
    }
    ordered_json doc{{"kind", "poly_eval"}, {"n", n}, {"z", table.z.str()}, {"digits", cfg.working_digits},
                     {"points", points}};
    os << doc.dump(2) << '\n';
  }
  return {os.str()};
}

Output cmd_stieltjes(const RunConfig& config) {
  reject_method(config, "stieltjes");
  PrecisionConfig cfg = make_precision(config, config.n_max.value_or(0));
  const Real z = parse_z(config, cfg);
  const Digits d = cfg.digits();
  std::vector<Real> ts;
  if (config.t) {
    ts.push_back(parse_decimal(*config.t, d, "--t"));
  } else if (config.t_min && config.t_max) {
    if (config.points < 1) throw UsageError("--points must be at least 1");
    const Real lo = parse_decimal(*config.t_min, d, "--t-min");
    const Real hi = parse_decimal(*config.t_max, d, "--t-max");
    for (int i = 0; i < config.points; ++i) {
      ts.push_back(config.points == 1 ? lo : lo + (hi - lo) * i / (config.points - 1));
    }
  } else {
    throw UsageError("stieltjes needs --t or both --t-min and --t-max");
  }
  int terms = 1;
  for (const Real& t : ts) {
    if (!(abs(t) > z * (1 + kSupportMargin))) {
      throw UsageError("t must satisfy |t| > z (1 + " + std::to_string(kSupportMargin).substr(0, 4) + "), got " +
                       t.str(12));
    }
    terms = std::max(terms, stieltjes_terms_needed(t, z, cfg));
  }
  const MomentTable moments = build_moment_table(config.n_max.value_or(terms), z, cfg);
  std::vector<StieltjesSample> samples;
  for (const Real& t : ts) samples.push_back(stieltjes_eval(t, z, moments));
  std::ostringstream os;
  if (config.format == Format::csv) {
    write_stieltjes_csv(os, samples, moments);
  } else if (samples.size() == 1) {
    os << to_json(samples.front()) << '\n';
  } else {
    ordered_json list = ordered_json::array();
    for (const StieltjesSample& s : samples) list.push_back(ordered_json::parse(to_json(s)));
    os << ordered_json{{"kind", "stieltjes_grid"}, {"samples", list}}.dump(2) << '\n';
  }
  return {os.str()};
}

Output cmd_series(const RunConfig& config) {
  reject_method(config, "series");
  const int n_max = index_or(config, 10, "--n-max");
  if (config.k_max < 1) throw UsageError("--k-max must be at least 1");
  const PrecisionConfig cfg = make_precision(config, n_max);
  const Real z = parse_z(config, cfg);
  const EtaTable eta = build_eta_table(n_max, config.k_max, cfg);
  std::ostringstream os;
  if (config.format == Format::csv) {
    write_eta_csv(os, eta);
    return {os.str()};
  }
  ordered_json values = ordered_json::array();
  for (int n = 1; n <= n_max; ++n) values.push_back(gamma_series(n, z, config.k_max, eta).str());
  ordered_json doc{{"kind", "series"},
                   {"z", z.str()},
                   {"k_max", config.k_max},
                   {"eta", ordered_json::parse(to_json(eta))},
                   {"gamma_series", values}};
  if (config.alpha) doc["alpha"] = ordered_json::parse(to_json(build_alpha_table(n_max, config.k_max, eta)));
  os << doc.dump(2) << '\n';
  return {os.str()};
}

Output cmd_verify(const RunConfig& config, std::ostream& err) {
  reject_method(config, "verify");
  const int n_max = index_or(config, 12, "--n-max");
  const PrecisionConfig cfg = make_precision(config, n_max + 1);
  const Real z = parse_z(config, cfg);
  const GammaTable table = moment_route(config, z, n_max + 1, cfg, err);
  const VerifyReport report = run_verify(config.z, z, n_max, cfg, table);
  std::string text = config.format == Format::csv ? report_to_csv(report) : report_to_json(report) + "\n";
  return {std::move(text), report.overall ? kSuccess : kCheckFailed};
}

Output dispatch(const RunConfig& config, std::ostream& err) {
  switch (config.command) {
    case Command::moments:
      return cmd_moments(config);
    case Command::gamma:
      return cmd_gamma(config, err);
    case Command::quad:
      return cmd_quad(config, err);
    case Command::eval:
      return cmd_eval(config, err);
    case Command::stieltjes:
      return cmd_stieltjes(config);
    case Command::series:
      return cmd_series(config);
    case Command::verify:
      return cmd_verify(config, err);
  }
  throw UsageError("unknown command");
}

}  // namespace

int run(const RunConfig& config, std::ostream& out, std::ostream& err) {
  try {
    const Output result = dispatch(config, err);
    if (config.out.empty()) {
      out << result.text;
    } else {
      std::ofstream file(config.out, std::ios::trunc);
      if (!file) throw UsageError("--out: cannot open '" + config.out + "' for writing");
      file << result.text;
    }
    return result.code;
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const DomainError& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const TooCloseToSupport& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const PrecisionExhausted& e) {
    err << "error: " << e.what() << " (index " << e.index() << ")\n";
    return kNumerical;
  } catch (const Blowup& e) {
    err << "error: " << e.what() << " (index " << e.index() << ")\n";
    return kNumerical;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kNumerical;
  }
}

int main_entry(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  std::optional<RunConfig> config;
  std::string help;
  try {
    config = parse_args(argc, argv, help);
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  }
  if (!config) {
    out << help;
    return kSuccess;
  }
  return run(*config, out, err);
}

}  // namespace trunc_hermite::cli
