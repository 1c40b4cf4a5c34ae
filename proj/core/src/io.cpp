#include "trunc_hermite/io.hpp"

#include <nlohmann/json.hpp>

#include <ostream>

#include "trunc_hermite/errors.hpp"

namespace trunc_hermite {

using nlohmann::json;

namespace {

json precision_json(const PrecisionConfig& cfg) {
  return {{"digits", cfg.working_digits}, {"guard_digits", cfg.guard_digits}, {"tol", cfg.target_rel_tol.str()}};
}

PrecisionConfig precision_from(const json& doc) {
  const int digits = doc.at("digits").get<int>();
  const int guard = doc.at("guard_digits").get<int>();
  const Real tol = Real::parse(doc.at("tol").get<std::string>(), Digits{digits});
  return PrecisionConfig::with_tolerance(digits, guard, tol);
}

json strings(const std::vector<Real>& values) {
  json out = json::array();
  for (const Real& v : values) out.push_back(v.str());
  return out;
}

std::vector<Real> reals(const json& array, Digits d) {
  std::vector<Real> out;
  out.reserve(array.size());
  for (const json& v : array) out.push_back(Real::parse(v.get<std::string>(), d));
  return out;
}

json parse_document(std::string_view text, std::string_view kind) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw DomainError(std::string("malformed JSON: ") + e.what());
  }
  if (!doc.is_object() || doc.value("kind", "") != kind) {
    throw DomainError("JSON document is not a " + std::string(kind));
  }
  return doc;
}

template <typename F>
auto guarded(F&& body) {
  try {
    return body();
  } catch (const json::exception& e) {
    throw DomainError(std::string("JSON document has a missing or mistyped field: ") + e.what());
  }
}

}  // namespace

std::string to_json(const MomentTable& table) {
  json doc = precision_json(table.precision);
  doc["kind"] = "moment_table";
  doc["z"] = table.z.str();
  doc["u"] = strings(table.u);
  json methods = json::array();
  for (MomentMethod m : table.tags) methods.push_back(std::string(to_string(m)));
  doc["methods"] = methods;
  return doc.dump(2);
}

std::string to_json(const GammaTable& table) {
  json doc = precision_json(table.precision);
  doc["kind"] = "gamma_table";
  doc["z"] = table.z.str();
  doc["method"] = std::string(to_string(table.method));
  doc["gamma"] = strings(table.gamma);
  doc["h"] = strings(table.h);
  return doc.dump(2);
}

std::string to_json(const QuadratureRule& rule) {
  json doc = precision_json(rule.precision);
  doc["kind"] = "quadrature_rule";
  doc["n"] = rule.n;
  doc["z"] = rule.z.str();
  doc["nodes"] = strings(rule.nodes);
  doc["weights"] = strings(rule.weights);
  doc["zeta"] = rule.zeta.is_nan() ? json(nullptr) : json(rule.zeta.str());
  return doc.dump(2);
}

std::string to_json(const AlphaTable& table) {
  json alpha = json::array();
  for (int n = 0; n <= table.n_max; ++n) {
    json row = json::array();
    for (int k = 1; k <= table.k_max; ++k) row.push_back(strings(table.value[n][k]));
    alpha.push_back(row);
  }
  json doc{{"kind", "alpha_table"}, {"n_max", table.n_max}, {"k_max", table.k_max}, {"exact", table.exact},
           {"alpha", alpha}};
  return doc.dump(2);
}

std::string to_json(const EtaTable& table) {
  json values = json::array();
  json exact = json::array();
  for (int n = 0; n <= table.n_max; ++n) {
    json row = json::array();
    json exact_row = json::array();
    for (int k = 1; k <= table.k_max; ++k) {
      row.push_back(table.value[n][k].str());
      if (table.exact) exact_row.push_back(table.rational[n][k].get_str());
    }
    values.push_back(row);
    if (table.exact) exact.push_back(exact_row);
  }
  json doc{{"kind", "eta_table"}, {"n_max", table.n_max}, {"k_max", table.k_max}, {"exact", table.exact},
           {"eta", values}};
  if (table.exact) doc["eta_exact"] = exact;
  return doc.dump(2);
}

std::string to_json(const StieltjesSample& s) {
  json doc{{"kind", "stieltjes_sample"}, {"t", s.t.str()},     {"z", s.z.str()},     {"s", s.s.str()},
           {"ds", s.ds.str()},           {"d2s", s.d2s.str()}, {"d3s", s.d3s.str()}, {"dzs", s.dzs.str()},
           {"tail_bound", s.tail_bound.str()}, {"terms", s.terms}};
  return doc.dump(2);
}

MomentTable moment_table_from_json(std::string_view text) {
  const json doc = parse_document(text, "moment_table");
  return guarded([&] {
    MomentTable table;
    table.precision = precision_from(doc);
    const Digits d = table.precision.digits();
    table.z = Real::parse(doc.at("z").get<std::string>(), d);
    table.u = reals(doc.at("u"), d);
    for (const json& m : doc.at("methods")) table.tags.push_back(moment_method_from_string(m.get<std::string>()));
    return table;
  });
}

GammaTable gamma_table_from_json(std::string_view text) {
  const json doc = parse_document(text, "gamma_table");
  return guarded([&] {
    GammaTable table;
    table.precision = precision_from(doc);
    const Digits d = table.precision.digits();
    table.z = Real::parse(doc.at("z").get<std::string>(), d);
    table.method = gamma_method_from_string(doc.at("method").get<std::string>());
    table.gamma = reals(doc.at("gamma"), d);
    table.h = reals(doc.at("h"), d);
    return table;
  });
}

QuadratureRule quadrature_rule_from_json(std::string_view text) {
  const json doc = parse_document(text, "quadrature_rule");
  return guarded([&] {
    QuadratureRule rule;
    rule.precision = precision_from(doc);
    const Digits d = rule.precision.digits();
    rule.n = doc.at("n").get<int>();
    rule.z = Real::parse(doc.at("z").get<std::string>(), d);
    rule.nodes = reals(doc.at("nodes"), d);
    rule.weights = reals(doc.at("weights"), d);
    const json& zeta = doc.at("zeta");
    rule.zeta = zeta.is_null() ? Real() : Real::parse(zeta.get<std::string>(), d);
    return rule;
  });
}

void write_moments_csv(std::ostream& os, const MomentTable& table) {
  os << "n,u,method\n";
  for (int n = 0; n <= table.n_max(); ++n) {
    os << n << ',' << table.u[n].str() << ',' << to_string(table.tags[n]) << '\n';
  }
}

void write_gamma_csv(std::ostream& os, const GammaTable& table, int rows) {
  if (rows + 1 > table.n_max()) throw DomainError("gamma CSV rows need gamma_{n+1} for zeta2");
  const AuxSequences aux = compute_aux_sequences(table);
  os << "n,gamma,h,g,zeta2\n";
  for (int n = 1; n <= rows; ++n) {
    os << n << ',' << table.gamma[n].str() << ',' << table.h[n].str() << ',' << aux.g[n].str() << ','
       << aux.zeta2[n].str() << '\n';
  }
}

void write_quadrature_csv(std::ostream& os, const QuadratureRule& rule) {
  os << "k,node,weight\n";
  for (int k = 0; k < rule.n; ++k) os << k + 1 << ',' << rule.nodes[k].str() << ',' << rule.weights[k].str() << '\n';
}

void write_eval_csv(std::ostream& os, const std::vector<PolyEval>& grid) {
  os << "x,P_n,dP_n\n";
  for (const PolyEval& e : grid) os << e.x.str() << ',' << e.value.str() << ',' << e.dvalue.str() << '\n';
}

void write_stieltjes_csv(std::ostream& os, const std::vector<StieltjesSample>& samples, const MomentTable& table) {
  os << "t,S,dS,residual_t_ode\n";
  for (const StieltjesSample& s : samples) {
    os << s.t.str() << ',' << s.s.str() << ',' << s.ds.str() << ','
       << check_t_ode(s, table.u[0], table.u[1]).str(6) << '\n';
  }
}

void write_eta_csv(std::ostream& os, const EtaTable& table) {
  os << "n,k,eta,eta_exact\n";
  for (int n = 1; n <= table.n_max; ++n) {
    for (int k = 1; k <= table.k_max; ++k) {
      os << n << ',' << k << ',' << table.value[n][k].str() << ',';
      if (table.exact) os << table.rational[n][k].get_str();
      os << '\n';
    }
  }
}

}  // namespace trunc_hermite
