#pragma once

#include <iosfwd>
#include <string>
#include <string_view>

#include "trunc_hermite/moments.hpp"
#include "trunc_hermite/polynomials.hpp"
#include "trunc_hermite/quadrature.hpp"
#include "trunc_hermite/recurrence.hpp"
#include "trunc_hermite/stieltjes.hpp"

namespace trunc_hermite {

// JSON documents carry every Real as a decimal string with enough digits to
// reproduce the stored binary value exactly at the recorded precision.

std::string to_json(const MomentTable& table);
std::string to_json(const GammaTable& table);
std::string to_json(const QuadratureRule& rule);
std::string to_json(const AlphaTable& table);
std::string to_json(const EtaTable& table);
std::string to_json(const StieltjesSample& sample);

/// Parsers throw DomainError on malformed documents. They do not validate
/// table invariants; call validate() on the result.
MomentTable moment_table_from_json(std::string_view text);
GammaTable gamma_table_from_json(std::string_view text);
QuadratureRule quadrature_rule_from_json(std::string_view text);

/// n, u, method for n = 0..n_max.
void write_moments_csv(std::ostream& os, const MomentTable& table);
/// n, gamma, h, g, zeta2 for n = 1..rows; needs rows + 1 <= table.n_max().
void write_gamma_csv(std::ostream& os, const GammaTable& table, int rows);
/// k, node, weight with k counted from 1.
void write_quadrature_csv(std::ostream& os, const QuadratureRule& rule);
/// x, P_n, dP_n.
void write_eval_csv(std::ostream& os, const std::vector<PolyEval>& grid);
/// t, S, dS, residual_t_ode.
void write_stieltjes_csv(std::ostream& os, const std::vector<StieltjesSample>& samples, const MomentTable& table);
/// n, k, eta (decimal), eta_exact (p/q or empty).
void write_eta_csv(std::ostream& os, const EtaTable& table);

}  // namespace trunc_hermite
