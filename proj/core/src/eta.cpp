#include <string>

#include "trunc_hermite/errors.hpp"
#include "trunc_hermite/recurrence.hpp"

namespace trunc_hermite {

namespace {

constexpr long kExactBudget = 10'000;

// Fills grid[n][k] for k = 1..k_max and n = 1..n_max + k_max - k. Level k
// reads level j < k one row further out, hence the triangular extension.
template <typename T, typename Make>
void fill_eta(std::vector<std::vector<T>>& grid, int n_max, int k_max, Make make) {
  const int rows = n_max + k_max;
  grid.assign(rows + 1, std::vector<T>(k_max + 1, make(0, 1)));
  for (int n = 1; n <= rows; ++n) grid[n][1] = make(static_cast<long>(n) * n, 4L * n * n - 1);
  for (int k = 2; k <= k_max; ++k) {
    const int last = n_max + k_max - k;
    for (int n = 1; n <= last; ++n) {
      T sum = make(0, 1);
      for (int j = 1; j < k; ++j) {
        T diff = grid[n - 1][j];
        diff -= grid[n + 1][j];
        diff *= grid[n][k - j];
        sum += diff;
      }
      sum /= make(k - 1, 1);
      grid[n][k] = sum;
    }
  }
  grid.resize(n_max + 1);
}

Real to_real(const mpq_class& q, Digits d) {
  Real r(0, d);
  mpfr_set_q(r.raw(), q.get_mpq_t(), MPFR_RNDN);
  return r;
}

}  // namespace

const Real& EtaTable::at(int n, int k) const {
  if (n < 0 || n > n_max || k < 1 || k > k_max) {
    throw DomainError("eta_{" + std::to_string(n) + "," + std::to_string(k) + "} is outside the table");
  }
  return value[n][k];
}

const mpq_class& EtaTable::exact_at(int n, int k) const {
  if (!exact) throw DomainError("eta table was built in working precision");
  if (n < 0 || n > n_max || k < 1 || k > k_max) {
    throw DomainError("eta_{" + std::to_string(n) + "," + std::to_string(k) + "} is outside the table");
  }
  return rational[n][k];
}

EtaTable build_eta_table(int n_max, int k_max, const PrecisionConfig& cfg, EtaArithmetic arithmetic) {
  if (n_max < 0) throw DomainError("n_max must be non-negative");
  if (k_max < 1) throw DomainError("k_max must be at least 1");
  const Digits d = cfg.digits();
  EtaTable table;
  table.n_max = n_max;
  table.k_max = k_max;
  table.exact = arithmetic == EtaArithmetic::exact ||
                (arithmetic == EtaArithmetic::automatic && static_cast<long>(n_max) * k_max <= kExactBudget);
  if (table.exact) {
    fill_eta(table.rational, n_max, k_max, [](long p, long q) {
      mpq_class r(p, q);
      r.canonicalize();
      return r;
    });
    table.value.resize(n_max + 1);
    for (int n = 0; n <= n_max; ++n) {
      table.value[n].reserve(k_max + 1);
      for (int k = 0; k <= k_max; ++k) table.value[n].push_back(to_real(table.rational[n][k], d));
    }
  } else {
    fill_eta(table.value, n_max, k_max, [d](long p, long q) { return Real(p, d) / q; });
  }
  return table;
}

Real gamma_series(int n, const Real& z, int k_max, const EtaTable& eta) {
  if (n < 0 || n > eta.n_max) throw DomainError("gamma_series: n outside the eta table");
  if (k_max < 1 || k_max > eta.k_max) throw DomainError("gamma_series: k_max outside the eta table");
  const Real z2 = z * z;
  Real power = z2;
  Real sum(0, z.digits());
  for (int k = 1; k <= k_max; ++k) {
    sum += eta.at(n, k) * power;
    power *= z2;
  }
  return sum;
}

}  // namespace trunc_hermite
