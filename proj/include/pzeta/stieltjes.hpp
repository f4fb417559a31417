#pragma once

#include <cstddef>
#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

#include "pzeta/precision.hpp"

namespace pzeta {

enum class Provenance { bundled, file, oracle };

// gamma_0..gamma_N of the Laurent expansion
// zeta(s) = 1/(s-1) + sum_n (-1)^n gamma_n / n! (s-1)^n.
struct StieltjesTable {
  std::vector<Real> values;
  Provenance provenance = Provenance::bundled;
  // Significant decimal digits carried by the source (working digits for the oracle).
  int source_digits = 0;

  std::size_t order() const { return values.size() - 1; }
  // Throws UnsupportedOrder beyond the table.
  const Real& at(std::size_t n) const;
};

// Parses the data format: one "index decimal" pair per line, indices 0, 1,
// 2, ... in order; blank lines and lines starting with '#' are skipped.
StieltjesTable parse_stieltjes(std::string_view text, const PrecisionPolicy& policy,
                               Provenance provenance = Provenance::file);
StieltjesTable load_stieltjes(const std::filesystem::path& path, const PrecisionPolicy& policy);
// The table compiled into the library.
StieltjesTable bundled_stieltjes(const PrecisionPolicy& policy);

std::string_view bundled_stieltjes_text();
// Checksum pinned alongside the data file in the repository.
std::string_view bundled_stieltjes_sha256();
std::string sha256_hex(std::string_view bytes);

// gamma_n from the bundled table.
Real stieltjes(std::size_t n, const PrecisionPolicy& policy);

// Independent evaluation of
//   gamma_n = lim_m [ sum_{k<=m} (log k)^n / k - (log m)^{n+1} / (n+1) ]
// by Euler-Maclaurin summation, for n = 0..order at the policy's precision.
StieltjesTable stieltjes_oracle(std::size_t order, const PrecisionPolicy& policy);

// g_0..g_{n_max}: Taylor coefficients of log zeta(s) + log(s-1) about s = 1,
// scaled by m!. Built from series_log of (s-1) zeta(s). g_0 is exactly 0.
// Requires n_max <= table.order() + 1.
std::vector<Real> g_coefficients(std::size_t n_max, const PrecisionPolicy& policy, const StieltjesTable& table);
std::vector<Real> g_coefficients(std::size_t n_max, const PrecisionPolicy& policy);

}  // namespace pzeta
