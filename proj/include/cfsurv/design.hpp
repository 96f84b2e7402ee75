#pragma once

#include <bit>
#include <cstdint>
#include <vector>

#include "cfsurv/scenario.hpp"
#include "cfsurv/types.hpp"

namespace cfsurv {

enum class Combining { kMr, kPzf };

// Per-node split of the untrusted transmitters into a zero-forced set W_m and
// a matched-filter set S_m (the complement). Stored as bitmasks; links are
// indexed 0..K-1 with K <= 64.
struct Grouping {
  std::vector<std::uint64_t> zf_mask;

  static Grouping all_mr(int num_mns) { return Grouping{std::vector<std::uint64_t>(num_mns, 0)}; }
  static Grouping full_zf(int num_mns, int num_links) {
    const std::uint64_t all = num_links >= 64 ? ~0ULL : ((1ULL << num_links) - 1);
    return Grouping{std::vector<std::uint64_t>(num_mns, all)};
  }

  bool in_zf(int m, int k) const { return (zf_mask[m] >> k) & 1ULL; }
  int zf_size(int m) const { return std::popcount(zf_mask[m]); }
  int num_mns() const { return static_cast<int>(zf_mask.size()); }

  bool operator==(const Grouping&) const = default;
};

// Decision variables: observe/jam role per node, jamming power split, CPU
// combining weights, and the zero-forcing grouping (used by PZF only).
struct SurveillanceDesign {
  IntVector mode;  // M entries, 1 = jamming
  Matrix theta;    // M x K, nonnegative
  Matrix alpha;    // M x K in [0, 1]
  Grouping grouping;

  int num_mns() const { return static_cast<int>(mode.size()); }
};

// Full-power equal split across links: theta_mk = 1 / (N * sum_l gamma_jam_ml)
// on jamming rows, which meets the per-node power constraint with equality.
Matrix equal_power_rule(const ScenarioStatistics& stats, const IntVector& mode);

// alpha = 1 on observing rows, 0 on jamming rows.
Matrix unit_weights(const ScenarioStatistics& stats, const IntVector& mode);

SurveillanceDesign make_design(const ScenarioStatistics& stats, const IntVector& mode,
                               Combining scheme = Combining::kMr);

// Checks the power constraint, weight bounds, theta sign, and (for PZF) the
// per-node zero-forcing budget |W_m| <= N-1 on observing nodes. Throws
// std::invalid_argument on the first violation.
void validate_design(const SurveillanceDesign& design, const ScenarioStatistics& stats,
                     Combining scheme);

} // namespace cfsurv
