#pragma once

#include <cmath>
#include <cstdint>
#include <string>

namespace cfsurv {

// Physical and algorithmic parameters of one surveillance deployment.
// Defaults follow the usual cell-free evaluation setup: 1 km wrapped area,
// 1.9 GHz carrier, three-slope path loss with 4 dB shadowing, -92 dBm noise,
// 250 mW pilots and untrusted transmitters, 1 W monitoring nodes.
struct SystemConfig {
  int num_mns = 40;          // M
  int antennas_per_mn = 6;   // N
  int num_pairs = 20;        // K untrusted links

  double area_side_km = 1.0;     // D
  double ur_radius_m = 150.0;    // receiver scatter radius around its transmitter
  double carrier_mhz = 1900.0;
  double mn_height_m = 15.0;
  double user_height_m = 1.65;
  double d0_km = 0.010;
  double d1_km = 0.050;
  double shadow_std_db = 4.0;
  double noise_dbm = -92.0;

  int pilot_len = 0;             // tau_t; 0 = auto (2K)
  double pilot_mw = 250.0;
  double jam_mw = 1000.0;
  double ut_mw = 250.0;
  double si_ratio_db = 30.0;     // residual self-interference over noise (co-located only)

  std::uint64_t rng_seed = 1;

  // Solver knobs.
  double bisect_tol = 1e-3;      // bracket width target, relative to the initial upper bound
  double e_min = 1e-4;           // greedy / grouping stopping threshold (absolute MSP)
  int alt_iters = 2;             // alternating power/weight super-iterations
  bool greedy_joint_eval = false; // re-optimize power+weights inside each greedy candidate

  int effective_pilot_len() const { return pilot_len > 0 ? pilot_len : 2 * num_pairs; }
  double noise_mw() const { return std::pow(10.0, noise_dbm / 10.0); }
  double rho_pilot() const { return pilot_mw / noise_mw(); }
  double rho_jam() const { return jam_mw / noise_mw(); }
  double rho_ut() const { return ut_mw / noise_mw(); }

  // Throws std::invalid_argument with a description of the first violation.
  void validate() const;
};

} // namespace cfsurv
