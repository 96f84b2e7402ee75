#pragma once

#include <string>

#include "cfsurv/config.hpp"
#include "cfsurv/rng.hpp"
#include "cfsurv/types.hpp"

namespace cfsurv {

// Node positions in km on the [0, D) x [0, D) wrapped square.
struct NetworkGeometry {
  Matrix mn_pos;  // M x 2
  Matrix ut_pos;  // K x 2
  Matrix ur_pos;  // K x 2
};

// Long-term channel statistics, everything in linear scale and already
// noise-normalized. Rows are monitoring nodes, columns untrusted links,
// except beta_un (transmitter l -> receiver k) and beta_mn (node i -> node m,
// zero diagonal).
struct ScenarioStatistics {
  int antennas = 1;  // N, carried along so downstream math is self-contained
  Matrix beta_obs;   // M x K, node <- transmitter
  Matrix beta_jam;   // M x K, node -> receiver
  Matrix beta_un;    // K x K
  Matrix beta_mn;    // M x M
  Matrix gamma_obs;  // M x K, MMSE estimate variances
  Matrix gamma_jam;  // M x K
  double rho_pilot = 0.0;
  double rho_jam = 0.0;
  double rho_ut = 0.0;

  int num_mns() const { return static_cast<int>(beta_obs.rows()); }
  int num_links() const { return static_cast<int>(beta_obs.cols()); }
};

// Minimum-image metric on the wrapped square of the given side.
double torus_distance(double ax, double ay, double bx, double by, double side);

// Offset constant of the three-slope model (dB), from carrier frequency and
// antenna heights.
double path_loss_offset_db(const SystemConfig& config);

// Three-slope path loss in dB (a negative gain). Distances in km; the inner
// region below d0 is flat and the model is continuous at both breakpoints.
double path_loss_db(double d_km, const SystemConfig& config);

// MMSE channel-estimate variance gamma = tau*rho*beta^2 / (tau*rho*beta + 1).
double estimation_variance(double beta, double tau_t, double rho_t);

// Uniform node drop; receivers land uniformly in a disc around their
// transmitter and are wrapped back onto the square. Deterministic in (config,
// rng key): every node owns its own substream.
NetworkGeometry place_network(const SystemConfig& config, const Rng& rng);

// Large-scale gains with i.i.d. log-normal shadowing per directed link, plus
// estimate variances and noise-normalized powers.
ScenarioStatistics build_statistics(const NetworkGeometry& geometry,
                                    const SystemConfig& config, const Rng& rng);

// Convenience: place + build from the config's own seed plus a drop index.
ScenarioStatistics make_scenario(const SystemConfig& config, std::uint64_t drop = 0);

std::string statistics_to_json(const ScenarioStatistics& stats);
ScenarioStatistics statistics_from_json(const std::string& text);

} // namespace cfsurv
