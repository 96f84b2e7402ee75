#include "cfsurv/scenario.hpp"

#include <cmath>
#include <stdexcept>

#include <nlohmann/json.hpp>

namespace cfsurv {

namespace {

// Substream tags; geometry and every shadowing family get disjoint keys so
// generation order never matters.
enum StreamTag : std::uint64_t {
  kMnPos = 1,
  kUtPos = 2,
  kUrPos = 3,
  kShadowObs = 4,
  kShadowJam = 5,
  kShadowUn = 6,
  kShadowMn = 7,
  kDrop = 8,
};

double wrap(double x, double side) {
  double r = std::fmod(x, side);
  if (r < 0.0) r += side;
  return r;
}

double axis_delta(double a, double b, double side) {
  double d = std::fabs(a - b);
  return std::min(d, side - d);
}

Matrix shadowed_gains(const Matrix& dist_km, const SystemConfig& config,
                      const Rng& rng, std::uint64_t tag) {
  Matrix out(dist_km.rows(), dist_km.cols());
  for (int r = 0; r < dist_km.rows(); ++r) {
    for (int c = 0; c < dist_km.cols(); ++c) {
      Rng link = rng.stream(tag, static_cast<std::uint64_t>(r),
                            static_cast<std::uint64_t>(c));
      const double pl = path_loss_db(dist_km(r, c), config);
      const double sh = config.shadow_std_db * link.gaussian();
      out(r, c) = std::pow(10.0, (pl + sh) / 10.0);
    }
  }
  return out;
}

nlohmann::json matrix_to_json(const Matrix& m) {
  nlohmann::json rows = nlohmann::json::array();
  for (int r = 0; r < m.rows(); ++r) {
    nlohmann::json row = nlohmann::json::array();
    for (int c = 0; c < m.cols(); ++c) row.push_back(m(r, c));
    rows.push_back(std::move(row));
  }
  return rows;
}

Matrix matrix_from_json(const nlohmann::json& j) {
  const int rows = static_cast<int>(j.size());
  const int cols = rows > 0 ? static_cast<int>(j.at(0).size()) : 0;
  Matrix m(rows, cols);
  for (int r = 0; r < rows; ++r)
    for (int c = 0; c < cols; ++c) m(r, c) = j.at(r).at(c).get<double>();
  return m;
}

} // namespace

void SystemConfig::validate() const {
  auto fail = [](const std::string& msg) { throw std::invalid_argument("config: " + msg); };
  if (num_mns < 1) fail("num_mns must be >= 1");
  if (antennas_per_mn < 1) fail("antennas_per_mn must be >= 1");
  if (num_pairs < 1) fail("num_pairs must be >= 1");
  if (effective_pilot_len() < 2 * num_pairs)
    fail("pilot_len must be >= 2*num_pairs (orthogonal pilots for both ends of every link)");
  if (area_side_km <= 0.0) fail("area_side_km must be positive");
  if (ur_radius_m < 0.0) fail("ur_radius_m must be nonnegative");
  if (carrier_mhz <= 0.0) fail("carrier_mhz must be positive");
  if (mn_height_m <= 0.0 || user_height_m <= 0.0) fail("antenna heights must be positive");
  if (d0_km <= 0.0 || d1_km <= 0.0) fail("breakpoints must be positive");
  if (d0_km >= d1_km) fail("d0_km must be smaller than d1_km");
  if (shadow_std_db < 0.0) fail("shadow_std_db must be nonnegative");
  if (pilot_mw <= 0.0 || jam_mw <= 0.0 || ut_mw <= 0.0) fail("powers must be positive");
  if (bisect_tol <= 0.0) fail("bisect_tol must be positive");
  if (e_min <= 0.0) fail("e_min must be positive");
  if (alt_iters < 0) fail("alt_iters must be nonnegative");
}

double torus_distance(double ax, double ay, double bx, double by, double side) {
  const double dx = axis_delta(ax, bx, side);
  const double dy = axis_delta(ay, by, side);
  return std::hypot(dx, dy);
}

double path_loss_offset_db(const SystemConfig& config) {
  const double lf = std::log10(config.carrier_mhz);
  return 46.3 + 33.9 * lf - 13.82 * std::log10(config.mn_height_m) -
         (1.1 * lf - 0.7) * config.user_height_m + (1.56 * lf - 0.8);
}

double path_loss_db(double d_km, const SystemConfig& config) {
  if (d_km < 0.0) throw std::invalid_argument("path_loss_db: negative distance");
  const double l = path_loss_offset_db(config);
  if (d_km > config.d1_km) return -l - 35.0 * std::log10(d_km);
  if (d_km > config.d0_km)
    return -l - 15.0 * std::log10(config.d1_km) - 20.0 * std::log10(d_km);
  return -l - 15.0 * std::log10(config.d1_km) - 20.0 * std::log10(config.d0_km);
}

double estimation_variance(double beta, double tau_t, double rho_t) {
  if (beta < 0.0) throw std::invalid_argument("estimation_variance: negative gain");
  if (beta == 0.0) return 0.0;
  const double s = tau_t * rho_t * beta;
  return s * beta / (s + 1.0);
}

NetworkGeometry place_network(const SystemConfig& config, const Rng& rng) {
  const double side = config.area_side_km;
  NetworkGeometry geo;
  geo.mn_pos.resize(config.num_mns, 2);
  geo.ut_pos.resize(config.num_pairs, 2);
  geo.ur_pos.resize(config.num_pairs, 2);

  for (int m = 0; m < config.num_mns; ++m) {
    Rng s = rng.stream(kMnPos, static_cast<std::uint64_t>(m));
    geo.mn_pos(m, 0) = side * (1.0 - s.uniform());
    geo.mn_pos(m, 1) = side * (1.0 - s.uniform());
  }
  for (int k = 0; k < config.num_pairs; ++k) {
    Rng s = rng.stream(kUtPos, static_cast<std::uint64_t>(k));
    geo.ut_pos(k, 0) = side * (1.0 - s.uniform());
    geo.ut_pos(k, 1) = side * (1.0 - s.uniform());
  }
  const double radius_km = config.ur_radius_m / 1000.0;
  for (int k = 0; k < config.num_pairs; ++k) {
    Rng s = rng.stream(kUrPos, static_cast<std::uint64_t>(k));
    const double r = radius_km * std::sqrt(s.uniform());
    const double phi = 2.0 * M_PI * s.uniform();
    geo.ur_pos(k, 0) = wrap(geo.ut_pos(k, 0) + r * std::cos(phi), side);
    geo.ur_pos(k, 1) = wrap(geo.ut_pos(k, 1) + r * std::sin(phi), side);
  }
  return geo;
}

ScenarioStatistics build_statistics(const NetworkGeometry& geometry,
                                    const SystemConfig& config, const Rng& rng) {
  const int m_count = static_cast<int>(geometry.mn_pos.rows());
  const int k_count = static_cast<int>(geometry.ut_pos.rows());
  const double side = config.area_side_km;

  auto pair_dist = [&](const Matrix& a, int i, const Matrix& b, int j) {
    return torus_distance(a(i, 0), a(i, 1), b(j, 0), b(j, 1), side);
  };

  Matrix d_obs(m_count, k_count), d_jam(m_count, k_count);
  for (int m = 0; m < m_count; ++m)
    for (int k = 0; k < k_count; ++k) {
      d_obs(m, k) = pair_dist(geometry.mn_pos, m, geometry.ut_pos, k);
      d_jam(m, k) = pair_dist(geometry.mn_pos, m, geometry.ur_pos, k);
    }
  Matrix d_un(k_count, k_count);
  for (int l = 0; l < k_count; ++l)
    for (int k = 0; k < k_count; ++k)
      d_un(l, k) = pair_dist(geometry.ut_pos, l, geometry.ur_pos, k);
  Matrix d_mn(m_count, m_count);
  for (int m = 0; m < m_count; ++m)
    for (int i = 0; i < m_count; ++i)
      d_mn(m, i) = pair_dist(geometry.mn_pos, m, geometry.mn_pos, i);

  ScenarioStatistics stats;
  stats.antennas = config.antennas_per_mn;
  stats.beta_obs = shadowed_gains(d_obs, config, rng, kShadowObs);
  stats.beta_jam = shadowed_gains(d_jam, config, rng, kShadowJam);
  stats.beta_un = shadowed_gains(d_un, config, rng, kShadowUn);
  stats.beta_mn = shadowed_gains(d_mn, config, rng, kShadowMn);
  stats.beta_mn.diagonal().setZero();

  stats.rho_pilot = config.rho_pilot();
  stats.rho_jam = config.rho_jam();
  stats.rho_ut = config.rho_ut();

  const double tau = config.effective_pilot_len();
  stats.gamma_obs.resize(m_count, k_count);
  stats.gamma_jam.resize(m_count, k_count);
  for (int m = 0; m < m_count; ++m)
    for (int k = 0; k < k_count; ++k) {
      stats.gamma_obs(m, k) = estimation_variance(stats.beta_obs(m, k), tau, stats.rho_pilot);
      stats.gamma_jam(m, k) = estimation_variance(stats.beta_jam(m, k), tau, stats.rho_pilot);
    }
  return stats;
}

ScenarioStatistics make_scenario(const SystemConfig& config, std::uint64_t drop) {
  config.validate();
  Rng rng = Rng(config.rng_seed).stream(kDrop, drop);
  return build_statistics(place_network(config, rng), config, rng);
}

std::string statistics_to_json(const ScenarioStatistics& stats) {
  nlohmann::json j;
  j["antennas"] = stats.antennas;
  j["rho_pilot"] = stats.rho_pilot;
  j["rho_jam"] = stats.rho_jam;
  j["rho_ut"] = stats.rho_ut;
  j["beta_obs"] = matrix_to_json(stats.beta_obs);
  j["beta_jam"] = matrix_to_json(stats.beta_jam);
  j["beta_un"] = matrix_to_json(stats.beta_un);
  j["beta_mn"] = matrix_to_json(stats.beta_mn);
  j["gamma_obs"] = matrix_to_json(stats.gamma_obs);
  j["gamma_jam"] = matrix_to_json(stats.gamma_jam);
  return j.dump(2);
}

ScenarioStatistics statistics_from_json(const std::string& text) {
  const nlohmann::json j = nlohmann::json::parse(text);
  ScenarioStatistics stats;
  stats.antennas = j.at("antennas").get<int>();
  stats.rho_pilot = j.at("rho_pilot").get<double>();
  stats.rho_jam = j.at("rho_jam").get<double>();
  stats.rho_ut = j.at("rho_ut").get<double>();
  stats.beta_obs = matrix_from_json(j.at("beta_obs"));
  stats.beta_jam = matrix_from_json(j.at("beta_jam"));
  stats.beta_un = matrix_from_json(j.at("beta_un"));
  stats.beta_mn = matrix_from_json(j.at("beta_mn"));
  stats.gamma_obs = matrix_from_json(j.at("gamma_obs"));
  stats.gamma_jam = matrix_from_json(j.at("gamma_jam"));
  return stats;
}

} // namespace cfsurv
