#pragma once

// Two-state (GOOD/BAD) land-mobile-satellite fading generator.
//
// State durations follow a semi-Markov chain with log-normal sojourn times.
// Within a state the coefficient is Loo distributed: a log-normal direct path
// plus a Rayleigh diffuse component.

#include <array>
#include <complex>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <span>
#include <vector>

#include "satcoex/rng.hpp"

namespace satcoex {

enum class LmsState : std::uint8_t { good = 0, bad = 1 };

const char* to_string(LmsState state);

enum class DurationUnit { seconds, meters };

struct LooTriplet {
  double mean_direct_db = 0.0;      // M_A
  double std_direct_db = 0.0;       // Sigma_A
  double multipath_power_db = 0.0;  // MP
};

// Statistics of one state. Durations are log-normal: ln(duration) is normal
// with mean `duration_mu` and standard deviation `duration_sigma`, and draws
// are clamped below by `duration_min`.
struct LmsStateParams {
  double mu_ma_db = 0.0;
  double sigma_ma_db = 0.0;
  double g1 = 0.0;
  double g2_db = 0.0;
  double h1 = 0.0;
  double h2_db = 0.0;
  double duration_mu = 0.0;
  double duration_sigma = 0.0;
  double duration_min = 0.0;

  void validate() const;
};

// E[max(D, duration_min)] for the log-normal duration D.
double mean_state_duration(const LmsStateParams& params);

struct StateInterval {
  LmsState state = LmsState::good;
  double start = 0.0;
  double duration = 0.0;
};

// Alternating GOOD/BAD intervals covering [0, total_duration]; the last one is
// truncated at total_duration. The first state is GOOD with probability
// mean_good / (mean_good + mean_bad).
std::vector<StateInterval> draw_state_sequence(const LmsStateParams& good,
                                               const LmsStateParams& bad,
                                               double total_duration, Rng& rng);

// Converts distance-based intervals to seconds at a constant UE speed.
std::vector<StateInterval> intervals_in_seconds(std::span<const StateInterval> intervals,
                                                DurationUnit unit,
                                                double ue_speed_mps);

struct LooDiagnostics {
  std::size_t clamped_std_direct = 0;
};

// M_A ~ N(mu_MA, sigma_MA), Sigma_A = g1 M_A + g2 (clamped at 0), MP = h1 M_A + h2.
LooTriplet draw_loo_triplet(const LmsStateParams& state, Rng& rng,
                            LooDiagnostics* diagnostics = nullptr);

struct DopplerConfig {
  double satellite_altitude_km = 600.0;
  double elevation_deg = 30.0;
  double carrier_hz = 2.17e9;
  double ue_speed_mps = 3.0;
  double ue_azimuth_deg = 0.0;
  double earth_radius_km = 6378.0;
  // The receiver tracks the satellite carrier, so the common shift is removed.
  bool satellite_shift_compensated = false;
};

// Circular orbital speed sqrt(GM / (R + h)).
double satellite_speed_mps(double altitude_km, double earth_radius_km = 6378.0);

// (v_sat / c) * (R / (R + h)) * cos(elevation) * f_c.
double doppler_shift_hz(const DopplerConfig& config);

// Maximum Doppler of the diffuse component from UE motion, v / lambda.
double ue_max_doppler_hz(const DopplerConfig& config);

// One-sided extent of the coefficient spectrum around 0 Hz.
double doppler_bandwidth_hz(const DopplerConfig& config);

struct SeriesOptions {
  double sample_rate_hz = 0.0;
  // Crossfade length between consecutive states; 0 switches hard.
  double transition_s = 0.0;
  // Correlation time of the direct-path level, indexed by LmsState.
  std::array<double, 2> direct_correlation_s{1.0, 1.0};
  int multipath_sinusoids = 64;
};

struct ChannelSeries {
  double sample_rate_hz = 0.0;
  std::vector<std::complex<double>> samples;
  std::vector<LmsState> state_track;
};

using TripletSource = std::function<LooTriplet(LmsState, Rng&)>;

// Draws one triplet per interval from the matching state's parameters.
TripletSource make_triplet_source(const LmsStateParams& good,
                                  const LmsStateParams& bad,
                                  LooDiagnostics* diagnostics = nullptr);

// Throws std::invalid_argument when sample_rate_hz < 8 * doppler_bandwidth_hz.
// Interval times are in seconds.
ChannelSeries generate_series(const TripletSource& triplets,
                              std::span<const StateInterval> intervals,
                              const DopplerConfig& doppler,
                              const SeriesOptions& options, Rng& rng);

// 10*log10(mean |h|^2) of one series.
double series_gain_db(const ChannelSeries& series);

struct GainStatistics {
  double mean_db = 0.0;
  double ci_low_db = 0.0;
  double ci_high_db = 0.0;
  std::size_t runs = 0;
};

// Across-run mean of per-run gains with a normal-approximation 95% interval.
// Needs at least two runs.
GainStatistics summarize_gains_db(std::span<const double> per_run_db);
GainStatistics mean_channel_gain_db(std::span<const ChannelSeries> runs);

// One full realization: state sequence, triplets and series.
struct ChannelRunOptions {
  double duration = 60.0;  // in the table's duration unit
  DurationUnit duration_unit = DurationUnit::seconds;
  double sample_rate_hz = 0.0;  // 0 picks 8x the Doppler bandwidth
  double transition_s = 0.0;
};

ChannelSeries simulate_channel(const LmsStateParams& good, const LmsStateParams& bad,
                               const DopplerConfig& doppler,
                               const ChannelRunOptions& options, Rng& rng,
                               LooDiagnostics* diagnostics = nullptr);

}  // namespace satcoex
