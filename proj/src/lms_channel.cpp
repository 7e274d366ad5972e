#include "satcoex/lms_channel.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "satcoex/constants.hpp"

namespace satcoex {
namespace {

double normal_cdf(double x) { return 0.5 * std::erfc(-x / std::sqrt(2.0)); }

double draw_duration(const LmsStateParams& p, Rng& rng) {
  const double raw = p.duration_sigma > 0.0
                         ? std::exp(rng.normal(p.duration_mu, p.duration_sigma))
                         : std::exp(p.duration_mu);
  return std::max(raw, p.duration_min);
}

LmsState other(LmsState s) {
  return s == LmsState::good ? LmsState::bad : LmsState::good;
}

double phase_of(double frequency_hz, double t) {
  const double cycles = frequency_hz * t;
  return 2.0 * kPi * (cycles - std::floor(cycles));
}

struct Sinusoid {
  double frequency_hz;
  double phase;
  std::complex<double> phasor;
  std::complex<double> step;
};

constexpr std::size_t kResyncSamples = 1024;

}  // namespace

const char* to_string(LmsState state) {
  return state == LmsState::good ? "GOOD" : "BAD";
}

void LmsStateParams::validate() const {
  for (double v : {mu_ma_db, sigma_ma_db, g1, g2_db, h1, h2_db, duration_mu,
                   duration_sigma, duration_min}) {
    if (!std::isfinite(v)) {
      throw std::invalid_argument("state parameters must be finite");
    }
  }
  if (sigma_ma_db < 0.0) throw std::invalid_argument("sigma_MA must be >= 0");
  if (duration_sigma < 0.0) throw std::invalid_argument("duration sigma must be >= 0");
  if (duration_min < 0.0) throw std::invalid_argument("minimum duration must be >= 0");
}

double mean_state_duration(const LmsStateParams& p) {
  const double m = p.duration_min;
  const double s = p.duration_sigma;
  if (s == 0.0) return std::max(std::exp(p.duration_mu), m);
  const double lognormal_mean = std::exp(p.duration_mu + 0.5 * s * s);
  if (m <= 0.0) return lognormal_mean;
  const double log_min = std::log(m);
  return m * normal_cdf((log_min - p.duration_mu) / s) +
         lognormal_mean * normal_cdf((p.duration_mu + s * s - log_min) / s);
}

std::vector<StateInterval> draw_state_sequence(const LmsStateParams& good,
                                               const LmsStateParams& bad,
                                               double total_duration, Rng& rng) {
  if (!(total_duration > 0.0)) {
    throw std::invalid_argument("total duration must be positive");
  }
  good.validate();
  bad.validate();

  const double mean_good = mean_state_duration(good);
  const double mean_bad = mean_state_duration(bad);
  const double p_good = mean_good / (mean_good + mean_bad);
  LmsState state = rng.uniform() < p_good ? LmsState::good : LmsState::bad;

  std::vector<StateInterval> out;
  double t = 0.0;
  while (t < total_duration) {
    const double d = draw_duration(state == LmsState::good ? good : bad, rng);
    if (!(d > 0.0)) throw std::invalid_argument("state duration collapsed to zero");
    out.push_back({state, t, std::min(d, total_duration - t)});
    t += d;
    state = other(state);
  }
  return out;
}

std::vector<StateInterval> intervals_in_seconds(std::span<const StateInterval> intervals,
                                                DurationUnit unit,
                                                double ue_speed_mps) {
  std::vector<StateInterval> out(intervals.begin(), intervals.end());
  if (unit == DurationUnit::seconds) return out;
  if (!(ue_speed_mps > 0.0)) {
    throw std::invalid_argument(
        "distance-based state durations need a positive UE speed");
  }
  for (auto& iv : out) {
    iv.start /= ue_speed_mps;
    iv.duration /= ue_speed_mps;
  }
  return out;
}

LooTriplet draw_loo_triplet(const LmsStateParams& state, Rng& rng,
                            LooDiagnostics* diagnostics) {
  LooTriplet t;
  t.mean_direct_db = state.sigma_ma_db > 0.0
                         ? rng.normal(state.mu_ma_db, state.sigma_ma_db)
                         : state.mu_ma_db;
  t.std_direct_db = state.g1 * t.mean_direct_db + state.g2_db;
  if (t.std_direct_db < 0.0) {
    t.std_direct_db = 0.0;
    if (diagnostics != nullptr) ++diagnostics->clamped_std_direct;
  }
  t.multipath_power_db = state.h1 * t.mean_direct_db + state.h2_db;
  return t;
}

double satellite_speed_mps(double altitude_km, double earth_radius_km) {
  if (!(altitude_km >= 0.0)) throw std::invalid_argument("altitude must be >= 0");
  return std::sqrt(kEarthGm / ((earth_radius_km + altitude_km) * 1e3));
}

double doppler_shift_hz(const DopplerConfig& c) {
  const double r = c.earth_radius_km;
  const double v = satellite_speed_mps(c.satellite_altitude_km, r);
  return (v / kSpeedOfLight) * (r / (r + c.satellite_altitude_km)) *
         std::cos(deg_to_rad(c.elevation_deg)) * c.carrier_hz;
}

double ue_max_doppler_hz(const DopplerConfig& c) {
  if (!(c.ue_speed_mps >= 0.0)) throw std::invalid_argument("UE speed must be >= 0");
  return c.ue_speed_mps * c.carrier_hz / kSpeedOfLight;
}

double doppler_bandwidth_hz(const DopplerConfig& c) {
  const double shift = c.satellite_shift_compensated ? 0.0 : std::abs(doppler_shift_hz(c));
  return shift + ue_max_doppler_hz(c);
}

TripletSource make_triplet_source(const LmsStateParams& good,
                                  const LmsStateParams& bad,
                                  LooDiagnostics* diagnostics) {
  return [good, bad, diagnostics](LmsState s, Rng& rng) {
    return draw_loo_triplet(s == LmsState::good ? good : bad, rng, diagnostics);
  };
}

ChannelSeries generate_series(const TripletSource& triplets,
                              std::span<const StateInterval> intervals,
                              const DopplerConfig& doppler,
                              const SeriesOptions& options, Rng& rng) {
  if (!(options.sample_rate_hz > 0.0)) {
    throw std::invalid_argument("sample rate must be positive");
  }
  const double bandwidth = doppler_bandwidth_hz(doppler);
  if (options.sample_rate_hz < 8.0 * bandwidth) {
    throw std::invalid_argument(
        "sample rate below 8x the Doppler bandwidth of the series");
  }
  if (options.multipath_sinusoids < 1) {
    throw std::invalid_argument("need at least one multipath sinusoid");
  }

  ChannelSeries series;
  series.sample_rate_hz = options.sample_rate_hz;
  if (intervals.empty()) return series;

  const double fs = options.sample_rate_hz;
  const double dt = 1.0 / fs;
  const double total = intervals.back().start + intervals.back().duration;
  const auto n_total = static_cast<std::size_t>(std::floor(total * fs + 1e-9));
  series.samples.resize(n_total);
  series.state_track.resize(n_total);

  const double f_sat = doppler.satellite_shift_compensated ? 0.0 : doppler_shift_hz(doppler);
  const double f_max = ue_max_doppler_hz(doppler);
  const double f_direct = f_max * std::cos(deg_to_rad(doppler.ue_azimuth_deg)) *
                          std::cos(deg_to_rad(doppler.elevation_deg));
  const double direct_phase0 = 2.0 * kPi * rng.uniform();
  const auto n_sin = static_cast<std::size_t>(options.multipath_sinusoids);

  std::vector<Sinusoid> sinusoids(n_sin);
  double last_level_db = 0.0;
  double last_mp_amplitude = 0.0;

  std::size_t i = 0;
  for (std::size_t k = 0; k < intervals.size(); ++k) {
    const StateInterval& iv = intervals[k];
    const bool last = k + 1 == intervals.size();
    const double end = iv.start + iv.duration;
    const LooTriplet tri = triplets(iv.state, rng);
    const double sigma_a = std::max(0.0, tri.std_direct_db);
    const double mp_amplitude = std::pow(10.0, tri.multipath_power_db / 20.0);

    const double tau = options.direct_correlation_s[static_cast<std::size_t>(iv.state)];
    const double rho = tau > 0.0 ? std::exp(-dt / tau) : 0.0;
    const double innovation = std::sqrt(1.0 - rho * rho);
    double z = rng.normal();

    const double per_path = 1.0 / std::sqrt(static_cast<double>(n_sin));
    for (auto& s : sinusoids) {
      s.frequency_hz = f_max * std::cos(2.0 * kPi * rng.uniform());
      s.phase = 2.0 * kPi * rng.uniform();
      s.step = std::polar(1.0, 2.0 * kPi * s.frequency_hz * dt);
    }

    const bool blend = k > 0 && options.transition_s > 0.0;
    const double from_level_db = last_level_db;
    const double from_mp_amplitude = last_mp_amplitude;
    std::size_t since_resync = kResyncSamples;
    for (; i < n_total; ++i) {
      const double t = static_cast<double>(i) * dt;
      if (!last && t >= end) break;

      if (since_resync == kResyncSamples) {
        for (auto& s : sinusoids) {
          s.phasor = std::polar(per_path, s.phase + phase_of(s.frequency_hz, t - iv.start));
        }
        since_resync = 0;
      }

      double level_db = tri.mean_direct_db + sigma_a * z;
      double mp_scale = mp_amplitude;
      if (blend) {
        const double w = std::min(1.0, (t - iv.start) / options.transition_s);
        level_db = from_level_db + w * (level_db - from_level_db);
        mp_scale = from_mp_amplitude + w * (mp_amplitude - from_mp_amplitude);
      }

      std::complex<double> diffuse{0.0, 0.0};
      for (auto& s : sinusoids) {
        diffuse += s.phasor;
        s.phasor *= s.step;
      }
      ++since_resync;

      const std::complex<double> direct =
          std::polar(std::pow(10.0, level_db / 20.0),
                     direct_phase0 + phase_of(f_direct, t));
      std::complex<double> h = direct + mp_scale * diffuse;
      if (f_sat != 0.0) h *= std::polar(1.0, phase_of(f_sat, t));

      series.samples[i] = h;
      series.state_track[i] = iv.state;
      last_level_db = level_db;
      last_mp_amplitude = mp_scale;
      z = rho * z + innovation * rng.normal();
    }
  }
  return series;
}

double series_gain_db(const ChannelSeries& series) {
  if (series.samples.empty()) {
    throw std::invalid_argument("cannot take the gain of an empty series");
  }
  double acc = 0.0;
  for (const auto& h : series.samples) acc += std::norm(h);
  return 10.0 * std::log10(acc / static_cast<double>(series.samples.size()));
}

GainStatistics summarize_gains_db(std::span<const double> per_run_db) {
  if (per_run_db.size() < 2) {
    throw std::invalid_argument("confidence interval needs at least two runs");
  }
  const auto n = static_cast<double>(per_run_db.size());
  double mean = 0.0;
  for (double g : per_run_db) mean += g;
  mean /= n;
  double ss = 0.0;
  for (double g : per_run_db) ss += (g - mean) * (g - mean);
  const double half = 1.959963984540054 * std::sqrt(ss / (n - 1.0)) / std::sqrt(n);
  return {mean, mean - half, mean + half, per_run_db.size()};
}

GainStatistics mean_channel_gain_db(std::span<const ChannelSeries> runs) {
  if (runs.empty()) throw std::invalid_argument("no channel runs given");
  std::vector<double> gains;
  gains.reserve(runs.size());
  for (const auto& r : runs) gains.push_back(series_gain_db(r));
  return summarize_gains_db(gains);
}

ChannelSeries simulate_channel(const LmsStateParams& good, const LmsStateParams& bad,
                               const DopplerConfig& doppler,
                               const ChannelRunOptions& options, Rng& rng,
                               LooDiagnostics* diagnostics) {
  const auto drawn = draw_state_sequence(good, bad, options.duration, rng);
  const auto intervals =
      intervals_in_seconds(drawn, options.duration_unit, doppler.ue_speed_mps);

  auto to_seconds = [&](double d) {
    if (options.duration_unit == DurationUnit::meters) d /= doppler.ue_speed_mps;
    return d > 0.0 ? d : 1.0;
  };

  SeriesOptions series_opts;
  series_opts.sample_rate_hz = options.sample_rate_hz > 0.0
                                   ? options.sample_rate_hz
                                   : std::max(8.0 * doppler_bandwidth_hz(doppler), 1.0);
  series_opts.transition_s = options.transition_s;
  series_opts.direct_correlation_s = {to_seconds(good.duration_min),
                                      to_seconds(bad.duration_min)};
  return generate_series(make_triplet_source(good, bad, diagnostics), intervals,
                         doppler, series_opts, rng);
}

}  // namespace satcoex
