#include "satcoex/lms_table.hpp"

#include <array>
#include <charconv>
#include <cmath>
#include <fstream>
#include <sstream>

namespace satcoex {
namespace {

constexpr std::array<int, 5> kElevations{20, 30, 45, 60, 70};

constexpr std::string_view kSyntheticTable = R"TABLE(
# SYNTHETIC two-state parameter set for the S band (1.5-3 GHz).
# These numbers are placeholders chosen to exercise the generator. They are
# not measured statistics; install a transcription of the measured tables
# for quantitative results.
synthetic = true
duration_unit = seconds
duration_log_base = e

# env        elev band state  mu_MA  sigma_MA   g1     g2     h1     h2  dur_mu dur_sigma dur_min
Urban          20 S    GOOD   -1.20     1.00  -0.05   0.90   0.05 -16.00    2.00      0.70    1.00
Urban          20 S    BAD    -9.00     3.00  -0.12   1.20   0.25 -12.00    1.30      0.60    1.00
Urban          30 S    GOOD   -1.02     0.90  -0.05   0.82   0.05 -17.00    2.12      0.70    1.00
Urban          30 S    BAD    -8.20     2.80  -0.12   1.14   0.25 -12.60    1.24      0.60    1.00
Urban          45 S    GOOD   -0.75     0.75  -0.05   0.70   0.05 -18.50    2.30      0.70    1.00
Urban          45 S    BAD    -7.00     2.50  -0.12   1.05   0.25 -13.50    1.15      0.60    1.00
Urban          60 S    GOOD   -0.48     0.60  -0.05   0.58   0.05 -20.00    2.48      0.70    1.00
Urban          60 S    BAD    -5.80     2.20  -0.12   0.96   0.25 -14.40    1.06      0.60    1.00
Urban          70 S    GOOD   -0.30     0.50  -0.05   0.50   0.05 -21.00    2.60      0.70    1.00
Urban          70 S    BAD    -5.00     2.00  -0.12   0.90   0.25 -15.00    1.00      0.60    1.00
Suburban       20 S    GOOD   -1.02     1.00  -0.05   0.90   0.05 -17.05    2.17      0.70    1.00
Suburban       20 S    BAD    -7.95     3.00  -0.12   1.20   0.25 -12.70    1.20      0.60    1.00
Suburban       30 S    GOOD   -0.84     0.90  -0.05   0.82   0.05 -18.05    2.29      0.70    1.00
Suburban       30 S    BAD    -7.15     2.80  -0.12   1.14   0.25 -13.30    1.14      0.60    1.00
Suburban       45 S    GOOD   -0.57     0.75  -0.05   0.70   0.05 -19.55    2.47      0.70    1.00
Suburban       45 S    BAD    -5.95     2.50  -0.12   1.05   0.25 -14.20    1.05      0.60    1.00
Suburban       60 S    GOOD   -0.30     0.60  -0.05   0.58   0.05 -21.05    2.65      0.70    1.00
Suburban       60 S    BAD    -4.75     2.20  -0.12   0.96   0.25 -15.10    0.96      0.60    1.00
Suburban       70 S    GOOD   -0.12     0.50  -0.05   0.50   0.05 -22.05    2.77      0.70    1.00
Suburban       70 S    BAD    -3.95     2.00  -0.12   0.90   0.25 -15.70    0.90      0.60    1.00
Village        20 S    GOOD   -1.07     1.00  -0.05   0.90   0.05 -16.75    2.12      0.70    1.00
Village        20 S    BAD    -8.25     3.00  -0.12   1.20   0.25 -12.50    1.23      0.60    1.00
Village        30 S    GOOD   -0.90     0.90  -0.05   0.82   0.05 -17.75    2.25      0.70    1.00
Village        30 S    BAD    -7.45     2.80  -0.12   1.14   0.25 -13.10    1.17      0.60    1.00
Village        45 S    GOOD   -0.62     0.75  -0.05   0.70   0.05 -19.25    2.42      0.70    1.00
Village        45 S    BAD    -6.25     2.50  -0.12   1.05   0.25 -14.00    1.08      0.60    1.00
Village        60 S    GOOD   -0.35     0.60  -0.05   0.58   0.05 -20.75    2.60      0.70    1.00
Village        60 S    BAD    -5.05     2.20  -0.12   0.96   0.25 -14.90    0.99      0.60    1.00
Village        70 S    GOOD   -0.17     0.50  -0.05   0.50   0.05 -21.75    2.73      0.70    1.00
Village        70 S    BAD    -4.25     2.00  -0.12   0.90   0.25 -15.50    0.93      0.60    1.00
RuralWooded    20 S    GOOD   -1.12     1.00  -0.05   0.90   0.05 -16.45    2.08      0.70    1.00
RuralWooded    20 S    BAD    -8.55     3.00  -0.12   1.20   0.25 -12.30    1.26      0.60    1.00
RuralWooded    30 S    GOOD   -0.95     0.90  -0.05   0.82   0.05 -17.45    2.20      0.70    1.00
RuralWooded    30 S    BAD    -7.75     2.80  -0.12   1.14   0.25 -12.90    1.20      0.60    1.00
RuralWooded    45 S    GOOD   -0.68     0.75  -0.05   0.70   0.05 -18.95    2.38      0.70    1.00
RuralWooded    45 S    BAD    -6.55     2.50  -0.12   1.05   0.25 -13.80    1.11      0.60    1.00
RuralWooded    60 S    GOOD   -0.40     0.60  -0.05   0.58   0.05 -20.45    2.56      0.70    1.00
RuralWooded    60 S    BAD    -5.35     2.20  -0.12   0.96   0.25 -14.70    1.02      0.60    1.00
RuralWooded    70 S    GOOD   -0.22     0.50  -0.05   0.50   0.05 -21.45    2.68      0.70    1.00
RuralWooded    70 S    BAD    -4.55     2.00  -0.12   0.90   0.25 -15.30    0.95      0.60    1.00
Residential    20 S    GOOD   -1.05     1.00  -0.05   0.90   0.05 -16.90    2.15      0.70    1.00
Residential    20 S    BAD    -8.10     3.00  -0.12   1.20   0.25 -12.60    1.21      0.60    1.00
Residential    30 S    GOOD   -0.87     0.90  -0.05   0.82   0.05 -17.90    2.27      0.70    1.00
Residential    30 S    BAD    -7.30     2.80  -0.12   1.14   0.25 -13.20    1.15      0.60    1.00
Residential    60 S    GOOD   -0.33     0.60  -0.05   0.58   0.05 -20.90    2.63      0.70    1.00
Residential    60 S    BAD    -4.90     2.20  -0.12   0.96   0.25 -15.00    0.97      0.60    1.00
Residential    70 S    GOOD   -0.15     0.50  -0.05   0.50   0.05 -21.90    2.75      0.70    1.00
Residential    70 S    BAD    -4.10     2.00  -0.12   0.90   0.25 -15.60    0.91      0.60    1.00
)TABLE";

std::string trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return std::string(s.substr(first, last - first + 1));
}

std::vector<std::string> split_ws(const std::string& s) {
  std::istringstream in(s);
  std::vector<std::string> out;
  for (std::string tok; in >> tok;) out.push_back(tok);
  return out;
}

std::optional<double> parse_number(const std::string& tok) {
  double v = 0.0;
  const auto* end = tok.data() + tok.size();
  const auto [ptr, ec] = std::from_chars(tok.data(), end, v);
  if (ec != std::errc{} || ptr != end || !std::isfinite(v)) return std::nullopt;
  return v;
}

}  // namespace

std::string to_string(Environment env) {
  switch (env) {
    case Environment::urban: return "Urban";
    case Environment::suburban: return "Suburban";
    case Environment::rural_wooded: return "RuralWooded";
    case Environment::village: return "Village";
    case Environment::residential: return "Residential";
  }
  return "Unknown";
}

std::optional<Environment> parse_environment(std::string_view name) {
  for (auto env : {Environment::urban, Environment::suburban, Environment::rural_wooded,
                   Environment::village, Environment::residential}) {
    if (name == to_string(env)) return env;
  }
  return std::nullopt;
}

std::span<const int> tabulated_elevations_deg() { return kElevations; }

bool is_available(Environment env, int elevation_deg) {
  bool tabulated = false;
  for (int e : kElevations) tabulated = tabulated || e == elevation_deg;
  if (!tabulated) return false;
  return !(env == Environment::residential && elevation_deg == 45);
}

TableFormatError::TableFormatError(const std::string& source, std::size_t line,
                                   const std::string& what)
    : std::runtime_error(source + ":" + std::to_string(line) + ": " + what), line_(line) {}

LmsEnvironmentTable LmsEnvironmentTable::parse(std::istream& in,
                                               const std::string& source_name) {
  LmsEnvironmentTable table;
  double log_scale = 1.0;
  // Which states each key has defined, and where it was first seen.
  std::map<LmsTableKey, std::pair<std::array<bool, 2>, std::size_t>> seen;

  std::string raw;
  std::size_t line_no = 0;
  while (std::getline(in, raw)) {
    ++line_no;
    const auto hash = raw.find('#');
    const std::string line = trim(hash == std::string::npos ? raw : raw.substr(0, hash));
    if (line.empty()) continue;

    auto fail = [&](const std::string& msg) {
      throw TableFormatError(source_name, line_no, msg);
    };

    if (const auto eq = line.find('='); eq != std::string::npos) {
      const std::string key = trim(line.substr(0, eq));
      const std::string value = trim(line.substr(eq + 1));
      if (key == "synthetic") {
        if (value != "true" && value != "false") fail("synthetic must be true or false");
        table.synthetic_ = value == "true";
      } else if (key == "duration_unit") {
        if (value == "seconds") {
          table.duration_unit_ = DurationUnit::seconds;
        } else if (value == "meters") {
          table.duration_unit_ = DurationUnit::meters;
        } else {
          fail("duration_unit must be seconds or meters");
        }
      } else if (key == "duration_log_base") {
        if (value == "e") {
          log_scale = 1.0;
        } else if (value == "10") {
          log_scale = std::log(10.0);
        } else {
          fail("duration_log_base must be e or 10");
        }
      } else {
        fail("unknown directive '" + key + "'");
      }
      continue;
    }

    const auto tok = split_ws(line);
    if (tok.size() != 13) {
      fail("expected 13 fields, found " + std::to_string(tok.size()));
    }
    const auto env = parse_environment(tok[0]);
    if (!env) fail("unknown environment '" + tok[0] + "'");
    const auto elev = parse_number(tok[1]);
    if (!elev || *elev != std::floor(*elev)) fail("elevation must be an integer");
    const int elev_deg = static_cast<int>(*elev);
    if (!is_available(*env, elev_deg)) {
      fail("no measurements exist for " + tok[0] + " at " + tok[1] + " deg");
    }
    LmsState state{};
    if (tok[3] == "GOOD") {
      state = LmsState::good;
    } else if (tok[3] == "BAD") {
      state = LmsState::bad;
    } else {
      fail("state must be GOOD or BAD");
    }

    std::array<double, 9> v{};
    for (std::size_t i = 0; i < v.size(); ++i) {
      const auto x = parse_number(tok[4 + i]);
      if (!x) fail("field " + std::to_string(5 + i) + " is not a number: '" + tok[4 + i] + "'");
      v[i] = *x;
    }
    LmsStateParams p{v[0], v[1], v[2], v[3], v[4], v[5], v[6], v[7], v[8]};
    try {
      p.validate();
    } catch (const std::invalid_argument& e) {
      fail(e.what());
    }

    const LmsTableKey key{*env, elev_deg, tok[2]};
    auto& [defined, first_line] = seen.try_emplace(key, std::array<bool, 2>{false, false}, line_no)
                                      .first->second;
    auto& slot = defined[static_cast<std::size_t>(state)];
    if (slot) fail("duplicate " + std::string(to_string(state)) + " record");
    slot = true;
    (state == LmsState::good ? table.entries_[key].good : table.entries_[key].bad) = p;
  }

  // Durations are stored as natural-log parameters.
  for (auto& [key, pair] : table.entries_) {
    for (LmsStateParams* p : {&pair.good, &pair.bad}) {
      p->duration_mu *= log_scale;
      p->duration_sigma *= log_scale;
    }
  }

  for (const auto& [key, info] : seen) {
    if (!info.first[0] || !info.first[1]) {
      throw TableFormatError(source_name, info.second,
                             to_string(key.environment) + " " +
                                 std::to_string(key.elevation_deg) + " " + key.band +
                                 " lacks a " + (info.first[0] ? "BAD" : "GOOD") + " record");
    }
  }
  if (table.entries_.empty()) {
    throw TableFormatError(source_name, line_no, "table has no records");
  }
  return table;
}

LmsEnvironmentTable LmsEnvironmentTable::load(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open parameter table " + path.string());
  return parse(in, path.string());
}

const LmsStatePair& LmsEnvironmentTable::lookup(Environment env, int elevation_deg,
                                                const std::string& band) const {
  const std::string what = to_string(env) + " at " + std::to_string(elevation_deg) +
                           " deg, band " + band;
  if (!is_available(env, elevation_deg)) {
    throw std::out_of_range("no measured two-state parameters exist for " + what);
  }
  const auto it = entries_.find({env, elevation_deg, band});
  if (it == entries_.end()) {
    throw std::out_of_range("parameter table has no entry for " + what);
  }
  return it->second;
}

int LmsEnvironmentTable::binned_elevation(Environment env, double elevation_deg) const {
  int best = kElevations.front();
  for (int e : kElevations) {
    if (is_available(env, e) && e <= elevation_deg) best = e;
  }
  return best;
}

std::vector<LmsTableKey> LmsEnvironmentTable::keys() const {
  std::vector<LmsTableKey> out;
  out.reserve(entries_.size());
  for (const auto& [key, pair] : entries_) out.push_back(key);
  return out;
}

std::string_view synthetic_lms_table_text() { return kSyntheticTable.substr(1); }

LmsEnvironmentTable synthetic_lms_table() {
  std::istringstream in{std::string(synthetic_lms_table_text())};
  return LmsEnvironmentTable::parse(in, "<built-in synthetic table>");
}

}  // namespace satcoex
