#pragma once

// Two-state parameter tables keyed by (environment, elevation, band).
//
// File format (plain text, '#' starts a comment):
//
//   synthetic = true            # optional header directives
//   duration_unit = seconds     # seconds | meters
//   duration_log_base = e       # e | 10, base of duration_mu / duration_sigma
//
//   # env  elev band state mu_MA sigma_MA g1 g2 h1 h2 dur_mu dur_sigma dur_min
//   Urban  20   S    GOOD  -1.5  1.2      ...
//
// Every (environment, elevation, band) must define both GOOD and BAD, and only
// combinations for which measurements exist in the 1.5-3 GHz campaign are
// accepted (Residential has no 45 degree entry).

#include <cstddef>
#include <filesystem>
#include <iosfwd>
#include <map>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <tuple>
#include <vector>

#include "satcoex/lms_channel.hpp"

namespace satcoex {

enum class Environment { urban, suburban, rural_wooded, village, residential };

std::string to_string(Environment env);
std::optional<Environment> parse_environment(std::string_view name);

std::span<const int> tabulated_elevations_deg();
bool is_available(Environment env, int elevation_deg);

struct LmsStatePair {
  LmsStateParams good;
  LmsStateParams bad;
};

struct LmsTableKey {
  Environment environment = Environment::urban;
  int elevation_deg = 20;
  std::string band = "S";

  auto operator<=>(const LmsTableKey&) const = default;
};

class TableFormatError : public std::runtime_error {
 public:
  TableFormatError(const std::string& source, std::size_t line, const std::string& what);
  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

class LmsEnvironmentTable {
 public:
  static LmsEnvironmentTable parse(std::istream& in, const std::string& source_name);
  static LmsEnvironmentTable load(const std::filesystem::path& path);

  // Throws std::out_of_range naming the combination when it is missing or
  // has no measurements.
  const LmsStatePair& lookup(Environment env, int elevation_deg,
                             const std::string& band) const;

  // Nearest tabulated elevation not above `elevation_deg` (20 deg for
  // anything lower) that exists for the environment.
  int binned_elevation(Environment env, double elevation_deg) const;

  std::vector<LmsTableKey> keys() const;
  bool synthetic() const { return synthetic_; }
  DurationUnit duration_unit() const { return duration_unit_; }

 private:
  std::map<LmsTableKey, LmsStatePair> entries_;
  bool synthetic_ = false;
  DurationUnit duration_unit_ = DurationUnit::seconds;
};

// Built-in placeholder table. Its values are invented for exercising the
// generator and are NOT measured statistics.
std::string_view synthetic_lms_table_text();
LmsEnvironmentTable synthetic_lms_table();

}  // namespace satcoex
