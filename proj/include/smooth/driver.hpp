#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "smooth/charts.hpp"

namespace smooth {

enum class Mode { hironaka, hybrid, jacobian };
enum class Outcome { smooth, singular, indeterminate };

std::string to_string(Mode mode);
std::string to_string(Outcome outcome);
/// Throws std::invalid_argument for unknown names.
Mode parse_mode(const std::string& name);

/// Position of a task in the chart tree. For a chart with key P:
///   P+[0]        equality / dimension test
///   P+[1,k,0]    check of frame k
///   P+[1,k,1]    frame k construction and the cover test after it
///   P+[2]        descent
///   P+[3,j]      child chart j
/// Projective runs prefix everything with the affine chart index.
/// Keys compare lexicographically; this is the sequential order.
using TaskKey = std::vector<std::uint32_t>;

struct Limits {
  std::optional<double> time_limit_seconds;
  std::optional<std::size_t> max_basis_size;
  std::optional<std::size_t> max_memory_bytes;
};

struct Config {
  Mode mode = Mode::hironaka;
  /// hybrid: number of descents before switching to the embedded criterion.
  std::optional<unsigned> descent_depth;
  /// hybrid: switch when the ambient reaches this codimension above X
  /// (depth = codim X - to_codim); ignored when descent_depth is set.
  std::optional<unsigned> to_codim;
  unsigned jobs = 1;
  std::uint64_t seed = 0;
  Limits limits;
  bool strict_cover = false;
  bool combinations = true;
  bool lift_cover = false;
  /// Pick runnable tasks in a seeded random order instead of key order.
  std::optional<std::uint64_t> schedule_seed;
  /// Record Groebner starts, failures and cover determinants.
  bool trace = false;
};

struct Witness {
  TaskKey key;
  std::optional<std::size_t> projective_chart;
  /// Child indices from the root chart down to the failing chart.
  std::vector<std::uint32_t> chart_path;
  unsigned depth = 0;
  std::vector<std::size_t> frame_columns;
  /// "delta", "embedded" or "jacobian".
  std::string phase;
  std::size_t ideal_fingerprint = 0;
};

struct Stats {
  std::size_t charts = 0;
  std::size_t frames = 0;
  std::size_t descents = 0;
  /// Groebner basis requests, cache hits included.
  std::size_t groebner_runs = 0;
};

struct TraceEvent {
  enum class Kind { groebner_start, failure };
  Kind kind;
  TaskKey key;
  double ms;
};

struct CoverRecord {
  TaskKey chart;
  Ideal ambient;
  Polynomial localizer;
  std::vector<Polynomial> determinants;
  bool complete = false;
};

struct Verdict {
  Outcome outcome = Outcome::smooth;
  std::optional<Witness> witness;
  /// Counted over tasks ordered at or before the witness (all tasks when
  /// there is none), so equal for every schedule.
  Stats stats;
  /// Thread CPU time per phase.
  std::map<std::string, double> phase_ms;
  double wall_ms = 0;
  /// Critical path of the task tree in CPU time.
  double sim_parallel_ms = 0;
  /// Sum of all task CPU times.
  double sequential_ms = 0;
  std::size_t peak_memory_bytes = 0;
  std::vector<std::string> diagnostics;
  std::vector<TraceEvent> events;
  std::vector<CoverRecord> covers;

  bool smooth() const { return outcome == Outcome::smooth; }
};

/// Smoothness of V(I) in affine space. I must be radical and
/// equidimensional; neither is verified.
Verdict smoothness_test(const Ideal& ideal, const Config& config);

/// Smoothness of the projective variety of a homogeneous ideal via the
/// standard affine charts. Throws std::invalid_argument for a non-homogeneous
/// generator.
Verdict projective_smoothness(const Ideal& ideal, const Config& config);

/// Deterministic report; timings only when asked for.
std::string verdict_json(const Verdict& verdict, const Config& config, bool timings = false);

}  // namespace smooth
