#include <cstdio>

#include "json.hpp"
#include "smooth/bench.hpp"

namespace smooth {

std::vector<BenchRow> run_suite(const std::vector<BenchInstance>& instances, const std::vector<Mode>& modes,
                                const Config& base, const std::function<void(const BenchRow&)>& on_row) {
  std::vector<BenchRow> rows;
  for (const auto& inst : instances) {
    for (Mode m : modes) {
      Config cfg = base;
      cfg.mode = m;
      if (m == Mode::hybrid && !cfg.descent_depth && !cfg.to_codim) cfg.to_codim = 2;
      Verdict v = inst.projective ? projective_smoothness(inst.ideal, cfg) : smoothness_test(inst.ideal, cfg);
      BenchRow row;
      row.name = inst.name;
      row.mode = m;
      row.outcome = v.outcome;
      row.expected = inst.expected;
      row.wall_ms = v.wall_ms;
      row.sim_parallel_ms = v.sim_parallel_ms;
      row.charts = v.stats.charts;
      row.frames = v.stats.frames;
      if (v.peak_memory_bytes) row.peak_mem_bytes = v.peak_memory_bytes;
      if (on_row) on_row(row);
      rows.push_back(std::move(row));
    }
  }
  return rows;
}

std::string bench_row_json(const BenchRow& row) {
  nlohmann::ordered_json j;
  j["name"] = row.name;
  j["mode"] = to_string(row.mode);
  j["verdict"] = to_string(row.outcome);
  j["wall_ms"] = row.wall_ms;
  j["sim_parallel_ms"] = row.sim_parallel_ms;
  j["charts"] = row.charts;
  j["frames"] = row.frames;
  if (row.peak_mem_bytes) j["peak_mem_bytes"] = *row.peak_mem_bytes;
  return j.dump();
}

std::string bench_table(const std::vector<BenchRow>& rows) {
  std::string out;
  char buf[256];
  std::snprintf(buf, sizeof buf, "%-10s %-9s %-13s %-9s %12s %12s %7s %7s %10s\n", "name", "mode", "verdict",
                "expected", "wall_ms", "sim_ms", "charts", "frames", "peak_MiB");
  out += buf;
  for (const auto& r : rows) {
    std::string verdict = r.outcome == Outcome::indeterminate ? "-" : to_string(r.outcome);
    std::string mem = r.peak_mem_bytes ? std::to_string(*r.peak_mem_bytes >> 20) : "?";
    std::snprintf(buf, sizeof buf, "%-10s %-9s %-13s %-9s %12.1f %12.1f %7zu %7zu %10s\n", r.name.c_str(),
                  to_string(r.mode).c_str(), verdict.c_str(), r.expected ? to_string(*r.expected).c_str() : "",
                  r.wall_ms, r.sim_parallel_ms, r.charts, r.frames, mem.c_str());
    out += buf;
  }
  return out;
}

}  // namespace smooth
