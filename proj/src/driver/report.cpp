#include <cstdio>

#include "json.hpp"
#include "smooth/driver.hpp"

namespace smooth {

namespace {

std::string hex(std::size_t v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%016zx", v);
  return buf;
}

}  // namespace

std::string verdict_json(const Verdict& v, const Config& cfg, bool timings) {
  using nlohmann::ordered_json;
  ordered_json j;
  j["verdict"] = to_string(v.outcome);
  j["mode"] = to_string(cfg.mode);
  j["seed"] = cfg.seed;
  if (v.witness) {
    const Witness& w = *v.witness;
    ordered_json wj;
    wj["key"] = w.key;
    wj["projective_chart"] = w.projective_chart ? ordered_json(*w.projective_chart) : ordered_json(nullptr);
    wj["chart_path"] = w.chart_path;
    wj["depth"] = w.depth;
    wj["frame_columns"] = w.frame_columns;
    wj["phase"] = w.phase;
    wj["ideal_fingerprint"] = hex(w.ideal_fingerprint);
    j["witness"] = wj;
  } else {
    j["witness"] = nullptr;
  }
  j["stats"] = {{"charts", v.stats.charts},
                {"frames", v.stats.frames},
                {"descents", v.stats.descents},
                {"groebner_runs", v.stats.groebner_runs}};
  j["diagnostics"] = v.diagnostics;
  if (timings) {
    ordered_json t;
    t["wall_ms"] = v.wall_ms;
    t["sim_parallel_ms"] = v.sim_parallel_ms;
    t["sequential_ms"] = v.sequential_ms;
    t["peak_mem_bytes"] = v.peak_memory_bytes;
    t["phases_ms"] = v.phase_ms;
    j["timing"] = t;
  }
  return j.dump();
}

}  // namespace smooth
