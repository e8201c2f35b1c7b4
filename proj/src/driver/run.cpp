#include <time.h>

#include <algorithm>
#include <atomic>
#include <chrono>
#include <exception>
#include <functional>
#include <map>
#include <memory>
#include <mutex>

#include "scheduler.hpp"
#include "smooth/driver.hpp"
#include "smooth/execution.hpp"

namespace smooth {

std::string to_string(Mode mode) {
  switch (mode) {
    case Mode::hironaka: return "hironaka";
    case Mode::hybrid: return "hybrid";
    case Mode::jacobian: return "jacobian";
  }
  return "?";
}

std::string to_string(Outcome outcome) {
  switch (outcome) {
    case Outcome::smooth: return "smooth";
    case Outcome::singular: return "singular";
    case Outcome::indeterminate: return "indeterminate";
  }
  return "?";
}

Mode parse_mode(const std::string& name) {
  if (name == "hironaka") return Mode::hironaka;
  if (name == "hybrid") return Mode::hybrid;
  if (name == "jacobian") return Mode::jacobian;
  throw std::invalid_argument("unknown mode '" + name + "'");
}

namespace {

using Clock = std::chrono::steady_clock;

double thread_cpu_ms() {
  timespec ts{};
  clock_gettime(CLOCK_THREAD_CPUTIME_ID, &ts);
  return static_cast<double>(ts.tv_sec) * 1e3 + static_cast<double>(ts.tv_nsec) / 1e6;
}

TaskKey operator+(TaskKey k, std::initializer_list<std::uint32_t> tail) {
  k.insert(k.end(), tail.begin(), tail.end());
  return k;
}

bool is_prefix(const TaskKey& p, const TaskKey& k) {
  return p.size() <= k.size() && std::equal(p.begin(), p.end(), k.begin());
}

struct Record {
  double cpu_ms = 0;
  std::string phase;
  std::size_t charts = 0, frames = 0, descents = 0, groebner = 0;
};

// A root of the chart tree: one affine chart of the input.
struct Root {
  TaskKey key;
  Ideal ideal;
  std::optional<std::size_t> projective_chart;
  unsigned switch_depth = 0;
};

class Run {
 public:
  Run(const Config& cfg) : cfg_(cfg), pool_(cfg.jobs, cfg.schedule_seed), start_(Clock::now()) {
    opts_.strict_cover = cfg.strict_cover;
    opts_.combinations = cfg.combinations;
    opts_.lift_cover = cfg.lift_cover;
    base_.cache = &cache_;
    if (cfg.limits.time_limit_seconds)
      base_.deadline = start_ + std::chrono::duration_cast<Clock::duration>(
                                    std::chrono::duration<double>(*cfg.limits.time_limit_seconds));
    base_.max_basis_size = cfg.limits.max_basis_size;
    base_.max_memory_bytes = cfg.limits.max_memory_bytes;
  }

  Verdict execute(std::vector<Root> roots) {
    roots_ = std::move(roots);
    for (std::size_t i = 0; i < roots_.size(); ++i) {
      const Root& root = roots_[i];
      auto chart = std::make_shared<const Chart>(Chart::trivial(root.ideal));
      if (cfg_.mode == Mode::jacobian)
        pool_.submit(root.key, [this, i] { jacobian_task(i); });
      else
        pool_.submit(root.key, [this, i, chart] { chart_task(i, roots_[i].key, chart); });
    }
    pool_.run();
    return finish();
  }

 private:
  // Runs fn as the work of `key`: hooks bound to the key, CPU time and
  // counters attributed to it, exceptions turned into run state.
  template <class Fn>
  bool segment(const TaskKey& key, const char* phase, Fn&& fn) {
    if (cancelled(key)) return false;
    Record rec;
    rec.phase = phase;
    ExecutionHooks hooks = base_;
    std::uint64_t seen = ~std::uint64_t{0};
    bool stop = false;
    hooks.cancelled = [&] {
      std::uint64_t e = epoch_.load(std::memory_order_acquire);
      if (e != seen) {
        seen = e;
        stop = cancelled(key);
      }
      return stop;
    };
    hooks.on_groebner_request = [&] { ++rec.groebner; };
    if (cfg_.trace) hooks.on_groebner_start = [&] { event(TraceEvent::Kind::groebner_start, key); };
    double t0 = thread_cpu_ms();
    bool ok = true;
    {
      ExecutionScope scope(&hooks);
      try {
        fn(rec);
      } catch (const Interrupted& e) {
        ok = false;
        if (e.is_limit()) problem(key, e.what());
      } catch (const std::exception& e) {
        ok = false;
        problem(key, e.what());
      }
    }
    rec.cpu_ms = thread_cpu_ms() - t0;
    std::lock_guard lock(mutex_);
    auto& slot = records_[key];
    slot.cpu_ms += rec.cpu_ms;
    slot.phase = rec.phase;
    slot.charts += rec.charts;
    slot.frames += rec.frames;
    slot.descents += rec.descents;
    slot.groebner += rec.groebner;
    return ok;
  }

  bool cancelled(const TaskKey& key) {
    std::lock_guard lock(mutex_);
    return best_ && *best_ < key;
  }

  void event(TraceEvent::Kind kind, const TaskKey& key) {
    double ms = std::chrono::duration<double, std::milli>(Clock::now() - start_).count();
    std::lock_guard lock(mutex_);
    events_.push_back(TraceEvent{kind, key, ms});
  }

  void problem(const TaskKey& key, const std::string& what) {
    std::lock_guard lock(mutex_);
    problems_.emplace_back(key, what);
  }

  void fail(const TaskKey& key, Witness w) {
    if (cfg_.trace) event(TraceEvent::Kind::failure, key);
    std::lock_guard lock(mutex_);
    if (best_ && !(key < *best_)) return;
    best_ = key;
    w.key = key;
    witness_ = std::move(w);
    epoch_.fetch_add(1, std::memory_order_release);
  }

  Witness make_witness(std::size_t root, const TaskKey& chart_key, const Chart& chart, const std::string& phase,
                       std::vector<std::size_t> cols, const Ideal& failing) {
    Witness w;
    w.projective_chart = roots_[root].projective_chart;
    // chart keys alternate [3, j] below the root
    const TaskKey& rk = roots_[root].key;
    for (std::size_t i = rk.size(); i + 1 < chart_key.size(); i += 2) w.chart_path.push_back(chart_key[i + 1]);
    w.depth = chart.depth;
    w.frame_columns = std::move(cols);
    w.phase = phase;
    w.ideal_fingerprint = failing.fingerprint();
    return w;
  }

  void jacobian_task(std::size_t root) {
    const TaskKey& key = roots_[root].key;
    segment(key, "jacobian", [&](Record& rec) {
      rec.charts = 1;
      const Ideal& x = roots_[root].ideal;
      if (!affine_jacobian_criterion(x)) fail(key, make_witness(root, key, Chart::trivial(x), "jacobian", {}, x));
    });
  }

  void chart_task(std::size_t root, TaskKey key, std::shared_ptr<const Chart> chart) {
    const Chart& c = *chart;
    const std::size_t n = c.ring()->arity();
    const bool embedded = cfg_.mode == Mode::hybrid && c.depth == roots_[root].switch_depth;
    bool done = false;
    std::size_t codim = 0;
    if (!segment(key + std::initializer_list<std::uint32_t>{0}, "equal", [&](Record& rec) {
          rec.charts = 1;
          if (c.depth > n) throw std::logic_error("descent deeper than the number of variables");
          int dim = krull_dimension(c.variety);
          if (dim < 0 || static_cast<std::size_t>(dim) + c.codim() == n) {
            done = true;
            return;
          }
          if (static_cast<std::size_t>(dim) + c.codim() > n)
            throw std::logic_error("variety has larger dimension than its ambient");
          if (equal_on_chart(c.ambient, c.variety, c.localizer)) {
            done = true;
            return;
          }
          if (embedded) codim = embedded_codimension(c);
        }))
      return;
    if (done) return;

    std::shared_ptr<FrameEnumerator> frames;
    for (std::uint32_t k = 0;; ++k) {
      bool stop = false;
      TaskKey fkey = key + std::initializer_list<std::uint32_t>{1, k, 0};
      if (!segment(key + std::initializer_list<std::uint32_t>{1, k, 1}, "cover", [&](Record&) {
            if (!frames) frames = std::make_shared<FrameEnumerator>(c, opts_);
            auto f = frames->next();
            if (!f) {
              stop = true;
              return;
            }
            auto frame = std::make_shared<const FrameData>(std::move(*f));
            pool_.submit(fkey, [this, root, key, fkey, chart, frame, embedded, codim] {
              frame_task(root, key, fkey, chart, frame, embedded, codim);
            });
            stop = frames->check_cover();
          }))
        return;
      if (stop) break;
    }
    if (cfg_.trace) {
      std::lock_guard lock(mutex_);
      covers_.push_back(CoverRecord{key, c.ambient, c.localizer, frames->determinants(), frames->cover_complete()});
    }
    if (embedded) return;
    TaskKey dkey = key + std::initializer_list<std::uint32_t>{2};
    pool_.submit(dkey, [this, root, key, dkey, chart] { descend_task(root, key, dkey, chart); });
  }

  void frame_task(std::size_t root, const TaskKey& chart_key, const TaskKey& key,
                  const std::shared_ptr<const Chart>& chart, const std::shared_ptr<const FrameData>& frame,
                  bool embedded, std::size_t codim) {
    segment(key, embedded ? "embedded" : "delta", [&](Record& rec) {
      rec.frames = 1;
      const Chart& c = *chart;
      Ideal test = embedded ? jacobian_frame_ideal(c, *frame, codim) : delta_ideal(c, *frame);
      bool ok = embedded && codim == 0 ? true : radical_membership(frame->q * c.localizer, test);
      if (!ok) fail(key, make_witness(root, chart_key, c, embedded ? "embedded" : "delta", frame->cols, test));
    });
  }

  void descend_task(std::size_t root, const TaskKey& chart_key, const TaskKey& key,
                    const std::shared_ptr<const Chart>& chart) {
    segment(key, "descend", [&](Record& rec) {
      rec.descents = 1;
      std::vector<std::uint64_t> seeds{cfg_.seed};
      seeds.insert(seeds.end(), chart_key.begin(), chart_key.end());
      std::seed_seq seq(seeds.begin(), seeds.end());
      std::mt19937_64 rng(seq);
      Descent d = descend(*chart, rng, opts_);
      for (std::uint32_t j = 0; j < d.charts.size(); ++j) {
        TaskKey ckey = chart_key + std::initializer_list<std::uint32_t>{3, j};
        auto child = std::make_shared<const Chart>(std::move(d.charts[j]));
        pool_.submit(ckey, [this, root, ckey, child] { chart_task(root, ckey, child); });
      }
    });
  }

  // Critical path below a chart key: inline work, then frames alongside the
  // descent followed by the slowest child.
  double simulated(const TaskKey& chart) const {
    auto cost = [&](const TaskKey& k) {
      auto it = records_.find(k);
      return it == records_.end() ? 0.0 : it->second.cpu_ms;
    };
    double own = cost(chart + std::initializer_list<std::uint32_t>{0});
    double frames = 0, children = 0;
    for (auto it = records_.lower_bound(chart); it != records_.end() && is_prefix(chart, it->first); ++it) {
      const TaskKey& k = it->first;
      if (k.size() == chart.size() + 3 && k[chart.size()] == 1) {
        if (k.back() == 1)
          own += it->second.cpu_ms;
        else
          frames = std::max(frames, it->second.cpu_ms);
      }
    }
    for (std::uint32_t j = 0;; ++j) {
      TaskKey ck = chart + std::initializer_list<std::uint32_t>{3, j};
      if (!records_.count(ck + std::initializer_list<std::uint32_t>{0})) break;
      children = std::max(children, simulated(ck));
    }
    return own + std::max(frames, cost(chart + std::initializer_list<std::uint32_t>{2}) + children);
  }

  Verdict finish() {
    Verdict v;
    v.wall_ms = std::chrono::duration<double, std::milli>(Clock::now() - start_).count();
    v.peak_memory_bytes = peak_memory_bytes();
    for (const auto& [key, rec] : records_) {
      v.sequential_ms += rec.cpu_ms;
      v.phase_ms[rec.phase] += rec.cpu_ms;
      if (best_ && *best_ < key) continue;
      v.stats.charts += rec.charts;
      v.stats.frames += rec.frames;
      v.stats.descents += rec.descents;
      v.stats.groebner_runs += rec.groebner;
    }
    for (const auto& root : roots_)
      v.sim_parallel_ms =
          std::max(v.sim_parallel_ms, cfg_.mode == Mode::jacobian
                                          ? (records_.count(root.key) ? records_.at(root.key).cpu_ms : 0.0)
                                          : simulated(root.key));
    if (best_) {
      v.outcome = Outcome::singular;
      v.witness = witness_;
    } else if (!problems_.empty()) {
      v.outcome = Outcome::indeterminate;
      std::sort(problems_.begin(), problems_.end());
      for (const auto& [key, what] : problems_) v.diagnostics.push_back(what);
    }
    v.events = std::move(events_);
    v.covers = std::move(covers_);
    std::sort(v.covers.begin(), v.covers.end(),
              [](const CoverRecord& a, const CoverRecord& b) { return a.chart < b.chart; });
    return v;
  }

  Config cfg_;
  ChartOptions opts_;
  GroebnerCache cache_;
  ExecutionHooks base_;
  detail::TaskPool pool_;
  Clock::time_point start_;
  std::vector<Root> roots_;

  std::mutex mutex_;
  std::atomic<std::uint64_t> epoch_{0};
  std::optional<TaskKey> best_;
  Witness witness_;
  std::vector<std::pair<TaskKey, std::string>> problems_;
  std::map<TaskKey, Record> records_;
  std::vector<TraceEvent> events_;
  std::vector<CoverRecord> covers_;
};

bool has_unit_generator(const Ideal& ideal) {
  for (const auto& g : ideal.generators())
    if (g.is_constant()) return true;
  return false;
}

unsigned switch_depth(const Ideal& ideal, const Config& cfg) {
  if (cfg.mode != Mode::hybrid) return 0;
  if (cfg.descent_depth) return *cfg.descent_depth;
  unsigned target = cfg.to_codim.value_or(0);
  int dim = krull_dimension(ideal);
  long codim = static_cast<long>(ideal.ring()->arity()) - dim;
  return codim > static_cast<long>(target) ? static_cast<unsigned>(codim - target) : 0;
}

Verdict vacuous(const char* why) {
  Verdict v;
  v.diagnostics.push_back(why);
  return v;
}

}  // namespace

Verdict smoothness_test(const Ideal& ideal, const Config& config) {
  if (config.jobs == 0) throw std::invalid_argument("jobs must be at least 1");
  if (has_unit_generator(ideal)) return vacuous("unit ideal: the variety is empty");
  Run run(config);
  return run.execute({Root{{}, ideal, std::nullopt, switch_depth(ideal, config)}});
}

Verdict projective_smoothness(const Ideal& ideal, const Config& config) {
  if (config.jobs == 0) throw std::invalid_argument("jobs must be at least 1");
  for (const auto& g : ideal.generators())
    if (!g.is_homogeneous()) throw std::invalid_argument("generator " + g.to_string() + " is not homogeneous");
  if (has_unit_generator(ideal)) return vacuous("unit ideal: the variety is empty");
  const RingPtr& ring = ideal.ring();
  // P^0 is a single point
  if (ring->arity() == 1) return vacuous("projective space of dimension zero");
  std::vector<Root> roots;
  for (std::size_t i = 0; i < ring->arity(); ++i) {
    RingPtr cr = chart_ring(ring, i);
    std::vector<Polynomial> gens;
    for (const auto& g : ideal.generators()) gens.push_back(dehomogenize(g, i, cr));
    Ideal chart(cr, std::move(gens));
    // a chart with a unit generator misses the variety entirely
    if (has_unit_generator(chart)) continue;
    roots.push_back(Root{{static_cast<std::uint32_t>(i)}, chart, i, 0});
  }
  Run run(config);
  for (auto& r : roots) r.switch_depth = switch_depth(r.ideal, config);
  return run.execute(std::move(roots));
}

}  // namespace smooth
