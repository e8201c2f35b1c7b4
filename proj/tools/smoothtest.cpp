#include <filesystem>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "smooth/bench.hpp"
#include "smooth/driver.hpp"
#include "smooth/io.hpp"

using namespace smooth;

namespace {

constexpr int kUsage = 2;

int exit_code(Outcome o) {
  switch (o) {
    case Outcome::smooth: return 0;
    case Outcome::singular: return 1;
    case Outcome::indeterminate: return 3;
  }
  return 3;
}

std::vector<Mode> parse_modes(const std::string& list) {
  std::vector<Mode> out;
  std::stringstream ss(list);
  std::string item;
  while (std::getline(ss, item, ','))
    if (!item.empty()) out.push_back(parse_mode(item));
  if (out.empty()) throw std::invalid_argument("no modes given");
  return out;
}

struct Common {
  unsigned jobs = 1;
  std::uint64_t seed = 0;
  double time_limit = 0;
  std::size_t max_basis = 0;
  double max_mem_mb = 0;

  void add(CLI::App* app) {
    app->add_option("--jobs", jobs, "Worker threads")->check(CLI::PositiveNumber);
    app->add_option("--seed", seed, "Seed for random choices during descent");
    app->add_option("--time-limit", time_limit, "Wall time budget in seconds")->check(CLI::NonNegativeNumber);
    app->add_option("--max-basis", max_basis, "Largest Groebner basis allowed");
    app->add_option("--max-memory-mb", max_mem_mb, "Resident memory cap in MiB")->check(CLI::NonNegativeNumber);
  }
  void apply(Config& cfg) const {
    cfg.jobs = jobs;
    cfg.seed = seed;
    if (time_limit > 0) cfg.limits.time_limit_seconds = time_limit;
    if (max_basis > 0) cfg.limits.max_basis_size = max_basis;
    if (max_mem_mb > 0) cfg.limits.max_memory_bytes = static_cast<std::size_t>(max_mem_mb * 1024 * 1024);
  }
};

void print_text(const Verdict& v, const Config& cfg) {
  std::cout << to_string(v.outcome) << '\n';
  if (v.witness) {
    const Witness& w = *v.witness;
    std::cout << "witness: phase=" << w.phase << " depth=" << w.depth;
    if (w.projective_chart) std::cout << " chart=x" << *w.projective_chart << "=1";
    std::cout << " path=[";
    for (std::size_t i = 0; i < w.chart_path.size(); ++i) std::cout << (i ? "," : "") << w.chart_path[i];
    std::cout << "] frame_columns=[";
    for (std::size_t i = 0; i < w.frame_columns.size(); ++i) std::cout << (i ? "," : "") << w.frame_columns[i];
    std::cout << "]\n";
  }
  std::cout << "mode=" << to_string(cfg.mode) << " charts=" << v.stats.charts << " frames=" << v.stats.frames
            << " descents=" << v.stats.descents << " groebner=" << v.stats.groebner_runs << '\n';
  std::cout << "wall_ms=" << v.wall_ms << " sim_parallel_ms=" << v.sim_parallel_ms
            << " sequential_ms=" << v.sequential_ms << '\n';
  for (const auto& d : v.diagnostics) std::cerr << "note: " << d << '\n';
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Smoothness test for affine and projective varieties"};
  app.require_subcommand(1);

  // check
  auto* check = app.add_subcommand("check", "Decide whether the variety of an ideal file is smooth");
  std::string file, mode_name = "hironaka";
  Common common;
  std::optional<unsigned> descents, to_codim;
  bool projective = false, json = false, timings = false, assume_radical = false, strict_cover = false,
       no_combinations = false, lift_cover = false;
  check->add_option("FILE", file, "Ideal file, - for standard input")->required();
  check->add_option("--mode", mode_name, "hironaka, hybrid or jacobian")
      ->check(CLI::IsMember({"hironaka", "hybrid", "jacobian"}));
  auto* o_desc = check->add_option("--descents", descents, "Hybrid: descents before the embedded criterion");
  auto* o_codim = check->add_option("--to-codim", to_codim, "Hybrid: descend until this codimension is left");
  o_desc->excludes(o_codim);
  check->add_flag("--projective", projective, "Treat the ideal as homogeneous, check all standard charts");
  check->add_flag("--json", json, "Print a JSON report");
  check->add_flag("--timings", timings, "Include timings in the JSON report");
  check->add_flag("--assume-radical", assume_radical, "Acknowledge that the input ideal is radical");
  check->add_flag("--strict-cover", strict_cover, "Stop frame enumeration only on plain membership");
  check->add_flag("--no-combinations", no_combinations, "Skip random linear combinations during descent");
  check->add_flag("--lift-cover", lift_cover, "Use frames from an explicit lift of the localizer");
  check->add_flag("--trace", "Print Groebner starts and failures to standard error");
  common.add(check);

  // gen
  auto* gen = app.add_subcommand("gen", "Write a benchmark ideal to standard output");
  gen->require_subcommand(1);
  bool coordchange = false;
  unsigned bitlength = 4, gen_d = 0, gen_n = 0;
  std::uint64_t gen_seed = 1;
  auto add_change = [&](CLI::App* sub) {
    sub->add_flag("--coordchange", coordchange, "Apply a random linear change of coordinates");
    sub->add_option("--bitlength", bitlength, "Bit length of the change matrix entries")->check(CLI::Range(1, 62));
    sub->add_option("--seed", gen_seed, "Seed of the change matrix");
  };
  auto* g_rnc = gen->add_subcommand("rnc", "Rational normal curve of degree D");
  g_rnc->add_option("D", gen_d)->required()->check(CLI::PositiveNumber);
  add_change(g_rnc);
  auto* g_cyc = gen->add_subcommand("cyclic", "Boundary of the cyclic polytope C(D,N)");
  g_cyc->add_option("D", gen_d)->required()->check(CLI::PositiveNumber);
  g_cyc->add_option("N", gen_n)->required()->check(CLI::PositiveNumber);
  add_change(g_cyc);
  auto* g_x2 = gen->add_subcommand("x2", "Complete intersection of two quadrics in P^5");
  add_change(g_x2);

  // bench
  auto* bench = app.add_subcommand("bench", "Run a benchmark suite or a single ideal file");
  std::string suite, modes = "hironaka";
  bool bench_json = false, bench_projective = false;
  bench->add_option("SUITE", suite, "table1, rnc, cyclic, x2, small, all or a file")->required();
  bench->add_option("--modes", modes, "Comma separated modes");
  bench->add_flag("--json", bench_json, "One JSON object per row");
  bench->add_flag("--projective", bench_projective, "For a file: treat it as projective");
  Common bench_common;
  bench_common.add(bench);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? 0 : kUsage;
  }

  try {
    if (check->parsed()) {
      Ideal ideal = read_ideal_file(file);
      Config cfg;
      cfg.mode = parse_mode(mode_name);
      cfg.descent_depth = descents;
      cfg.to_codim = to_codim;
      cfg.strict_cover = strict_cover;
      cfg.combinations = !no_combinations;
      cfg.lift_cover = lift_cover;
      cfg.trace = check->count("--trace") > 0;
      common.apply(cfg);
      if (!assume_radical)
        std::cerr << "note: radicality of the input is not verified (pass --assume-radical to acknowledge)\n";
      Verdict v = projective ? projective_smoothness(ideal, cfg) : smoothness_test(ideal, cfg);
      if (cfg.trace)
        for (const auto& e : v.events) {
          std::cerr << (e.kind == TraceEvent::Kind::failure ? "failure" : "groebner") << " [";
          for (std::size_t i = 0; i < e.key.size(); ++i) std::cerr << (i ? "," : "") << e.key[i];
          std::cerr << "] " << e.ms << "ms\n";
        }
      if (json)
        std::cout << verdict_json(v, cfg, timings) << '\n';
      else
        print_text(v, cfg);
      return exit_code(v.outcome);
    }

    if (gen->parsed()) {
      BenchInstance inst = g_rnc->parsed()   ? rational_normal_curve(gen_d)
                           : g_cyc->parsed() ? cyclic_polytope_sr(gen_d, gen_n)
                                             : veronese_ci();
      if (coordchange) inst = random_coordinate_change(inst, gen_seed, bitlength);
      std::cout << "# " << inst.name << ": " << inst.provenance << '\n' << write_ideal(inst.ideal);
      return 0;
    }

    if (bench->parsed()) {
      std::vector<BenchInstance> instances;
      if (std::filesystem::is_regular_file(suite)) {
        instances.push_back(BenchInstance{std::filesystem::path(suite).stem().string(), read_ideal_file(suite),
                                          bench_projective, std::nullopt, suite});
      } else {
        instances = bench_suite(suite);
      }
      Config cfg;
      bench_common.apply(cfg);
      auto rows = run_suite(instances, parse_modes(modes), cfg, [&](const BenchRow& row) {
        if (bench_json) std::cout << bench_row_json(row) << std::endl;
      });
      if (!bench_json) std::cout << bench_table(rows);
      return 0;
    }
  } catch (const ParseError& e) {
    std::cerr << "parse error: " << e.what() << '\n';
    return kUsage;
  } catch (const InputError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 3;
  }
  return kUsage;
}
