#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "smooth/driver.hpp"

namespace smooth {

struct BenchInstance {
  std::string name;
  Ideal ideal;
  bool projective = true;
  std::optional<Outcome> expected;
  std::string provenance;
};

/// 2x2 minors of [[x0..x_{d-1}],[x1..x_d]]; the degree d curve in P^d.
BenchInstance rational_normal_curve(unsigned d);

/// Facets of the boundary of the cyclic polytope C(d,n) by Gale evenness, as
/// sorted 0-based vertex lists in lexicographic order.
std::vector<std::vector<unsigned>> gale_facets(unsigned d, unsigned n);

/// Stanley-Reisner ideal (minimal non-faces) of the boundary of C(d,n),
/// named I4-n-d. Requires n >= d + 2 >= 3.
BenchInstance cyclic_polytope_sr(unsigned d, unsigned n);

/// <x1*x3 - y1*y2, x2*x4 - y1*y2> in P^5.
BenchInstance veronese_ci();

/// Integer matrix with nonzero entries of absolute value below 2^bitlength,
/// redrawn until invertible.
ScalarMatrix random_invertible_matrix(std::size_t n, std::uint64_t seed, unsigned bitlength);

/// Applies random_invertible_matrix to the variables. Over QQ only.
BenchInstance random_coordinate_change(const BenchInstance& inst, std::uint64_t seed, unsigned bitlength);

/// Named suites: table1, rnc, cyclic, x2, small, all.
std::vector<BenchInstance> bench_suite(const std::string& name, std::uint64_t seed = 1);
std::vector<std::string> bench_suite_names();

struct BenchRow {
  std::string name;
  Mode mode = Mode::hironaka;
  Outcome outcome = Outcome::indeterminate;
  std::optional<Outcome> expected;
  double wall_ms = 0;
  double sim_parallel_ms = 0;
  std::size_t charts = 0;
  std::size_t frames = 0;
  std::optional<std::size_t> peak_mem_bytes;
};

/// Runs every instance in every mode, one after another. Hybrid runs use
/// to_codim = 2 unless the base config fixes a depth. `on_row` sees each row
/// as soon as it is done.
std::vector<BenchRow> run_suite(const std::vector<BenchInstance>& instances, const std::vector<Mode>& modes,
                                const Config& base, const std::function<void(const BenchRow&)>& on_row = {});

std::string bench_row_json(const BenchRow& row);
std::string bench_table(const std::vector<BenchRow>& rows);

}  // namespace smooth
