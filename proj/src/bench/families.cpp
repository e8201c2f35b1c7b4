#include <algorithm>
#include <bit>
#include <random>
#include <stdexcept>

#include "smooth/bench.hpp"

namespace smooth {

namespace {

std::vector<std::string> names(const std::string& stem, unsigned from, unsigned count) {
  std::vector<std::string> out;
  for (unsigned i = 0; i < count; ++i) out.push_back(stem + std::to_string(from + i));
  return out;
}

}  // namespace

BenchInstance rational_normal_curve(unsigned d) {
  if (d < 1) throw std::invalid_argument("rational normal curve needs d >= 1");
  RingPtr r = make_ring(Field::rationals(), names("x", 0, d + 1));
  std::vector<Polynomial> gens;
  auto x = [&](unsigned i) { return Polynomial::variable(r, i); };
  for (unsigned i = 0; i < d; ++i)
    for (unsigned j = i + 1; j < d; ++j) gens.push_back(x(i) * x(j + 1) - x(j) * x(i + 1));
  return BenchInstance{"I1-" + std::to_string(d), Ideal(r, std::move(gens)), true, Outcome::smooth,
                       "rational normal curve d=" + std::to_string(d)};
}

std::vector<std::vector<unsigned>> gale_facets(unsigned d, unsigned n) {
  if (n > 30) throw std::invalid_argument("too many vertices");
  std::vector<std::vector<unsigned>> out;
  for (std::uint32_t s = 0; s < (1u << n); ++s) {
    if (static_cast<unsigned>(std::popcount(s)) != d) continue;
    bool ok = true;
    for (unsigned i = 0; i < n && ok; ++i) {
      if (s >> i & 1) continue;
      for (unsigned j = i + 1; j < n && ok; ++j) {
        if (s >> j & 1) continue;
        unsigned between = 0;
        for (unsigned k = i + 1; k < j; ++k) between += s >> k & 1;
        ok = between % 2 == 0;
      }
    }
    if (!ok) continue;
    std::vector<unsigned> f;
    for (unsigned i = 0; i < n; ++i)
      if (s >> i & 1) f.push_back(i);
    out.push_back(std::move(f));
  }
  std::sort(out.begin(), out.end());
  return out;
}

BenchInstance cyclic_polytope_sr(unsigned d, unsigned n) {
  if (d < 1 || n < d + 2) throw std::invalid_argument("cyclic polytope needs n >= d + 2 >= 3");
  auto facets = gale_facets(d, n);
  std::vector<std::uint32_t> fmask;
  for (const auto& f : facets) {
    std::uint32_t m = 0;
    for (unsigned v : f) m |= 1u << v;
    fmask.push_back(m);
  }
  auto is_face = [&](std::uint32_t t) {
    for (auto m : fmask)
      if ((t & m) == t) return true;
    return false;
  };
  std::vector<std::uint32_t> nonfaces;
  for (std::uint32_t t = 1; t < (1u << n); ++t) {
    if (is_face(t)) continue;
    bool minimal = true;
    for (std::uint32_t rest = t; rest && minimal; rest &= rest - 1)
      minimal = is_face(t & ~(rest & (~rest + 1)));
    if (minimal) nonfaces.push_back(t);
  }
  // by size, then lexicographic in the vertex lists
  auto vertices = [&](std::uint32_t t) {
    std::vector<unsigned> v;
    for (unsigned i = 0; i < n; ++i)
      if (t >> i & 1) v.push_back(i);
    return v;
  };
  std::sort(nonfaces.begin(), nonfaces.end(), [&](std::uint32_t a, std::uint32_t b) {
    if (std::popcount(a) != std::popcount(b)) return std::popcount(a) < std::popcount(b);
    return vertices(a) < vertices(b);
  });
  RingPtr r = make_ring(Field::rationals(), names("x", 1, n));
  std::vector<Polynomial> gens;
  for (auto t : nonfaces) {
    Monomial m(n, 0);
    for (unsigned v : vertices(t)) m[v] = 1;
    gens.push_back(Polynomial::term(r, Scalar(1), m));
  }
  return BenchInstance{"I4-" + std::to_string(n) + "-" + std::to_string(d), Ideal(r, std::move(gens)), true,
                       Outcome::singular,
                       "cyclic polytope boundary d=" + std::to_string(d) + " n=" + std::to_string(n)};
}

BenchInstance veronese_ci() {
  RingPtr r = make_ring(Field::rationals(), {"x1", "x2", "x3", "x4", "y1", "y2"});
  auto v = [&](unsigned i) { return Polynomial::variable(r, i); };
  Polynomial yy = v(4) * v(5);
  return BenchInstance{"X2", Ideal(r, {v(0) * v(2) - yy, v(1) * v(3) - yy}), true, Outcome::singular,
                       "complete intersection of two quadrics"};
}

ScalarMatrix random_invertible_matrix(std::size_t n, std::uint64_t seed, unsigned bitlength) {
  if (bitlength < 1 || bitlength > 62) throw std::invalid_argument("bitlength must be in 1..62");
  std::mt19937_64 rng(seed);
  const long bound = (1L << bitlength) - 1;
  std::uniform_int_distribution<long> mag(1, bound);
  std::bernoulli_distribution sign(0.5);
  Field q = Field::rationals();
  for (;;) {
    ScalarMatrix t(n, std::vector<Scalar>(n));
    for (auto& row : t)
      for (auto& e : row) {
        long a = mag(rng);
        e = sign(rng) ? -a : a;
      }
    if (scalar_determinant(q, t) != 0) return t;
  }
}

BenchInstance random_coordinate_change(const BenchInstance& inst, std::uint64_t seed, unsigned bitlength) {
  const RingPtr& r = inst.ideal.ring();
  if (!r->field().is_rational()) throw std::invalid_argument("coordinate change needs rational coefficients");
  ScalarMatrix t = random_invertible_matrix(r->arity(), seed, bitlength);
  std::vector<Polynomial> gens;
  for (const auto& g : inst.ideal.generators()) gens.push_back(apply_linear_change(g, t));
  BenchInstance out = inst;
  out.ideal = Ideal(r, std::move(gens));
  out.provenance += ", coordinate change seed=" + std::to_string(seed) + " bitlength=" + std::to_string(bitlength);
  return out;
}

std::vector<std::string> bench_suite_names() { return {"table1", "rnc", "cyclic", "x2", "small", "all"}; }

std::vector<BenchInstance> bench_suite(const std::string& name, std::uint64_t seed) {
  auto cyclic = [&](unsigned d, unsigned n) { return random_coordinate_change(cyclic_polytope_sr(d, n), seed, 4); };
  std::vector<BenchInstance> out;
  if (name == "rnc" || name == "table1" || name == "all")
    for (unsigned d : {6u, 7u, 8u}) out.push_back(rational_normal_curve(d));
  if (name == "cyclic" || name == "table1" || name == "all") {
    out.push_back(cyclic(3, 6));
    out.push_back(cyclic(3, 7));
    out.push_back(cyclic(4, 7));
  }
  if (name == "x2" || name == "all") out.push_back(veronese_ci());
  if (name == "small") {
    for (unsigned d : {2u, 3u, 4u, 5u}) out.push_back(rational_normal_curve(d));
    out.push_back(cyclic_polytope_sr(2, 4));
    out.push_back(cyclic_polytope_sr(2, 5));
    out.push_back(veronese_ci());
  }
  if (out.empty()) throw std::invalid_argument("unknown suite '" + name + "'");
  return out;
}

}  // namespace smooth
