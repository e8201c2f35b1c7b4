#include "smooth/charts.hpp"

#include <algorithm>

#include "smooth/execution.hpp"

namespace smooth {

namespace {

Polynomial one(const RingPtr& r) { return Polynomial::constant(r, Scalar(1)); }

// Next k-subset of {0..n-1} in lexicographic order; false after the last.
bool next_subset(std::vector<std::size_t>& s, std::size_t n) {
  const std::size_t k = s.size();
  for (std::size_t i = k; i-- > 0;) {
    if (s[i] < n - k + i) {
      ++s[i];
      for (std::size_t j = i + 1; j < k; ++j) s[j] = s[j - 1] + 1;
      return true;
    }
  }
  return false;
}

}  // namespace

Chart Chart::trivial(const Ideal& variety) {
  return Chart{Ideal(variety.ring()), variety, one(variety.ring()), 0};
}

Chart Chart::checked(Ideal ambient, Ideal variety, Polynomial localizer, unsigned depth) {
  if (!same_ring(ambient.ring(), variety.ring()) || !same_ring(localizer.ring(), variety.ring()))
    throw std::invalid_argument("chart: ring mismatch");
  if (localizer.is_zero()) throw std::invalid_argument("chart: zero localizer");
  for (const auto& g : ambient.generators())
    if (!ideal_membership(g, variety))
      throw std::invalid_argument("chart: ambient generator " + g.to_string() + " is not in the variety ideal");
  return Chart{std::move(ambient), std::move(variety), std::move(localizer), depth};
}

std::optional<FrameData> make_frame(const Chart& chart, const std::vector<std::size_t>& cols) {
  const RingPtr& ring = chart.ring();
  const std::size_t r = chart.codim();
  std::vector<std::size_t> rows(r);
  for (std::size_t i = 0; i < r; ++i) rows[i] = i;
  if (r == 0) return FrameData{{}, {}, PolyMatrix(ring, 0, 0), one(ring), PolyMatrix(ring, 0, 0)};
  PolyMatrix jac = jacobian(ring, chart.ambient.generators());
  PolyMatrix m = jac.submatrix(rows, cols);
  auto adj = adjugate(m);
  if (adj.q.is_zero()) return std::nullopt;
  return FrameData{rows, cols, std::move(m), std::move(adj.q), std::move(adj.a)};
}

FrameEnumerator::FrameEnumerator(const Chart& chart, const ChartOptions& options)
    : chart_(chart),
      options_(options),
      jac_(jacobian(chart.ring(), chart.ambient.generators())),
      r_(chart.codim()),
      n_(chart.ring()->arity()) {
  if (r_ > n_) throw std::logic_error("chart has more ambient generators than variables");
  if (options_.lift_cover && r_ > 0) {
    auto ms = minors_with_subsets(jac_, r_);
    std::vector<Polynomial> gens = chart_.ambient.generators();
    for (const auto& m : ms) gens.push_back(m.value);
    Polynomial g = chart_.localizer;
    unsigned cap = options_.lift_cap ? options_.lift_cap : default_lift_cap(g);
    if (auto lift = lift_power(g, Ideal(chart_.ring(), gens), cap)) {
      selected_.emplace();
      for (std::size_t i = 0; i < ms.size(); ++i)
        if (!lift->coefficients[r_ + i].is_zero()) selected_->push_back(ms[i].cols);
    }
  }
}

bool FrameEnumerator::advance() {
  if (selected_) {
    if (selected_pos_ >= selected_->size()) return false;
    cols_ = (*selected_)[selected_pos_++];
    return true;
  }
  if (!started_) {
    started_ = true;
    cols_.resize(r_);
    for (std::size_t i = 0; i < r_; ++i) cols_[i] = i;
    return true;
  }
  if (r_ == 0) return false;
  return next_subset(cols_, n_);
}

std::optional<FrameData> FrameEnumerator::next() {
  if (complete_ || exhausted_) return std::nullopt;
  while (advance()) {
    check_interrupt();
    auto frame = make_frame(chart_, cols_);
    if (!frame) continue;
    determinants_.push_back(frame->q);
    return frame;
  }
  exhausted_ = true;
  return std::nullopt;
}

bool FrameEnumerator::check_cover() {
  if (complete_) return true;
  if (determinants_.empty()) return false;
  const Polynomial& g = chart_.localizer;
  if (determinants_.back().is_constant()) {
    complete_ = true;
  } else if (selected_) {
    // the lift already proves the selected frames cover D(g)
    complete_ = selected_pos_ >= selected_->size();
  } else if (options_.strict_cover) {
    complete_ = ideal_membership(g, Ideal(chart_.ring(), determinants_));
  } else {
    complete_ = radical_membership(g, chart_.ambient.plus(determinants_));
  }
  return complete_;
}

std::vector<std::size_t> free_columns(const Chart& chart, const FrameData& frame) {
  std::vector<std::size_t> out;
  for (std::size_t j = 0; j < chart.ring()->arity(); ++j)
    if (std::find(frame.cols.begin(), frame.cols.end(), j) == frame.cols.end()) out.push_back(j);
  return out;
}

PolyMatrix relative_jacobian(const std::vector<Polynomial>& f, const Chart& chart, const FrameData& frame) {
  const RingPtr& ring = chart.ring();
  const auto free = free_columns(chart, frame);
  const auto& amb = chart.ambient.generators();
  const std::size_t r = frame.cols.size();
  // B[k][j] = sum_l dg_l/dx_j * A[l,k], shared by every f
  std::vector<std::vector<Polynomial>> b(r, std::vector<Polynomial>(free.size(), Polynomial(ring)));
  for (std::size_t jj = 0; jj < free.size(); ++jj) {
    for (std::size_t l = 0; l < r; ++l) {
      Polynomial dg = amb[frame.rows[l]].derivative(free[jj]);
      if (dg.is_zero()) continue;
      for (std::size_t k = 0; k < r; ++k)
        if (!frame.a.at(l, k).is_zero()) b[k][jj] += dg * frame.a.at(l, k);
    }
  }
  PolyMatrix d(ring, f.size(), free.size());
  for (std::size_t i = 0; i < f.size(); ++i) {
    std::vector<Polynomial> dc;
    for (std::size_t k = 0; k < r; ++k) dc.push_back(f[i].derivative(frame.cols[k]));
    for (std::size_t jj = 0; jj < free.size(); ++jj) {
      check_interrupt();
      Polynomial v = f[i].derivative(free[jj]);
      if (!frame.q.is_one()) v *= frame.q;
      for (std::size_t k = 0; k < r; ++k)
        if (!dc[k].is_zero() && !b[k][jj].is_zero()) v -= b[k][jj] * dc[k];
      d.at(i, jj) = std::move(v);
    }
  }
  return d;
}

Ideal delta_ideal(const Chart& chart, const FrameData& frame) {
  PolyMatrix d = relative_jacobian(chart.variety.generators(), chart, frame);
  std::vector<Polynomial> entries;
  for (std::size_t i = 0; i < d.rows(); ++i)
    for (std::size_t j = 0; j < d.cols(); ++j)
      if (!d.at(i, j).is_zero()) entries.push_back(d.at(i, j));
  return chart.variety.plus(entries);
}

bool check_delta_frame(const Chart& chart, const FrameData& frame) {
  return radical_membership(frame.q * chart.localizer, delta_ideal(chart, frame));
}

bool delta_check(const Chart& chart, const ChartOptions& options) {
  FrameEnumerator frames(chart, options);
  while (auto f = frames.next()) {
    if (!check_delta_frame(chart, *f)) return false;
    if (frames.check_cover()) break;
  }
  return true;
}

Ideal singular_locus_ideal(const Chart& chart, const Polynomial& f) {
  if (ideal_membership(f, chart.ambient))
    throw std::invalid_argument("singular_locus_ideal: " + f.to_string() + " lies in the ambient ideal");
  std::vector<Polynomial> rows = chart.ambient.generators();
  rows.push_back(f);
  auto ms = minors(jacobian(chart.ring(), rows), rows.size());
  std::vector<Polynomial> gens = chart.ambient.generators();
  gens.push_back(f);
  gens.insert(gens.end(), ms.begin(), ms.end());
  return Ideal(chart.ring(), std::move(gens));
}

std::string to_string(Descent::Path path) {
  switch (path) {
    case Descent::Path::generator: return "generator";
    case Descent::Path::combination: return "combination";
    case Descent::Path::cover: return "cover";
  }
  return "?";
}

Descent descend(const Chart& chart, std::mt19937_64& rng, const ChartOptions& options) {
  const RingPtr& ring = chart.ring();
  const Polynomial& g = chart.localizer;
  std::vector<Polynomial> cands;
  for (const auto& f : chart.variety.generators())
    if (!ideal_membership(f, chart.ambient)) cands.push_back(f);
  if (cands.empty()) throw DescentFailure("descent: every generator of the variety lies in the ambient ideal");

  auto child = [&](const Polynomial& f, Polynomial loc) {
    return Chart{chart.ambient.plus(f), chart.variety, std::move(loc), chart.depth + 1};
  };

  for (const auto& f : cands)
    if (radical_membership(g, singular_locus_ideal(chart, f))) return {Descent::Path::generator, {child(f, g)}};

  if (options.combinations && cands.size() > 1) {
    const Field& k = ring->field();
    std::uniform_int_distribution<std::uint32_t> coef(1, k.is_rational() ? 2039u : k.characteristic() - 1);
    for (unsigned a = 0; a < options.combination_attempts; ++a) {
      Polynomial f(ring);
      for (const auto& c : cands) f += c.scaled(k.from_int(coef(rng)));
      if (f.is_zero() || ideal_membership(f, chart.ambient)) continue;
      if (radical_membership(g, singular_locus_ideal(chart, f)))
        return {Descent::Path::combination, {child(f, g)}};
    }
  }

  // cover: g^m = (element of I_X) + sum of minors h_j, each h_j belonging to
  // the singular locus ideal of one generator
  std::vector<Polynomial> gens = chart.variety.generators();
  std::vector<std::size_t> owner;
  std::vector<Polynomial> hs;
  for (std::size_t i = 0; i < cands.size(); ++i) {
    std::vector<Polynomial> rows = chart.ambient.generators();
    rows.push_back(cands[i]);
    for (auto& m : minors(jacobian(ring, rows), rows.size())) {
      if (std::find(hs.begin(), hs.end(), m) != hs.end()) continue;
      hs.push_back(m);
      owner.push_back(i);
    }
  }
  gens.insert(gens.end(), hs.begin(), hs.end());
  unsigned cap = options.lift_cap ? options.lift_cap : default_lift_cap(g);
  auto lift = lift_power(g, Ideal(ring, gens), cap);
  if (!lift)
    throw DescentFailure("descent: no power of the localizer " + g.to_string() +
                         " lies in the ideal of the singular loci");
  const std::size_t base = chart.variety.size();
  std::vector<std::size_t> used;
  for (std::size_t j = 0; j < hs.size(); ++j)
    if (!lift->coefficients[base + j].is_zero()) used.push_back(j);

  // drop minors not needed for the cover
  for (std::size_t pos = 0; pos < used.size() && used.size() > 1;) {
    std::vector<Polynomial> rest;
    for (std::size_t q = 0; q < used.size(); ++q)
      if (q != pos) rest.push_back(hs[used[q]]);
    if (radical_membership(g, chart.variety.plus(rest)))
      used.erase(used.begin() + static_cast<long>(pos));
    else
      ++pos;
  }
  Descent out{Descent::Path::cover, {}};
  for (std::size_t j : used) out.charts.push_back(child(cands[owner[j]], g * hs[j]));
  return out;
}

std::size_t embedded_codimension(const Chart& chart) {
  long n = static_cast<long>(chart.ring()->arity());
  long c = n - static_cast<long>(chart.codim()) - krull_dimension(chart.variety);
  if (c < 0) throw std::logic_error("embedded criterion: variety has larger dimension than its ambient");
  return static_cast<std::size_t>(c);
}

Ideal jacobian_frame_ideal(const Chart& chart, const FrameData& frame, std::size_t c) {
  PolyMatrix d = relative_jacobian(chart.variety.generators(), chart, frame);
  if (c == 0 || c > d.rows() || c > d.cols()) return chart.variety;
  auto basis = groebner_cached(chart.variety);
  auto ms = minors(d, c, [&](const Polynomial& p) { return basis->normal_form(p); });
  return chart.variety.plus(ms);
}

bool check_jacobian_frame(const Chart& chart, const FrameData& frame, std::size_t c) {
  if (c == 0) return true;
  return radical_membership(frame.q * chart.localizer, jacobian_frame_ideal(chart, frame, c));
}

bool embedded_jacobian(const Chart& chart, const ChartOptions& options) {
  std::size_t c = embedded_codimension(chart);
  if (c == 0) return true;
  FrameEnumerator frames(chart, options);
  while (auto f = frames.next()) {
    if (!check_jacobian_frame(chart, *f, c)) return false;
    if (frames.check_cover()) break;
  }
  return true;
}

bool affine_jacobian_criterion(const Ideal& ideal) {
  if (ideal.is_zero()) return true;
  auto basis = groebner_cached(ideal);
  if (basis->is_unit()) return true;
  const RingPtr& ring = ideal.ring();
  long c = static_cast<long>(ring->arity()) - krull_dimension(*basis);
  PolyMatrix jac = jacobian(ring, ideal.generators());
  if (c <= 0) return true;
  if (static_cast<std::size_t>(c) > jac.rows()) return false;
  auto ms = minors(jac, static_cast<std::size_t>(c), [&](const Polynomial& p) { return basis->normal_form(p); });
  return is_unit_ideal(ideal.plus(ms));
}

}  // namespace smooth
