#include "smooth/groebner.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <stdexcept>

#include "engine.hpp"

namespace smooth {

namespace detail {

class BasisCore {
 public:
  virtual ~BasisCore() = default;
  virtual Polynomial normal_form(const Polynomial& f) const = 0;
};

namespace {

IPoly<IntegerDomain> to_integer(const Polynomial& f, Scalar& multiplier) {
  mpz_class l = 1;
  for (const auto& c : f.raw_coefficients()) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), c.get_den_mpz_t());
  IPoly<IntegerDomain> r;
  r.mono = f.raw_packed();
  r.coef.reserve(f.size());
  for (const auto& c : f.raw_coefficients()) r.coef.push_back(c.get_num() * (l / c.get_den()));
  multiplier = Scalar(l);
  return r;
}

IPoly<PrimeDomain> to_prime(const Polynomial& f) {
  IPoly<PrimeDomain> r;
  r.mono = f.raw_packed();
  r.coef.reserve(f.size());
  for (const auto& c : f.raw_coefficients()) r.coef.push_back(PrimeDomain::from_scalar(c));
  return r;
}

template <class D>
Polynomial to_public(const RingPtr& ring, const IPoly<D>& p, const Scalar& divisor) {
  std::vector<Scalar> coefs;
  coefs.reserve(p.size());
  for (const auto& c : p.coef) {
    Scalar s = D::to_scalar(c);
    if (divisor != 1) s /= divisor;
    coefs.push_back(std::move(s));
  }
  return Polynomial::from_packed(ring, std::move(coefs), p.mono);
}

template <class D>
class Core final : public BasisCore {
 public:
  explicit Core(BasisSet<D> set) : set_(std::move(set)) {}

  Polynomial normal_form(const Polynomial& f) const override {
    const RingPtr& ring = set_.ring();
    if constexpr (D::fraction_free) {
      Scalar l;
      IPoly<D> p = to_integer(f, l);
      Scalar scale = 1;
      set_.reduce(p, true, nullptr, &scale);
      return to_public(ring, p, scale * l);
    } else {
      IPoly<D> p = to_prime(f);
      set_.reduce(p, true, nullptr);
      return to_public(ring, p, Scalar(1));
    }
  }

 private:
  BasisSet<D> set_;
};

template <class D>
void run_engine(D dom, const Ideal& ideal, bool track, std::vector<Polynomial>& elements,
                std::optional<std::vector<std::vector<Polynomial>>>& transform,
                std::shared_ptr<const BasisCore>& core) {
  const RingPtr& ring = ideal.ring();
  const auto& gens = ideal.generators();
  const std::size_t ng = gens.size();
  const std::size_t s = ring->arity() + 1;
  std::vector<std::size_t> order(ng);
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return compare_packed(gens[a].raw_packed().data(), gens[b].raw_packed().data(), ring->arity()) < 0;
  });
  Engine<D> engine(dom, ring, track, ng);
  for (std::size_t i : order) {
    Scalar mult = 1;
    IPoly<D> f;
    if constexpr (D::fraction_free)
      f = to_integer(gens[i], mult);
    else
      f = to_prime(gens[i]);
    Row row;
    if (track) {
      row.assign(ng, Polynomial(ring));
      row[i] = Polynomial::constant(ring, mult);
    }
    engine.add_input(std::move(f), std::move(row));
  }
  engine.run();
  BasisSet<D> set = engine.finalize();
  elements.clear();
  if (track) transform.emplace();
  for (const auto& e : set.elements()) {
    Scalar lc = D::to_scalar(e.poly.coef[0]);
    if (set.elements().size() == 1 && e.poly.at(0, s)[0] == 0) {
      elements.push_back(Polynomial::constant(ring, Scalar(1)));
    } else {
      elements.push_back(to_public(ring, e.poly, lc));
    }
    if (track) {
      Scalar inv = ring->field().inv(ring->field().from_rational(lc));
      Row r;
      for (const auto& p : e.row) r.push_back(p.scaled(inv));
      transform->push_back(std::move(r));
    }
  }
  // a unit basis keeps only its constant element
  if (elements.size() == 1 && elements[0].is_constant()) {
    set.elements().resize(1);
    set.elements()[0].poly.coef[0] = typename D::Coef(1);
  }
  core = std::make_shared<Core<D>>(std::move(set));
}

}  // namespace
}  // namespace detail

Polynomial GroebnerBasis::normal_form(const Polynomial& f) const {
  if (!same_ring(f.ring(), ring())) throw std::invalid_argument("normal_form: ring mismatch");
  if (f.is_zero()) return f;
  return core_->normal_form(f);
}

std::vector<Monomial> GroebnerBasis::leading_monomials() const {
  std::vector<Monomial> out;
  for (const auto& e : elements_) {
    auto m = e.leading_exponents();
    out.emplace_back(m.begin(), m.end());
  }
  return out;
}

GroebnerBasis buchberger(const Ideal& ideal, bool track) {
  check_interrupt();
  if (const auto* hooks = current_hooks()) {
    if (hooks->on_groebner_request) hooks->on_groebner_request();
    if (hooks->on_groebner_start) hooks->on_groebner_start();
  }
  GroebnerBasis out(ideal);
  const Field& field = ideal.ring()->field();
  if (ideal.is_zero()) {
    if (track) out.transform_.emplace();
    if (field.is_rational())
      out.core_ = std::make_shared<detail::Core<detail::IntegerDomain>>(
          detail::BasisSet<detail::IntegerDomain>({}, ideal.ring(), false));
    else
      out.core_ = std::make_shared<detail::Core<detail::PrimeDomain>>(
          detail::BasisSet<detail::PrimeDomain>({field.characteristic()}, ideal.ring(), false));
    return out;
  }
  if (field.is_rational())
    detail::run_engine(detail::IntegerDomain{}, ideal, track, out.elements_, out.transform_, out.core_);
  else
    detail::run_engine(detail::PrimeDomain{field.characteristic()}, ideal, track, out.elements_, out.transform_,
                       out.core_);
  return out;
}

std::shared_ptr<const GroebnerBasis> GroebnerCache::find(const Ideal& ideal) const {
  std::lock_guard lock(mutex_);
  auto [lo, hi] = entries_.equal_range(ideal.fingerprint());
  for (auto it = lo; it != hi; ++it)
    if (it->second->ideal() == ideal) return it->second;
  return nullptr;
}

void GroebnerCache::insert(std::shared_ptr<const GroebnerBasis> basis) {
  std::lock_guard lock(mutex_);
  auto key = basis->ideal().fingerprint();
  auto [lo, hi] = entries_.equal_range(key);
  for (auto it = lo; it != hi; ++it)
    if (it->second->ideal() == basis->ideal()) return;
  entries_.emplace(key, std::move(basis));
}

std::size_t GroebnerCache::size() const {
  std::lock_guard lock(mutex_);
  return entries_.size();
}

std::shared_ptr<const GroebnerBasis> groebner_cached(const Ideal& ideal) {
  const auto* hooks = current_hooks();
  GroebnerCache* cache = hooks ? hooks->cache : nullptr;
  if (cache) {
    if (auto hit = cache->find(ideal)) {
      if (hooks->on_groebner_request) hooks->on_groebner_request();
      return hit;
    }
  }
  auto basis = std::make_shared<const GroebnerBasis>(buchberger(ideal, false));
  if (cache) cache->insert(basis);
  return basis;
}

Polynomial normal_form(const Polynomial& f, const GroebnerBasis& basis) { return basis.normal_form(f); }

Polynomial s_polynomial(const Polynomial& f, const Polynomial& g) {
  if (f.is_zero() || g.is_zero()) throw std::invalid_argument("s_polynomial of zero");
  const std::size_t n = f.arity();
  auto a = f.leading_exponents(), b = g.leading_exponents();
  Monomial ma(n), mb(n);
  for (std::size_t i = 0; i < n; ++i) {
    Exponent l = std::max(a[i], b[i]);
    ma[i] = l - a[i];
    mb[i] = l - b[i];
  }
  const Field& k = f.ring()->field();
  return f.mul_term(k.inv(f.leading_coefficient()), ma) - g.mul_term(k.inv(g.leading_coefficient()), mb);
}

bool ideal_membership(const Polynomial& f, const Ideal& ideal) {
  if (f.is_zero()) return true;
  return groebner_cached(ideal)->normal_form(f).is_zero();
}

bool is_unit_ideal(const Ideal& ideal) {
  for (const auto& g : ideal.generators())
    if (g.is_constant()) return true;
  return groebner_cached(ideal)->is_unit();
}

bool radical_membership(const Polynomial& f, const Ideal& ideal) {
  if (f.is_zero()) return true;
  auto basis = groebner_cached(ideal);
  if (basis->is_unit() || basis->normal_form(f).is_zero()) return true;
  if (f.is_constant()) return false;
  RingPtr big = extend_ring(ideal.ring(), "t");
  std::vector<Polynomial> gens;
  for (const auto& g : ideal.generators()) gens.push_back(embed(g, big));
  Polynomial t = Polynomial::variable(big, big->arity() - 1);
  gens.push_back(Polynomial::constant(big, Scalar(1)) - t * embed(f, big));
  return is_unit_ideal(Ideal(big, std::move(gens)));
}

bool equal_on_chart(const Ideal& ambient, const Ideal& variety, const Polynomial& g) {
  for (const auto& f : variety.generators()) {
    Polynomial h = g * f;
    if (ideal_membership(h, ambient)) continue;
    if (!radical_membership(h, ambient)) return false;
  }
  return true;
}

unsigned default_lift_cap(const Polynomial& g) {
  long d = g.total_degree();
  return static_cast<unsigned>(2 * std::max(d, 0L) + 8);
}

namespace {

// Division of f by the basis elements; quotients[j] multiplies element j.
// Only called when the remainder is known to vanish.
std::vector<Polynomial> quotients(const Polynomial& f, const std::vector<Polynomial>& basis) {
  const RingPtr& ring = f.ring();
  const Field& k = ring->field();
  const std::size_t n = ring->arity();
  std::vector<Polynomial> q(basis.size(), Polynomial(ring));
  Polynomial p = f;
  Monomial m(n);
  while (!p.is_zero()) {
    check_interrupt();
    auto lp = p.leading_exponents();
    bool done = false;
    for (std::size_t j = 0; j < basis.size() && !done; ++j) {
      auto lb = basis[j].leading_exponents();
      bool div = true;
      for (std::size_t i = 0; i < n && div; ++i) div = lb[i] <= lp[i];
      if (!div) continue;
      for (std::size_t i = 0; i < n; ++i) m[i] = lp[i] - lb[i];
      Scalar c = k.div(p.leading_coefficient(), basis[j].leading_coefficient());
      q[j] += Polynomial::term(ring, c, m);
      p -= basis[j].mul_term(c, m);
      done = true;
    }
    if (!done) throw std::logic_error("lift_power: remainder does not vanish");
  }
  return q;
}

}  // namespace

std::optional<PowerLift> lift_power(const Polynomial& g, const Ideal& ideal, unsigned cap) {
  const RingPtr& ring = ideal.ring();
  const std::size_t ng = ideal.size();
  if (g.is_zero()) return PowerLift{1, std::vector<Polynomial>(ng, Polynomial(ring))};
  auto plain = groebner_cached(ideal);
  Polynomial h = g;
  unsigned m = 1;
  for (; m <= cap; ++m, h *= g) {
    if (plain->normal_form(h).is_zero()) break;
  }
  if (m > cap) return std::nullopt;
  GroebnerBasis tracked = buchberger(ideal, true);
  auto q = quotients(h, tracked.elements());
  std::vector<Polynomial> coeffs(ng, Polynomial(ring));
  for (std::size_t j = 0; j < q.size(); ++j) {
    if (q[j].is_zero()) continue;
    for (std::size_t i = 0; i < ng; ++i)
      if (!tracked.transform()[j][i].is_zero()) coeffs[i] += q[j] * tracked.transform()[j][i];
  }
  return PowerLift{m, std::move(coeffs)};
}

int monomial_ideal_dimension(const std::vector<Monomial>& leads, std::size_t arity) {
  if (arity > 64) throw std::out_of_range("monomial_ideal_dimension: more than 64 variables");
  std::vector<std::uint64_t> supports;
  for (const auto& m : leads) {
    std::uint64_t s = 0;
    for (std::size_t i = 0; i < arity; ++i)
      if (m[i]) s |= std::uint64_t{1} << i;
    if (s == 0) return -1;
    supports.push_back(s);
  }
  std::sort(supports.begin(), supports.end(),
            [](std::uint64_t a, std::uint64_t b) { return std::popcount(a) < std::popcount(b); });
  std::vector<std::uint64_t> minimal;
  for (auto s : supports) {
    bool redundant = false;
    for (auto t : minimal)
      if ((t & s) == t) redundant = true;
    if (!redundant) minimal.push_back(s);
  }
  // smallest set of variables meeting every support
  int best = static_cast<int>(arity);
  auto search = [&](auto&& self, std::uint64_t chosen, int size) -> void {
    if (size >= best) return;
    const std::uint64_t* open = nullptr;
    for (const auto& s : minimal)
      if (!(s & chosen) && (!open || std::popcount(s) < std::popcount(*open))) open = &s;
    if (!open) {
      best = size;
      return;
    }
    for (std::uint64_t rest = *open; rest; rest &= rest - 1)
      self(self, chosen | (rest & -rest), size + 1);
  };
  search(search, 0, 0);
  return static_cast<int>(arity) - best;
}

int krull_dimension(const GroebnerBasis& basis) {
  if (basis.is_unit()) return -1;
  return monomial_ideal_dimension(basis.leading_monomials(), basis.ring()->arity());
}

int krull_dimension(const Ideal& ideal) { return krull_dimension(*groebner_cached(ideal)); }

}  // namespace smooth
