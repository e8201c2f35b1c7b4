#pragma once

// Buchberger engine over integer (fraction-free) or prime field coefficients.
// Polynomials live in the packed monomial layout of monomial_ops.hpp with
// terms in descending order.

#include <gmpxx.h>

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <limits>
#include <memory>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "../algebra/monomial_ops.hpp"
#include "smooth/execution.hpp"
#include "smooth/polynomial.hpp"

namespace smooth::detail {

struct IntegerDomain {
  using Coef = mpz_class;
  static constexpr bool fraction_free = true;

  static bool is_zero(const Coef& c) { return sgn(c) == 0; }
  static bool is_one(const Coef& c) { return c == 1; }
  static void mul(Coef& out, const Coef& x, const Coef& y) { mpz_mul(out.get_mpz_t(), x.get_mpz_t(), y.get_mpz_t()); }
  static void neg_mul(Coef& out, const Coef& x, const Coef& y) {
    mpz_mul(out.get_mpz_t(), x.get_mpz_t(), y.get_mpz_t());
    mpz_neg(out.get_mpz_t(), out.get_mpz_t());
  }
  static void neg(Coef& out, const Coef& x) { mpz_neg(out.get_mpz_t(), x.get_mpz_t()); }
  // out = u*a - v*b
  static void mul_sub(Coef& out, const Coef& u, const Coef& a, const Coef& v, const Coef& b) {
    mpz_mul(out.get_mpz_t(), u.get_mpz_t(), a.get_mpz_t());
    mpz_submul(out.get_mpz_t(), v.get_mpz_t(), b.get_mpz_t());
  }
  // u*a == v*b with u > 0 and minimal
  static void cancel(const Coef& a, const Coef& b, Coef& u, Coef& v) {
    Coef g;
    mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    mpz_divexact(u.get_mpz_t(), b.get_mpz_t(), g.get_mpz_t());
    mpz_divexact(v.get_mpz_t(), a.get_mpz_t(), g.get_mpz_t());
    if (sgn(u) < 0) {
      mpz_neg(u.get_mpz_t(), u.get_mpz_t());
      mpz_neg(v.get_mpz_t(), v.get_mpz_t());
    }
  }
  static Scalar to_scalar(const Coef& c) { return Scalar(c); }
  static Scalar inverse_scalar(const Coef& c) { return Scalar(1) / Scalar(c); }
  static Coef from_scalar(const Scalar& s) { return s.get_num(); }
};

struct PrimeDomain {
  using Coef = std::uint32_t;
  static constexpr bool fraction_free = false;
  std::uint32_t p;

  static bool is_zero(Coef c) { return c == 0; }
  static bool is_one(Coef c) { return c == 1; }
  void mul(Coef& out, Coef x, Coef y) const { out = static_cast<Coef>(std::uint64_t{x} * y % p); }
  void neg_mul(Coef& out, Coef x, Coef y) const {
    Coef t = static_cast<Coef>(std::uint64_t{x} * y % p);
    out = t ? p - t : 0;
  }
  void neg(Coef& out, Coef x) const { out = x ? p - x : 0; }
  void mul_sub(Coef& out, Coef u, Coef a, Coef v, Coef b) const {
    std::uint64_t s = std::uint64_t{u} * a % p + p - std::uint64_t{v} * b % p;
    out = static_cast<Coef>(s % p);
  }
  Coef inv(Coef a) const {
    std::uint64_t r = 1, b = a, e = p - 2;
    while (e) {
      if (e & 1) r = r * b % p;
      b = b * b % p;
      e >>= 1;
    }
    return static_cast<Coef>(r);
  }
  void cancel(Coef a, Coef b, Coef& u, Coef& v) const {
    u = 1;
    v = static_cast<Coef>(std::uint64_t{a} * inv(b) % p);
  }
  static Scalar to_scalar(Coef c) { return Scalar(static_cast<unsigned long>(c)); }
  Scalar inverse_scalar(Coef c) const { return Scalar(static_cast<unsigned long>(inv(c))); }
  static Coef from_scalar(const Scalar& s) { return static_cast<Coef>(s.get_num().get_ui()); }
};

template <class D>
struct IPoly {
  std::vector<typename D::Coef> coef;
  std::vector<Exponent> mono;

  std::size_t size() const { return coef.size(); }
  bool empty() const { return coef.empty(); }
  const Exponent* at(std::size_t i, std::size_t s) const { return mono.data() + i * s; }
};

using Row = std::vector<Polynomial>;

template <class D>
struct Element {
  IPoly<D> poly;
  std::uint64_t mask = 0;
  bool active = true;
  Row row;
};

// Divides all coefficients by their content (integers, sign of the leading
// coefficient) or by the leading coefficient (prime field). Returns the divisor.
template <class D>
typename D::Coef normalize(const D& dom, IPoly<D>& f) {
  using Coef = typename D::Coef;
  if constexpr (D::fraction_free) {
    Coef g = 0;
    for (const auto& c : f.coef) {
      mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
      if (g == 1) break;
    }
    if (f.empty()) return Coef(1);
    if (sgn(f.coef[0]) < 0) g = -g;
    if (g != 1)
      for (auto& c : f.coef) mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), g.get_mpz_t());
    return g;
  } else {
    if (f.empty() || f.coef[0] == 1) return 1;
    Coef lc = f.coef[0];
    Coef li = dom.inv(lc);
    for (auto& c : f.coef) dom.mul(c, c, li);
    return lc;
  }
}

template <class D>
class BasisSet {
 public:
  using Coef = typename D::Coef;

  BasisSet(D dom, RingPtr ring, bool track)
      : dom_(dom), ring_(std::move(ring)), n_(ring_->arity()), s_(n_ + 1), track_(track) {}

  std::size_t stride() const { return s_; }
  std::size_t arity() const { return n_; }
  const D& domain() const { return dom_; }
  const RingPtr& ring() const { return ring_; }
  std::vector<Element<D>>& elements() { return elems_; }
  const std::vector<Element<D>>& elements() const { return elems_; }

  // r = u * m1 * A[ia:] - v * m2 * B[ib:]; null multipliers mean 1.
  IPoly<D> combine(const Coef* u, const IPoly<D>& a, std::size_t ia, const Exponent* m1, const Coef* v,
                   const IPoly<D>& b, std::size_t ib, const Exponent* m2) const {
    IPoly<D> r;
    std::size_t na = a.size() - ia, nb = b.size() - ib;
    r.coef.reserve(na + nb);
    r.mono.reserve((na + nb) * s_);
    std::vector<Exponent> ta(s_), tb(s_);
    auto load = [&](std::vector<Exponent>& t, const IPoly<D>& p, std::size_t i, const Exponent* m) {
      if (m)
        multiply_packed(p.at(i, s_), m, t.data(), n_);
      else
        std::copy_n(p.at(i, s_), s_, t.data());
    };
    std::size_t i = ia, j = ib;
    if (i < a.size()) load(ta, a, i, m1);
    if (j < b.size()) load(tb, b, j, m2);
    Coef c;
    while (i < a.size() || j < b.size()) {
      int cmp;
      if (i >= a.size())
        cmp = -1;
      else if (j >= b.size())
        cmp = 1;
      else
        cmp = compare_packed(ta.data(), tb.data(), n_);
      if (cmp > 0) {
        if (u)
          dom_.mul(c, *u, a.coef[i]);
        else
          c = a.coef[i];
        r.coef.push_back(c);
        r.mono.insert(r.mono.end(), ta.begin(), ta.end());
        if (++i < a.size()) load(ta, a, i, m1);
      } else if (cmp < 0) {
        if (v)
          dom_.neg_mul(c, *v, b.coef[j]);
        else
          dom_.neg(c, b.coef[j]);
        r.coef.push_back(c);
        r.mono.insert(r.mono.end(), tb.begin(), tb.end());
        if (++j < b.size()) load(tb, b, j, m2);
      } else {
        static const Coef one = Coef(1);
        dom_.mul_sub(c, u ? *u : one, a.coef[i], v ? *v : one, b.coef[j]);
        if (!D::is_zero(c)) {
          r.coef.push_back(c);
          r.mono.insert(r.mono.end(), ta.begin(), ta.end());
        }
        if (++i < a.size()) load(ta, a, i, m1);
        if (++j < b.size()) load(tb, b, j, m2);
      }
    }
    return r;
  }

  // Index of an active element whose leading monomial divides m, preferring
  // the shortest; -1 if none.
  long find_reducer(const Exponent* m, std::size_t skip) const {
    std::uint64_t mm = support_mask(m, n_);
    long best = -1;
    for (std::size_t k = 0; k < elems_.size(); ++k) {
      const auto& e = elems_[k];
      if (!e.active || k == skip) continue;
      if (e.mask & ~mm) continue;
      if (!divides_packed(e.poly.at(0, s_), m, n_)) continue;
      if (best < 0 || e.poly.size() < elems_[best].poly.size()) best = static_cast<long>(k);
    }
    return best;
  }

  Row row_combine(const Coef* u, const Row& a, const Exponent* m1, const Coef* v, const Row& b,
                  const Exponent* m2) const {
    Row r(a.size(), Polynomial(ring_));
    std::span<const Exponent> e1 = m1 ? std::span<const Exponent>(m1 + 1, n_) : std::span<const Exponent>();
    std::span<const Exponent> e2 = m2 ? std::span<const Exponent>(m2 + 1, n_) : std::span<const Exponent>();
    Scalar su = u ? D::to_scalar(*u) : Scalar(1);
    Scalar sv = v ? D::to_scalar(*v) : Scalar(1);
    for (std::size_t k = 0; k < a.size(); ++k) {
      Polynomial x = m1 ? a[k].mul_term(su, e1) : (u ? a[k].scaled(su) : a[k]);
      Polynomial y = m2 ? b[k].mul_term(sv, e2) : (v ? b[k].scaled(sv) : b[k]);
      r[k] = x - y;
    }
    return r;
  }

  void row_divide(Row& row, const Coef& d) const {
    if (D::is_one(d)) return;
    Scalar inv = dom_.inverse_scalar(d);
    for (auto& p : row) p = p.scaled(inv);
  }

  // Reduces f by the active elements (except `skip`). With full, every term
  // is reduced; otherwise only until the leading term is irreducible. On
  // return f = scale * f_in - (combination of elements), with `scale` updated
  // multiplicatively when given, and `row` kept in step with f.
  void reduce(IPoly<D>& f, bool full, Row* row, Scalar* scale = nullptr,
              std::size_t skip = std::numeric_limits<std::size_t>::max()) const {
    IPoly<D> rem;
    IPoly<D> cur = std::move(f);
    std::size_t head = 0;
    std::vector<Exponent> q(s_);
    Coef u, v;
    unsigned steps = 0;
    while (head < cur.size()) {
      const Exponent* lm = cur.at(head, s_);
      long j = find_reducer(lm, skip);
      if (j < 0) {
        if (!full) break;
        rem.coef.push_back(cur.coef[head]);
        rem.mono.insert(rem.mono.end(), lm, lm + s_);
        ++head;
        continue;
      }
      const Element<D>& g = elems_[static_cast<std::size_t>(j)];
      dom_.cancel(cur.coef[head], g.poly.coef[0], u, v);
      divide_packed(lm, g.poly.at(0, s_), q.data(), n_);
      bool unit_u = D::is_one(u);
      IPoly<D> next = combine(unit_u ? nullptr : &u, cur, head + 1, nullptr, &v, g.poly, 1, q.data());
      cur = std::move(next);
      head = 0;
      if (!unit_u) {
        for (auto& c : rem.coef) dom_.mul(c, c, u);
        if (scale) *scale *= D::to_scalar(u);
      }
      if (row) *row = row_combine(unit_u ? nullptr : &u, *row, nullptr, &v, g.row, q.data());
      if ((++steps & 15) == 0) {
        check_interrupt();
        if constexpr (D::fraction_free) shrink(cur, rem, row, scale);
      }
    }
    if (full) {
      f = std::move(rem);
    } else {
      cur.coef.erase(cur.coef.begin(), cur.coef.begin() + static_cast<long>(head));
      cur.mono.erase(cur.mono.begin(), cur.mono.begin() + static_cast<long>(head * s_));
      f = std::move(cur);
    }
  }

  Element<D> make_element(IPoly<D> p, Row row) const {
    Element<D> e;
    e.mask = support_mask(p.at(0, s_), n_);
    e.poly = std::move(p);
    e.row = std::move(row);
    return e;
  }

 private:
  // Common content of the pending and finished parts of a fraction-free
  // reduction, divided out to keep coefficients small.
  void shrink(IPoly<D>& cur, IPoly<D>& rem, Row* row, Scalar* scale) const {
    Coef g = 0;
    for (const auto* part : {&cur, &rem})
      for (const auto& c : part->coef) {
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
        if (g == 1) return;
      }
    if (g == 0) return;
    for (auto* part : {&cur, &rem})
      for (auto& c : part->coef) mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), g.get_mpz_t());
    if (row) row_divide(*row, g);
    if (scale) *scale /= Scalar(g);
  }

  D dom_;
  RingPtr ring_;
  std::size_t n_, s_;
  bool track_;
  std::vector<Element<D>> elems_;
};

template <class D>
class Engine {
 public:
  using Coef = typename D::Coef;

  Engine(D dom, RingPtr ring, bool track, std::size_t ngens)
      : set_(dom, std::move(ring), track), track_(track), ngens_(ngens), s_(set_.stride()), n_(set_.arity()) {}

  // Feeds one generator with its transform row (unit vector when tracking).
  void add_input(IPoly<D> f, Row row) {
    if (unit_ >= 0) return;
    set_.reduce(f, true, track_ ? &row : nullptr);
    if (f.empty()) return;
    Coef d = normalize(set_.domain(), f);
    if (track_) set_.row_divide(row, d);
    insert(std::move(f), std::move(row));
  }

  void run() {
    while (unit_ < 0 && !pairs_.empty()) {
      check_interrupt();
      Pair p = *pairs_.begin();
      pairs_.erase(pairs_.begin());
      const auto& a = set_.elements()[p.i];
      const auto& b = set_.elements()[p.j];
      std::vector<Exponent> m1(s_), m2(s_);
      divide_packed(p.lcm.data(), a.poly.at(0, s_), m1.data(), n_);
      divide_packed(p.lcm.data(), b.poly.at(0, s_), m2.data(), n_);
      Coef u, v;
      set_.domain().cancel(a.poly.coef[0], b.poly.coef[0], u, v);
      // u*lc(a) == v*lc(b)
      IPoly<D> s = set_.combine(&u, a.poly, 1, m1.data(), &v, b.poly, 1, m2.data());
      Row row;
      if (track_) row = set_.row_combine(&u, a.row, m1.data(), &v, b.row, m2.data());
      set_.reduce(s, true, track_ ? &row : nullptr);
      if (s.empty()) continue;
      Coef d = normalize(set_.domain(), s);
      if (track_) set_.row_divide(row, d);
      insert(std::move(s), std::move(row));
    }
  }

  bool unit() const { return unit_ >= 0; }

  // Reduced basis sorted by ascending leading monomial; returns the set
  // holding exactly those elements.
  BasisSet<D> finalize() {
    auto& el = set_.elements();
    BasisSet<D> out(set_.domain(), set_.ring(), track_);
    if (unit_ >= 0) {
      out.elements().push_back(std::move(el[static_cast<std::size_t>(unit_)]));
      return out;
    }
    // minimalize (normally a no-op after the update criteria)
    for (std::size_t i = 0; i < el.size(); ++i) {
      if (!el[i].active) continue;
      for (std::size_t j = 0; j < el.size(); ++j) {
        if (i == j || !el[j].active) continue;
        if (divides_packed(el[j].poly.at(0, s_), el[i].poly.at(0, s_), n_)) {
          el[i].active = false;
          break;
        }
      }
    }
    for (std::size_t i = 0; i < el.size(); ++i) {
      if (!el[i].active) continue;
      check_interrupt();
      IPoly<D> f = std::move(el[i].poly);
      Row row = std::move(el[i].row);
      set_.reduce(f, true, track_ ? &row : nullptr, nullptr, i);
      Coef d = normalize(set_.domain(), f);
      if (track_) set_.row_divide(row, d);
      el[i].poly = std::move(f);
      el[i].row = std::move(row);
    }
    std::vector<std::size_t> order;
    for (std::size_t i = 0; i < el.size(); ++i)
      if (el[i].active) order.push_back(i);
    std::sort(order.begin(), order.end(), [&](std::size_t x, std::size_t y) {
      return compare_packed(el[x].poly.at(0, s_), el[y].poly.at(0, s_), n_) < 0;
    });
    for (std::size_t i : order) out.elements().push_back(std::move(el[i]));
    return out;
  }

 private:
  struct Pair {
    std::size_t i, j;
    std::vector<Exponent> lcm;
  };
  struct PairLess {
    std::size_t n;
    bool operator()(const Pair& a, const Pair& b) const {
      int c = compare_packed(a.lcm.data(), b.lcm.data(), n);
      if (c) return c < 0;
      if (a.j != b.j) return a.j < b.j;
      return a.i < b.i;
    }
  };

  void insert(IPoly<D> h, Row row) {
    auto& el = set_.elements();
    std::size_t hi = el.size();
    bool constant = h.at(0, s_)[0] == 0;
    el.push_back(set_.make_element(std::move(h), std::move(row)));
    if (constant) {
      unit_ = static_cast<long>(hi);
      pairs_.clear();
      return;
    }
    if (auto* hooks = current_hooks(); hooks && hooks->max_basis_size) {
      std::size_t live = 0;
      for (const auto& e : el) live += e.active;
      if (live > *hooks->max_basis_size)
        throw Interrupted(Interrupted::Reason::basis_limit,
                          "Groebner basis exceeded " + std::to_string(*hooks->max_basis_size) + " elements");
    }
    const Exponent* lh = el[hi].poly.at(0, s_);

    // candidate pairs with every active element
    struct Cand {
      std::size_t g;
      std::vector<Exponent> lcm;
      bool coprime;
    };
    std::vector<Cand> c;
    for (std::size_t g = 0; g < hi; ++g) {
      if (!el[g].active) continue;
      Cand x{g, std::vector<Exponent>(s_), coprime_packed(lh, el[g].poly.at(0, s_), n_)};
      lcm_packed(lh, el[g].poly.at(0, s_), x.lcm.data(), n_);
      c.push_back(std::move(x));
    }
    std::vector<Cand> kept;
    for (std::size_t k = 0; k < c.size(); ++k) {
      bool keep = c[k].coprime;
      if (!keep) {
        keep = true;
        for (std::size_t l = k + 1; l < c.size() && keep; ++l)
          if (divides_packed(c[l].lcm.data(), c[k].lcm.data(), n_)) keep = false;
        for (std::size_t l = 0; l < kept.size() && keep; ++l)
          if (divides_packed(kept[l].lcm.data(), c[k].lcm.data(), n_)) keep = false;
      }
      if (keep) kept.push_back(std::move(c[k]));
    }
    // chain criterion on old pairs
    std::vector<Exponent> t1(s_), t2(s_);
    for (auto it = pairs_.begin(); it != pairs_.end();) {
      const Pair& p = *it;
      if (divides_packed(lh, p.lcm.data(), n_)) {
        lcm_packed(el[p.i].poly.at(0, s_), lh, t1.data(), n_);
        lcm_packed(el[p.j].poly.at(0, s_), lh, t2.data(), n_);
        if (!equal_packed(t1.data(), p.lcm.data(), n_) && !equal_packed(t2.data(), p.lcm.data(), n_)) {
          it = pairs_.erase(it);
          continue;
        }
      }
      ++it;
    }
    for (auto& k : kept)
      if (!k.coprime) pairs_.insert(Pair{k.g, hi, std::move(k.lcm)});
    for (std::size_t g = 0; g < hi; ++g)
      if (el[g].active && divides_packed(lh, el[g].poly.at(0, s_), n_)) el[g].active = false;
  }

  BasisSet<D> set_;
  bool track_;
  std::size_t ngens_;
  std::size_t s_, n_;
  long unit_ = -1;
  std::set<Pair, PairLess> pairs_{PairLess{n_}};
};

}  // namespace smooth::detail
