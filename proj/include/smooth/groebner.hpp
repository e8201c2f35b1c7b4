#pragma once

#include <cstddef>
#include <memory>
#include <mutex>
#include <optional>
#include <unordered_map>
#include <vector>

#include "smooth/ideal.hpp"

namespace smooth {

namespace detail {
class BasisCore;
}

/// Reduced Groebner basis under degrevlex, elements monic and sorted by
/// ascending leading monomial. With tracking, transform()[j][i] holds the
/// coefficient of generator i in element j.
class GroebnerBasis {
 public:
  const Ideal& ideal() const { return ideal_; }
  const RingPtr& ring() const { return ideal_.ring(); }
  const std::vector<Polynomial>& elements() const { return elements_; }
  bool is_unit() const { return elements_.size() == 1 && elements_[0].is_one(); }
  bool has_transform() const { return transform_.has_value(); }
  const std::vector<std::vector<Polynomial>>& transform() const { return *transform_; }

  Polynomial normal_form(const Polynomial& f) const;
  std::vector<Monomial> leading_monomials() const;

 private:
  friend GroebnerBasis buchberger(const Ideal& ideal, bool track);
  explicit GroebnerBasis(Ideal ideal) : ideal_(std::move(ideal)) {}

  Ideal ideal_;
  std::vector<Polynomial> elements_;
  std::optional<std::vector<std::vector<Polynomial>>> transform_;
  std::shared_ptr<const detail::BasisCore> core_;
};

/// Buchberger's algorithm with the coprime and chain criteria (Gebauer-Moeller
/// update) and normal pair selection. Stops as soon as a unit appears.
GroebnerBasis buchberger(const Ideal& ideal, bool track = false);

/// Untracked basis through the cache installed in the current ExecutionHooks
/// (computed directly when there is none).
std::shared_ptr<const GroebnerBasis> groebner_cached(const Ideal& ideal);

/// Thread-safe map from generator lists to untracked bases.
class GroebnerCache {
 public:
  std::shared_ptr<const GroebnerBasis> find(const Ideal& ideal) const;
  void insert(std::shared_ptr<const GroebnerBasis> basis);
  std::size_t size() const;

 private:
  mutable std::mutex mutex_;
  std::unordered_multimap<std::size_t, std::shared_ptr<const GroebnerBasis>> entries_;
};

Polynomial normal_form(const Polynomial& f, const GroebnerBasis& basis);

/// lcm(LT f, LT g)/LT f * f - lcm/LT g * g with monic leading terms.
Polynomial s_polynomial(const Polynomial& f, const Polynomial& g);

bool ideal_membership(const Polynomial& f, const Ideal& ideal);

/// 1 in ideal.
bool is_unit_ideal(const Ideal& ideal);

/// f vanishes on V(ideal) over the algebraic closure: 1 in ideal + <1 - t f>
/// in a ring with one extra variable t.
bool radical_membership(const Polynomial& f, const Ideal& ideal);

/// g * f lies in the ambient ideal for every generator f of the variety
/// ideal. Plain membership is tried first and radical membership of g * f
/// in the ambient ideal decides the rest.
bool equal_on_chart(const Ideal& ambient, const Ideal& variety, const Polynomial& g);

struct PowerLift {
  unsigned power = 0;
  /// g^power = sum_i coefficients[i] * generators[i]
  std::vector<Polynomial> coefficients;
};

unsigned default_lift_cap(const Polynomial& g);

/// Smallest m <= cap with g^m in the ideal together with an explicit
/// representation; nullopt when no such m exists.
std::optional<PowerLift> lift_power(const Polynomial& g, const Ideal& ideal, unsigned cap);

/// Krull dimension of R/I; -1 for the unit ideal.
int krull_dimension(const Ideal& ideal);
int krull_dimension(const GroebnerBasis& basis);

/// Maximal size of a variable subset containing the support of no monomial
/// in `leads` (the dimension of the monomial ideal they generate).
int monomial_ideal_dimension(const std::vector<Monomial>& leads, std::size_t arity);

}  // namespace smooth
