#pragma once

#include <cstddef>
#include <vector>

#include "smooth/polynomial.hpp"

namespace smooth {

/// Finitely generated ideal; zero generators are dropped on construction.
class Ideal {
 public:
  explicit Ideal(RingPtr ring, std::vector<Polynomial> generators = {});

  const RingPtr& ring() const { return ring_; }
  const std::vector<Polynomial>& generators() const { return generators_; }
  std::size_t size() const { return generators_.size(); }
  bool is_zero() const { return generators_.empty(); }

  /// This ideal plus extra generators (order preserved, appended).
  Ideal plus(const std::vector<Polynomial>& extra) const;
  Ideal plus(const Polynomial& extra) const { return plus(std::vector<Polynomial>{extra}); }
  Ideal plus(const Ideal& other) const { return plus(other.generators()); }

  /// Hash of the generator list; equal generator lists give equal fingerprints.
  std::size_t fingerprint() const;
  bool operator==(const Ideal& other) const;

 private:
  RingPtr ring_;
  std::vector<Polynomial> generators_;
};

}  // namespace smooth
