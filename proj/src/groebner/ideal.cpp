#include "smooth/ideal.hpp"

#include <stdexcept>

namespace smooth {

Ideal::Ideal(RingPtr ring, std::vector<Polynomial> generators) : ring_(std::move(ring)) {
  if (!ring_) throw std::invalid_argument("null ring");
  for (auto& g : generators) {
    if (!same_ring(g.ring(), ring_)) throw std::invalid_argument("generator lives in a different ring");
    if (!g.is_zero()) generators_.push_back(std::move(g));
  }
}

Ideal Ideal::plus(const std::vector<Polynomial>& extra) const {
  std::vector<Polynomial> gens = generators_;
  gens.insert(gens.end(), extra.begin(), extra.end());
  return Ideal(ring_, std::move(gens));
}

std::size_t Ideal::fingerprint() const {
  std::size_t h = generators_.size();
  for (const auto& g : generators_) h ^= g.hash() + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
  return h;
}

bool Ideal::operator==(const Ideal& other) const {
  return same_ring(ring_, other.ring_) && generators_ == other.generators_;
}

}  // namespace smooth
