#include "smooth/ring.hpp"

#include <set>
#include <stdexcept>

namespace smooth {

Ring::Ring(Field field, std::vector<std::string> variables)
    : field_(field), variables_(std::move(variables)) {
  if (variables_.empty()) throw std::invalid_argument("a ring needs at least one variable");
  std::set<std::string> seen;
  for (const auto& v : variables_) {
    if (v.empty()) throw std::invalid_argument("empty variable name");
    if (!seen.insert(v).second) throw std::invalid_argument("duplicate variable name '" + v + "'");
  }
}

std::optional<std::size_t> Ring::index_of(std::string_view name) const {
  for (std::size_t i = 0; i < variables_.size(); ++i)
    if (variables_[i] == name) return i;
  return std::nullopt;
}

RingPtr make_ring(Field field, std::vector<std::string> variables) {
  return std::make_shared<const Ring>(field, std::move(variables));
}

RingPtr extend_ring(const RingPtr& ring, std::string_view hint) {
  std::string name(hint);
  for (int k = 0; ring->index_of(name); ++k) name = std::string(hint) + "_" + std::to_string(k);
  auto vars = ring->variables();
  vars.push_back(name);
  return make_ring(ring->field(), std::move(vars));
}

RingPtr chart_ring(const RingPtr& ring, std::size_t i) {
  if (i >= ring->arity()) throw std::out_of_range("chart index out of range");
  if (ring->arity() == 1) throw std::invalid_argument("the affine charts of P^0 have no variables");
  auto vars = ring->variables();
  vars.erase(vars.begin() + static_cast<std::ptrdiff_t>(i));
  return make_ring(ring->field(), std::move(vars));
}

bool same_ring(const RingPtr& a, const RingPtr& b) { return a == b || (a && b && *a == *b); }

}  // namespace smooth
