#pragma once

#include <cstddef>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "smooth/field.hpp"

namespace smooth {

enum class TermOrder { degrevlex };

/// Polynomial ring k[x_1..x_n] with the degree reverse lexicographic order.
class Ring {
 public:
  Ring(Field field, std::vector<std::string> variables);

  const Field& field() const { return field_; }
  std::size_t arity() const { return variables_.size(); }
  const std::vector<std::string>& variables() const { return variables_; }
  const std::string& variable(std::size_t i) const { return variables_.at(i); }
  std::optional<std::size_t> index_of(std::string_view name) const;
  TermOrder order() const { return TermOrder::degrevlex; }

  bool operator==(const Ring& other) const {
    return field_ == other.field_ && variables_ == other.variables_;
  }

 private:
  Field field_;
  std::vector<std::string> variables_;
};

using RingPtr = std::shared_ptr<const Ring>;

RingPtr make_ring(Field field, std::vector<std::string> variables);

/// `ring` with one extra trailing variable whose name does not clash.
RingPtr extend_ring(const RingPtr& ring, std::string_view hint = "t");

/// `ring` with variable `i` removed (the ring of the i-th standard affine chart).
RingPtr chart_ring(const RingPtr& ring, std::size_t i);

bool same_ring(const RingPtr& a, const RingPtr& b);

}  // namespace smooth
