// Copyright 2026 The onefact Authors
// SPDX-License-Identifier: Apache-2.0

#include "onefact/group.hpp"

namespace onefact {

Group Group::of_field(Field field) {
  return of_field(std::make_shared<const Field>(std::move(field)));
}

Group Group::of_field(std::shared_ptr<const Field> field) {
  const std::uint32_t q = field->order();
  return Group(std::move(field), q);
}

Group Group::cyclic(std::uint32_t n) {
  const CyclicRing ring = make_cyclic(n);
  return Group(ring, ring.n);
}

Elem Group::add(Elem a, Elem b) const noexcept {
  if (is_field()) return field().add(a, b);
  const std::uint32_t s = a.value + b.value;
  return Elem{s >= order_ ? s - order_ : s};
}

Elem Group::neg(Elem a) const noexcept {
  if (is_field()) return field().neg(a);
  return Elem{a.value == 0 ? 0 : order_ - a.value};
}

Elem Group::sub(Elem a, Elem b) const noexcept { return add(a, neg(b)); }

std::vector<Elem> Group::nonzero_elements() const {
  std::vector<Elem> out;
  out.reserve(order_ - 1);
  for (std::uint32_t a = 1; a < order_; ++a) out.emplace_back(a);
  return out;
}

std::string Group::name() const {
  return (is_field() ? "GF(" : "Z_") + std::to_string(order_) + (is_field() ? ")" : "");
}

bool operator==(const Group& a, const Group& b) {
  if (a.is_field() != b.is_field() || a.order_ != b.order_) return false;
  if (a.is_field()) return a.field().spec() == b.field().spec();
  return true;
}

}  // namespace onefact
