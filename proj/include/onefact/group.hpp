// Copyright 2026 The onefact Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <memory>
#include <string>
#include <variant>
#include <vector>

#include "onefact/algebra.hpp"

namespace onefact {

/// Odd-order additive abelian group: either the additive group of a field
/// or Z_n. Only the additive structure is exposed; the field (when present)
/// is shared, so copies are cheap.
class Group {
 public:
  static Group of_field(Field field);
  static Group of_field(std::shared_ptr<const Field> field);
  static Group cyclic(std::uint32_t n);

  bool is_field() const noexcept { return std::holds_alternative<FieldPtr>(kind_); }
  /// Precondition: is_field().
  const Field& field() const { return *std::get<FieldPtr>(kind_); }
  const std::shared_ptr<const Field>& field_ptr() const { return std::get<FieldPtr>(kind_); }

  std::uint32_t order() const noexcept { return order_; }
  bool contains(Elem a) const noexcept { return a.value < order_; }

  Elem zero() const noexcept { return Elem{0}; }
  Elem add(Elem a, Elem b) const noexcept;
  Elem sub(Elem a, Elem b) const noexcept;
  Elem neg(Elem a) const noexcept;

  std::vector<Elem> nonzero_elements() const;

  /// "GF(27)" or "Z_9".
  std::string name() const;

  friend bool operator==(const Group& a, const Group& b);

 private:
  using FieldPtr = std::shared_ptr<const Field>;

  Group(std::variant<FieldPtr, CyclicRing> kind, std::uint32_t order)
      : kind_(std::move(kind)), order_(order) {}

  std::variant<FieldPtr, CyclicRing> kind_;
  std::uint32_t order_;
};

}  // namespace onefact
