// Copyright 2026 The onefact Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <memory>
#include <string>
#include <vector>

#include "onefact/algebra.hpp"
#include "onefact/group.hpp"

namespace onefact {

/// Unordered pair stored with the smaller encoding first.
struct StarterPair {
  Elem first;
  Elem second;

  friend constexpr auto operator<=>(const StarterPair&, const StarterPair&) = default;
};

constexpr StarterPair make_pair(Elem a, Elem b) {
  return a <= b ? StarterPair{a, b} : StarterPair{b, a};
}

/// Where a starter came from. Negated provenance nests the original.
struct Provenance {
  enum class Kind { Horton, Patterned, Negated, Custom };

  Kind kind = Kind::Custom;
  Elem beta{};
  std::shared_ptr<const Provenance> inner;

  static Provenance horton(Elem beta) { return {Kind::Horton, beta, nullptr}; }
  static Provenance patterned() { return {Kind::Patterned, Elem{}, nullptr}; }
  static Provenance custom() { return {Kind::Custom, Elem{}, nullptr}; }
  static Provenance negated(Provenance of) {
    return {Kind::Negated, Elem{}, std::make_shared<const Provenance>(std::move(of))};
  }

  /// "S_7", "-S_7", "P", "custom".
  std::string describe() const;

  friend bool operator==(const Provenance& a, const Provenance& b);
};

/// A set of pairs of nonzero group elements. Construction only normalizes
/// (each pair smaller-first, pairs sorted); use validate_starter to decide
/// whether the pairs actually form a starter.
class Starter {
 public:
  Starter(std::vector<StarterPair> pairs, Provenance provenance);

  const std::vector<StarterPair>& pairs() const noexcept { return pairs_; }
  const Provenance& provenance() const noexcept { return provenance_; }
  std::size_t size() const noexcept { return pairs_.size(); }

  friend bool operator==(const Starter&, const Starter&) = default;

 private:
  std::vector<StarterPair> pairs_;
  Provenance provenance_;
};

struct StarterReport {
  bool is_starter = false;
  bool is_strong = false;
  std::vector<Elem> sum_set;  // distinct pair sums, ascending
  std::vector<std::string> violations;
};

struct OrthogonalityReport {
  bool orthogonal = false;
  // u - x for each pair of s, in s's pair order, t oriented so u - v = x - y.
  std::vector<Elem> displacements;
  std::vector<std::string> violations;
};

/// {{x, x*beta} : x in QR(q)}. Requires q = 3 (mod 4), q > 3 (BadField) and
/// beta in NQR(q) \ {-1} (BadBeta).
Starter horton_starter(const Field& field, Elem beta);

Starter patterned_starter(const Group& group);

Starter negate_starter(const Group& group, const Starter& s);

StarterReport validate_starter(const Group& group, const Starter& s);

/// Throws MalformedStarter when a difference of s has no matching pair in t.
OrthogonalityReport starters_orthogonal(const Group& group, const Starter& s, const Starter& t);

}  // namespace onefact
