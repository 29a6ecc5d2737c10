// Copyright 2026 The onefact Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "onefact/group.hpp"
#include "onefact/starters.hpp"

namespace onefact {

/// Vertex of K_{n+1} on the point set Gamma u {inf}. Id 0 is inf and id
/// e+1 is the element e, so the natural order puts inf first.
struct Vertex {
  std::uint32_t id = 0;

  static constexpr Vertex infinity() { return Vertex{0}; }
  static constexpr Vertex finite(Elem e) { return Vertex{e.value + 1}; }

  constexpr bool is_infinity() const { return id == 0; }
  constexpr Elem element() const { return Elem{id - 1}; }

  friend constexpr auto operator<=>(const Vertex&, const Vertex&) = default;
};

std::string to_string(Vertex v);

struct Edge {
  Vertex u;
  Vertex v;

  friend constexpr auto operator<=>(const Edge&, const Edge&) = default;
};

constexpr Edge make_edge(Vertex a, Vertex b) { return a <= b ? Edge{a, b} : Edge{b, a}; }

inline constexpr std::uint32_t kNoPartner = 0xffffffffu;

/// One perfect matching, labelled by its translate index gamma. The edge
/// list is kept as given (sorted); the partner map is derived from it and
/// is only meaningful when is_perfect_matching() holds.
class OneFactor {
 public:
  OneFactor(Elem gamma, std::vector<Edge> edges, std::uint32_t vertex_count);

  Elem gamma() const noexcept { return gamma_; }
  const std::vector<Edge>& edges() const noexcept { return edges_; }
  std::uint32_t vertex_count() const noexcept { return static_cast<std::uint32_t>(partner_.size()); }
  std::span<const std::uint32_t> partners() const noexcept { return partner_; }
  std::uint32_t partner(std::uint32_t v) const noexcept { return partner_[v]; }
  Vertex partner(Vertex v) const noexcept { return Vertex{partner_[v.id]}; }
  bool is_perfect_matching() const noexcept { return perfect_; }

 private:
  Elem gamma_;
  std::vector<Edge> edges_;
  std::vector<std::uint32_t> partner_;
  bool perfect_ = false;
};

/// Starter provenance is trusted only when the factorization was built here.
/// Loaded files keep their starter for display but always run exhaustive.
struct FactorizationSource {
  std::optional<Starter> starter;
  bool trusted = false;
};

class OneFactorization {
 public:
  OneFactorization(Group group, std::vector<OneFactor> factors, FactorizationSource source);

  const Group& group() const noexcept { return group_; }
  const std::vector<OneFactor>& factors() const noexcept { return factors_; }
  const FactorizationSource& source() const noexcept { return source_; }
  std::uint32_t vertex_count() const noexcept { return group_.order() + 1; }
  bool fast_path_available() const noexcept { return source_.starter.has_value() && source_.trusted; }

  /// Factor labelled gamma; throws InvalidInput when absent.
  const OneFactor& factor(Elem gamma) const;

 private:
  Group group_;
  std::vector<OneFactor> factors_;
  FactorizationSource source_;
};

struct FactorId {
  char family = 'F';
  Elem gamma;

  friend constexpr auto operator<=>(const FactorId&, const FactorId&) = default;
};

std::string to_string(const FactorId& id);  // "F[3]"

struct WitnessEdge {
  Vertex u;
  Vertex v;
  FactorId owner;
};

/// 4-cycle a-b-d-c-a in the union of two factors; `cycle` lists the
/// vertices in walk order and edges[i] joins cycle[i] to cycle[i+1].
struct CycleWitness {
  std::array<Vertex, 4> cycle;
  std::array<WitnessEdge, 4> edges;
};

/// Same vertex set and same undirected edges, ignoring rotation and owners.
bool same_cycle(const CycleWitness& a, const CycleWitness& b);

/// Re-checks a witness against the two factors it claims to come from.
bool witness_valid(const CycleWitness& w, const OneFactor& f, const OneFactor& g,
                   char f_family = 'F', char g_family = 'F');

struct SharedEdges {
  FactorId first;
  FactorId second;
  std::vector<Edge> edges;
};

enum class CheckMode { Fast, Exhaustive };

std::string_view to_string(CheckMode mode);

struct PairCheckReport {
  std::string property;
  bool pass = true;
  CheckMode mode = CheckMode::Exhaustive;
  std::uint64_t pairs_checked = 0;
  std::vector<CycleWitness> witnesses;  // one per failing factor pair
  std::vector<SharedEdges> shared;      // orthogonality violations
};

struct StructureReport {
  bool ok = false;
  std::vector<std::string> violations;
};

/// F_gamma = {{inf, gamma}} u {{x+gamma, y+gamma}}. Throws InvalidStarter.
OneFactorization factorization_from_starter(const Group& group, const Starter& s);

StructureReport is_one_factorization(const OneFactorization& f);

/// Partner chasing: for each edge {a,b} of f in sorted order, c = g(a),
/// d = g(b); a 4-cycle exists iff c != b and f(c) = d.
std::optional<CycleWitness> factors_c4(const OneFactor& f, const OneFactor& g,
                                       char f_family = 'F', char g_family = 'F');

inline constexpr std::uint32_t kBruteForceVertexLimit = 64;

/// All alternating 4-cycles of f u g by enumerating vertex quadruples.
/// Independent of partner chasing; throws TooLarge above the vertex limit.
std::vector<CycleWitness> brute_force_c4(const OneFactor& f, const OneFactor& g,
                                         char f_family = 'F', char g_family = 'F');

/// Component structure of f u g: shared edges plus alternating cycles.
struct UnionDecomposition {
  std::uint32_t max_degree = 0;
  std::uint32_t shared_edges = 0;
  std::vector<std::uint32_t> cycle_lengths;  // ascending
};

UnionDecomposition decompose_union(const OneFactor& f, const OneFactor& g);

PairCheckReport factorization_c4_free(const OneFactorization& f, CheckMode mode, char family = 'F');

/// Pairs drawn from both families (F within, G within, F against G).
PairCheckReport pair_totally_c4_free(const OneFactorization& f, const OneFactorization& g,
                                     CheckMode mode);

/// Only the F-against-G unions.
PairCheckReport pair_cross_c4_free(const OneFactorization& f, const OneFactorization& g,
                                   CheckMode mode);

PairCheckReport factorizations_orthogonal(const OneFactorization& f, const OneFactorization& g,
                                          CheckMode mode = CheckMode::Exhaustive);

}  // namespace onefact
