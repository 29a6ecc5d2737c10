// Copyright 2026 The onefact Authors
// SPDX-License-Identifier: Apache-2.0

#include "onefact/factorizations.hpp"

#include <algorithm>

#include "onefact/error.hpp"

namespace onefact {

std::string to_string(Vertex v) {
  return v.is_infinity() ? std::string("inf") : std::to_string(v.element().value);
}

std::string to_string(const FactorId& id) {
  return std::string(1, id.family) + "[" + std::to_string(id.gamma.value) + "]";
}

std::string_view to_string(CheckMode mode) {
  return mode == CheckMode::Fast ? "fast" : "exhaustive";
}

OneFactor::OneFactor(Elem gamma, std::vector<Edge> edges, std::uint32_t vertex_count)
    : gamma_(gamma), edges_(std::move(edges)), partner_(vertex_count, kNoPartner) {
  for (auto& e : edges_) e = make_edge(e.u, e.v);
  std::sort(edges_.begin(), edges_.end());
  perfect_ = 2 * edges_.size() == vertex_count;
  for (const auto& e : edges_) {
    if (e.v.id >= vertex_count || e.u == e.v) {
      perfect_ = false;
      continue;
    }
    if (partner_[e.u.id] != kNoPartner || partner_[e.v.id] != kNoPartner) perfect_ = false;
    partner_[e.u.id] = e.v.id;
    partner_[e.v.id] = e.u.id;
  }
  if (perfect_) {
    perfect_ = std::none_of(partner_.begin(), partner_.end(),
                            [](std::uint32_t p) { return p == kNoPartner; });
  }
}

OneFactorization::OneFactorization(Group group, std::vector<OneFactor> factors,
                                   FactorizationSource source)
    : group_(std::move(group)), factors_(std::move(factors)), source_(std::move(source)) {
  std::stable_sort(factors_.begin(), factors_.end(),
                   [](const OneFactor& a, const OneFactor& b) { return a.gamma() < b.gamma(); });
}

const OneFactor& OneFactorization::factor(Elem gamma) const {
  if (gamma.value < factors_.size() && factors_[gamma.value].gamma() == gamma) {
    return factors_[gamma.value];
  }
  for (const auto& f : factors_) {
    if (f.gamma() == gamma) return f;
  }
  throw Error(ErrorCode::InvalidInput, "no factor labelled " + std::to_string(gamma.value));
}

OneFactorization factorization_from_starter(const Group& group, const Starter& s) {
  const StarterReport report = validate_starter(group, s);
  if (!report.is_starter) {
    throw Error(ErrorCode::InvalidStarter,
                s.provenance().describe() + " is not a starter for " + group.name() + ": " +
                    report.violations.front());
  }
  const std::uint32_t n = group.order();
  std::vector<OneFactor> factors;
  factors.reserve(n);
  for (std::uint32_t g = 0; g < n; ++g) {
    const Elem gamma{g};
    std::vector<Edge> edges;
    edges.reserve(s.size() + 1);
    edges.push_back(make_edge(Vertex::infinity(), Vertex::finite(gamma)));
    for (const auto& pr : s.pairs()) {
      edges.push_back(make_edge(Vertex::finite(group.add(pr.first, gamma)),
                                Vertex::finite(group.add(pr.second, gamma))));
    }
    factors.emplace_back(gamma, std::move(edges), n + 1);
  }
  return OneFactorization(group, std::move(factors), FactorizationSource{s, true});
}

StructureReport is_one_factorization(const OneFactorization& f) {
  StructureReport report;
  auto& out = report.violations;
  const std::uint32_t n = f.group().order();
  const std::uint32_t vertices = n + 1;
  constexpr std::size_t kMaxListed = 20;

  if (f.factors().size() != n) {
    out.push_back("expected " + std::to_string(n) + " factors, found " +
                  std::to_string(f.factors().size()));
  }
  std::vector<std::uint32_t> label_count(n, 0);
  for (const auto& factor : f.factors()) {
    const std::string name = to_string(FactorId{'F', factor.gamma()});
    if (factor.gamma().value >= n) {
      out.push_back(name + ": label outside " + f.group().name());
    } else if (++label_count[factor.gamma().value] == 2) {
      out.push_back(name + ": label repeated");
    }
    std::vector<std::uint32_t> degree(vertices, 0);
    for (const auto& e : factor.edges()) {
      if (e.v.id >= vertices) {
        out.push_back(name + ": edge {" + to_string(e.u) + "," + to_string(e.v) +
                      "} leaves the vertex set");
        continue;
      }
      if (e.u == e.v) out.push_back(name + ": vertex " + to_string(e.u) + " matched to itself");
      ++degree[e.u.id];
      if (e.u != e.v) ++degree[e.v.id];
    }
    for (std::uint32_t v = 0; v < vertices; ++v) {
      if (degree[v] == 0) out.push_back(name + ": vertex " + to_string(Vertex{v}) + " uncovered");
      if (degree[v] > 1) out.push_back(name + ": vertex " + to_string(Vertex{v}) + " covered twice");
    }
  }

  // Every edge of K_{n+1} exactly once across all factors.
  std::vector<int> owner(static_cast<std::size_t>(vertices) * vertices, -1);
  std::size_t listed = 0;
  for (std::size_t i = 0; i < f.factors().size(); ++i) {
    for (const auto& e : f.factors()[i].edges()) {
      if (e.v.id >= vertices || e.u == e.v) continue;
      int& slot = owner[static_cast<std::size_t>(e.u.id) * vertices + e.v.id];
      if (slot >= 0) {
        if (listed++ < kMaxListed) {
          out.push_back("edge {" + to_string(e.u) + "," + to_string(e.v) + "} appears in " +
                        to_string(FactorId{'F', f.factors()[slot].gamma()}) + " and " +
                        to_string(FactorId{'F', f.factors()[i].gamma()}));
        }
      } else {
        slot = static_cast<int>(i);
      }
    }
  }
  std::size_t missing = 0;
  for (std::uint32_t u = 0; u < vertices; ++u) {
    for (std::uint32_t v = u + 1; v < vertices; ++v) {
      if (owner[static_cast<std::size_t>(u) * vertices + v] < 0) {
        if (missing++ < kMaxListed) {
          out.push_back("edge {" + to_string(Vertex{u}) + "," + to_string(Vertex{v}) + "} missing");
        }
      }
    }
  }
  if (missing > kMaxListed) out.push_back(std::to_string(missing) + " edges missing in total");
  report.ok = out.empty();
  return report;
}

namespace {

CycleWitness make_witness(Vertex a, Vertex b, Vertex d, Vertex c, FactorId fid, FactorId gid) {
  return CycleWitness{{a, b, d, c}, {WitnessEdge{a, b, fid}, WitnessEdge{b, d, gid},
                                     WitnessEdge{d, c, fid}, WitnessEdge{c, a, gid}}};
}

}  // namespace

std::optional<CycleWitness> factors_c4(const OneFactor& f, const OneFactor& g, char f_family,
                                       char g_family) {
  const auto fp = f.partners();
  const auto gp = g.partners();
  for (const auto& e : f.edges()) {
    const std::uint32_t a = e.u.id, b = e.v.id;
    if (b >= gp.size() || b >= fp.size()) continue;
    const std::uint32_t c = gp[a], d = gp[b];
    if (c == kNoPartner || d == kNoPartner) continue;  // not a matching; nothing sensible to chase
    if (c != b && fp[c] == d) {
      return make_witness(Vertex{a}, Vertex{b}, Vertex{d}, Vertex{c}, FactorId{f_family, f.gamma()},
                          FactorId{g_family, g.gamma()});
    }
  }
  return std::nullopt;
}

std::vector<CycleWitness> brute_force_c4(const OneFactor& f, const OneFactor& g, char f_family,
                                         char g_family) {
  const std::uint32_t n = f.vertex_count();
  if (n > kBruteForceVertexLimit || g.vertex_count() != n) {
    throw Error(ErrorCode::TooLarge, "brute-force search limited to " +
                                         std::to_string(kBruteForceVertexLimit) + " vertices");
  }
  // own[u][v]: bit 0 = edge of f, bit 1 = edge of g; built from edge lists.
  std::vector<std::uint8_t> own(static_cast<std::size_t>(n) * n, 0);
  auto at = [&](std::uint32_t u, std::uint32_t v) -> std::uint8_t& { return own[u * n + v]; };
  for (const auto& e : f.edges()) at(e.u.id, e.v.id) |= 1, at(e.v.id, e.u.id) |= 1;
  for (const auto& e : g.edges()) at(e.u.id, e.v.id) |= 2, at(e.v.id, e.u.id) |= 2;

  const FactorId fid{f_family, f.gamma()}, gid{g_family, g.gamma()};
  std::vector<CycleWitness> found;
  auto try_cycle = [&](std::uint32_t v0, std::uint32_t v1, std::uint32_t v2, std::uint32_t v3) {
    const std::uint8_t e0 = at(v0, v1), e1 = at(v1, v2), e2 = at(v2, v3), e3 = at(v3, v0);
    if ((e0 & e2 & 1) && (e1 & e3 & 2)) {
      found.push_back(make_witness(Vertex{v0}, Vertex{v1}, Vertex{v2}, Vertex{v3}, fid, gid));
    } else if ((e0 & e2 & 2) && (e1 & e3 & 1)) {
      found.push_back(make_witness(Vertex{v1}, Vertex{v2}, Vertex{v3}, Vertex{v0}, fid, gid));
    }
  };
  for (std::uint32_t a = 0; a < n; ++a) {
    for (std::uint32_t b = a + 1; b < n; ++b) {
      for (std::uint32_t c = b + 1; c < n; ++c) {
        for (std::uint32_t d = c + 1; d < n; ++d) {
          try_cycle(a, b, c, d);
          try_cycle(a, b, d, c);
          try_cycle(a, c, b, d);
        }
      }
    }
  }
  return found;
}

bool same_cycle(const CycleWitness& a, const CycleWitness& b) {
  auto edges_of = [](const CycleWitness& w) {
    std::array<Edge, 4> out;
    for (std::size_t i = 0; i < 4; ++i) out[i] = make_edge(w.cycle[i], w.cycle[(i + 1) % 4]);
    std::sort(out.begin(), out.end());
    return out;
  };
  return edges_of(a) == edges_of(b);
}

bool witness_valid(const CycleWitness& w, const OneFactor& f, const OneFactor& g, char f_family,
                   char g_family) {
  const FactorId fid{f_family, f.gamma()}, gid{g_family, g.gamma()};
  if (fid == gid) return false;
  std::array<Vertex, 4> sorted = w.cycle;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) return false;
  for (std::size_t i = 0; i < 4; ++i) {
    const WitnessEdge& e = w.edges[i];
    if (make_edge(e.u, e.v) != make_edge(w.cycle[i], w.cycle[(i + 1) % 4])) return false;
    if (e.owner != w.edges[(i + 2) % 4].owner || e.owner == w.edges[(i + 1) % 4].owner) return false;
    const OneFactor* owner = e.owner == fid ? &f : e.owner == gid ? &g : nullptr;
    if (owner == nullptr) return false;
    if (e.u.id >= owner->vertex_count() || owner->partner(e.u) != e.v) return false;
  }
  return true;
}

UnionDecomposition decompose_union(const OneFactor& f, const OneFactor& g) {
  UnionDecomposition out;
  const std::uint32_t n = f.vertex_count();
  std::vector<bool> seen(n, false);
  for (std::uint32_t v = 0; v < n; ++v) {
    const std::uint32_t deg = f.partner(v) == g.partner(v) ? 1 : 2;
    out.max_degree = std::max(out.max_degree, deg);
  }
  for (std::uint32_t v = 0; v < n; ++v) {
    if (seen[v]) continue;
    if (f.partner(v) == g.partner(v)) {
      seen[v] = seen[f.partner(v)] = true;
      ++out.shared_edges;
      continue;
    }
    std::uint32_t length = 0, x = v;
    bool use_f = true;
    do {
      seen[x] = true;
      x = use_f ? f.partner(x) : g.partner(x);
      use_f = !use_f;
      ++length;
    } while (x != v || !use_f);
    out.cycle_lengths.push_back(length);
  }
  std::sort(out.cycle_lengths.begin(), out.cycle_lengths.end());
  return out;
}

namespace {

void require_fast(const OneFactorization& f) {
  if (!f.fast_path_available()) {
    throw Error(ErrorCode::FastModeUnavailable,
                "fast mode needs a factorization generated here from a starter");
  }
}

void check_pair(PairCheckReport& report, const OneFactor& a, const OneFactor& b, char fa, char fb) {
  ++report.pairs_checked;
  if (auto w = factors_c4(a, b, fa, fb)) {
    report.pass = false;
    report.witnesses.push_back(*w);
  }
}

void within_family(PairCheckReport& report, const OneFactorization& f, CheckMode mode, char family) {
  const auto& factors = f.factors();
  if (mode == CheckMode::Fast) {
    // F_i u F_j = (F_0 u F_{j-i}) + i.
    const OneFactor& base = f.factor(f.group().zero());
    for (const auto& other : factors) {
      if (other.gamma() != base.gamma()) check_pair(report, base, other, family, family);
    }
    return;
  }
  for (std::size_t i = 0; i < factors.size(); ++i) {
    for (std::size_t j = i + 1; j < factors.size(); ++j) {
      check_pair(report, factors[i], factors[j], family, family);
    }
  }
}

void across_families(PairCheckReport& report, const OneFactorization& f,
                     const OneFactorization& g, CheckMode mode) {
  if (mode == CheckMode::Fast) {
    const OneFactor& base = f.factor(f.group().zero());
    for (const auto& other : g.factors()) check_pair(report, base, other, 'F', 'G');
    return;
  }
  for (const auto& a : f.factors()) {
    for (const auto& b : g.factors()) check_pair(report, a, b, 'F', 'G');
  }
}

void require_compatible(const OneFactorization& f, const OneFactorization& g, CheckMode mode) {
  if (f.vertex_count() != g.vertex_count()) {
    throw Error(ErrorCode::InvalidInput, "factorizations live on different vertex sets");
  }
  if (mode == CheckMode::Fast) {
    require_fast(f);
    require_fast(g);
    if (!(f.group() == g.group())) {
      throw Error(ErrorCode::FastModeUnavailable, "fast mode needs both over the same group");
    }
  }
}

}  // namespace

PairCheckReport factorization_c4_free(const OneFactorization& f, CheckMode mode, char family) {
  if (mode == CheckMode::Fast) require_fast(f);
  PairCheckReport report{"c4_free", true, mode, 0, {}, {}};
  within_family(report, f, mode, family);
  return report;
}

PairCheckReport pair_totally_c4_free(const OneFactorization& f, const OneFactorization& g,
                                     CheckMode mode) {
  require_compatible(f, g, mode);
  PairCheckReport report{"totally_c4_free", true, mode, 0, {}, {}};
  within_family(report, f, mode, 'F');
  within_family(report, g, mode, 'G');
  across_families(report, f, g, mode);
  return report;
}

PairCheckReport pair_cross_c4_free(const OneFactorization& f, const OneFactorization& g,
                                   CheckMode mode) {
  require_compatible(f, g, mode);
  PairCheckReport report{"cross_c4_free", true, mode, 0, {}, {}};
  across_families(report, f, g, mode);
  return report;
}

PairCheckReport factorizations_orthogonal(const OneFactorization& f, const OneFactorization& g,
                                          CheckMode mode) {
  require_compatible(f, g, mode);
  PairCheckReport report{"orthogonal", true, mode, 0, {}, {}};
  auto compare = [&](const OneFactor& a, const OneFactor& b) {
    ++report.pairs_checked;
    std::vector<Edge> shared;
    for (const auto& e : a.edges()) {
      if (b.partner(e.u) == e.v) shared.push_back(e);
    }
    if (shared.size() > 1) {
      report.pass = false;
      report.shared.push_back({FactorId{'F', a.gamma()}, FactorId{'G', b.gamma()}, std::move(shared)});
    }
  };
  if (mode == CheckMode::Fast) {
    const OneFactor& base = f.factor(f.group().zero());
    for (const auto& b : g.factors()) compare(base, b);
  } else {
    for (const auto& a : f.factors()) {
      for (const auto& b : g.factors()) compare(a, b);
    }
  }
  return report;
}

}  // namespace onefact
