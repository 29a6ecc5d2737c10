// Copyright 2026 The onefact Authors
// SPDX-License-Identifier: Apache-2.0

#include "onefact/starters.hpp"

#include <algorithm>
#include <string>
#include <tuple>

#include "onefact/error.hpp"

namespace onefact {
namespace {

std::string show(Elem a) { return std::to_string(a.value); }

std::string show(const StarterPair& pr) {
  return "{" + show(pr.first) + "," + show(pr.second) + "}";
}

}  // namespace

std::string Provenance::describe() const {
  switch (kind) {
    case Kind::Horton: return "S_" + show(beta);
    case Kind::Patterned: return "P";
    case Kind::Negated: return "-" + (inner ? inner->describe() : std::string("?"));
    case Kind::Custom: return "custom";
  }
  return "?";
}

bool operator==(const Provenance& a, const Provenance& b) {
  if (a.kind != b.kind) return false;
  switch (a.kind) {
    case Provenance::Kind::Horton: return a.beta == b.beta;
    case Provenance::Kind::Negated:
      if (!a.inner || !b.inner) return a.inner == b.inner;
      return *a.inner == *b.inner;
    default: return true;
  }
}

Starter::Starter(std::vector<StarterPair> pairs, Provenance provenance)
    : pairs_(std::move(pairs)), provenance_(std::move(provenance)) {
  for (auto& pr : pairs_) pr = make_pair(pr.first, pr.second);
  std::sort(pairs_.begin(), pairs_.end());
}

Starter horton_starter(const Field& field, Elem beta) {
  const std::uint32_t q = field.order();
  if (q % 4 != 3 || q == 3) {
    throw Error(ErrorCode::BadField, "Horton starters need q = 3 (mod 4), q > 3; got " +
                                         std::to_string(q));
  }
  if (!field.contains(beta) || !field.is_nqr(beta)) {
    throw Error(ErrorCode::BadBeta, "beta = " + show(beta) + " is not a non-residue of GF(" +
                                        std::to_string(q) + ")");
  }
  if (beta == field.neg(field.one())) {
    throw Error(ErrorCode::BadBeta, "beta = -1 is excluded");
  }
  std::vector<StarterPair> pairs;
  pairs.reserve((q - 1) / 2);
  for (const Elem x : field.qr_set()) pairs.push_back(make_pair(x, field.mul(x, beta)));
  return Starter(std::move(pairs), Provenance::horton(beta));
}

Starter patterned_starter(const Group& group) {
  std::vector<StarterPair> pairs;
  for (const Elem x : group.nonzero_elements()) {
    const Elem y = group.neg(x);
    if (x < y) pairs.push_back({x, y});
  }
  return Starter(std::move(pairs), Provenance::patterned());
}

Starter negate_starter(const Group& group, const Starter& s) {
  std::vector<StarterPair> pairs;
  pairs.reserve(s.size());
  for (const auto& pr : s.pairs()) pairs.push_back(make_pair(group.neg(pr.first), group.neg(pr.second)));
  return Starter(std::move(pairs), Provenance::negated(s.provenance()));
}

StarterReport validate_starter(const Group& group, const Starter& s) {
  StarterReport report;
  const std::uint32_t n = group.order();
  const std::size_t k = (n - 1) / 2;
  auto& out = report.violations;

  if (s.size() != k) {
    out.push_back("expected " + std::to_string(k) + " pairs, found " + std::to_string(s.size()));
  }
  std::vector<std::uint32_t> endpoint_count(n, 0), difference_count(n, 0);
  bool in_range = true;
  for (const auto& pr : s.pairs()) {
    if (!group.contains(pr.first) || !group.contains(pr.second)) {
      out.push_back("pair " + show(pr) + " has an element outside " + group.name());
      in_range = false;
      continue;
    }
    if (pr.first == group.zero() || pr.second == group.zero()) {
      out.push_back("pair " + show(pr) + " contains zero");
    }
    if (pr.first == pr.second) out.push_back("pair " + show(pr) + " is degenerate");
    ++endpoint_count[pr.first.value];
    ++endpoint_count[pr.second.value];
    const Elem d = group.sub(pr.first, pr.second);
    ++difference_count[d.value];
    ++difference_count[group.neg(d).value];
  }
  for (std::uint32_t a = 1; a < n; ++a) {
    if (endpoint_count[a] == 0) out.push_back("endpoint " + std::to_string(a) + " missing");
    if (endpoint_count[a] > 1) {
      out.push_back("endpoint " + std::to_string(a) + " repeated " +
                    std::to_string(endpoint_count[a]) + " times");
    }
    if (difference_count[a] == 0) out.push_back("difference " + std::to_string(a) + " missing");
    if (difference_count[a] > 1) {
      out.push_back("difference " + std::to_string(a) + " covered " +
                    std::to_string(difference_count[a]) + " times");
    }
  }
  report.is_starter = out.empty();
  if (!in_range) return report;

  // Strong condition: every pair sum nonzero and pairwise distinct.
  std::vector<int> sum_owner(n, -1);
  bool strong = report.is_starter;
  for (std::size_t i = 0; i < s.size(); ++i) {
    const auto& pr = s.pairs()[i];
    const Elem sum = group.add(pr.first, pr.second);
    if (sum == group.zero()) {
      out.push_back("sum of pair " + show(pr) + " is zero");
      strong = false;
    } else if (sum_owner[sum.value] >= 0) {
      out.push_back("sum " + show(sum) + " shared by pairs " + show(s.pairs()[sum_owner[sum.value]]) +
                    " and " + show(pr));
      strong = false;
    } else {
      sum_owner[sum.value] = static_cast<int>(i);
    }
  }
  for (std::uint32_t a = 1; a < n; ++a) {
    if (sum_owner[a] >= 0) report.sum_set.emplace_back(a);
  }
  report.is_strong = strong && report.sum_set.size() == k;
  return report;
}

OrthogonalityReport starters_orthogonal(const Group& group, const Starter& s, const Starter& t) {
  const std::uint32_t n = group.order();
  // by_difference[d] = index+1 of the t-pair oriented (u, v) with u - v = d.
  struct Oriented {
    Elem u, v;
    bool set = false;
  };
  std::vector<Oriented> by_difference(n);
  for (const auto& pr : t.pairs()) {
    if (!group.contains(pr.first) || !group.contains(pr.second)) {
      throw Error(ErrorCode::MalformedStarter, "pair " + show(pr) + " outside " + group.name());
    }
    const Elem d = group.sub(pr.first, pr.second);
    for (const auto& [u, v, diff] : {std::tuple{pr.first, pr.second, d},
                                     std::tuple{pr.second, pr.first, group.neg(d)}}) {
      if (by_difference[diff.value].set || diff == group.zero()) {
        throw Error(ErrorCode::MalformedStarter, "difference " + show(diff) + " not unique in t");
      }
      by_difference[diff.value] = {u, v, true};
    }
  }

  OrthogonalityReport report;
  std::vector<int> seen(n, -1);
  for (std::size_t i = 0; i < s.size(); ++i) {
    const auto& [x, y] = s.pairs()[i];
    if (!group.contains(x) || !group.contains(y)) {
      throw Error(ErrorCode::MalformedStarter, "pair " + show(s.pairs()[i]) + " outside " + group.name());
    }
    const Elem d = group.sub(x, y);
    const Oriented& match = by_difference[d.value];
    if (!match.set) {
      throw Error(ErrorCode::MalformedStarter, "difference " + show(d) + " of pair " +
                                                   show(s.pairs()[i]) + " has no partner in t");
    }
    const Elem shift = group.sub(match.u, x);
    report.displacements.push_back(shift);
    if (shift == group.zero()) {
      report.violations.push_back("pair " + show(s.pairs()[i]) + " also appears in t");
    } else if (seen[shift.value] >= 0) {
      report.violations.push_back("displacement " + show(shift) + " shared by pairs " +
                                  show(s.pairs()[seen[shift.value]]) + " and " +
                                  show(s.pairs()[i]));
    } else {
      seen[shift.value] = static_cast<int>(i);
    }
  }
  report.orthogonal = report.violations.empty() && s.size() == (n - 1) / 2;
  return report;
}

}  // namespace onefact
