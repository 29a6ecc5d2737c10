// Copyright 2026 The onefact Authors
// SPDX-License-Identifier: Apache-2.0

#include <gtest/gtest.h>

#include <set>

#include "onefact/factorizations.hpp"
#include "unit/oracles.hpp"

namespace onefact {
namespace {

using testing::expect_error;

Vertex fin(std::uint32_t e) { return Vertex::finite(Elem{e}); }

OneFactorization horton(std::uint32_t q, std::uint32_t beta) {
  const Field f = make_field(q);
  return factorization_from_starter(Group::of_field(f), horton_starter(f, Elem{beta}));
}

OneFactorization patterned(const Group& g) { return factorization_from_starter(g, patterned_starter(g)); }

OneFactorization untrusted_copy(const OneFactorization& f) {
  return OneFactorization(f.group(), f.factors(), FactorizationSource{});
}

std::vector<Elem> usable_betas(const Field& f) {
  std::vector<Elem> out;
  for (Elem b : f.nqr_set()) {
    if (b != f.neg(f.one())) out.push_back(b);
  }
  return out;
}

// Every starter-generated factorization we sweep in the small-q tests.
std::vector<OneFactorization> small_family(std::uint32_t limit) {
  std::vector<OneFactorization> out;
  for (std::uint32_t n = 5; n <= limit; n += 2) out.push_back(patterned(Group::cyclic(n)));
  for (std::uint32_t q : testing::orders_3_mod_4(7, limit)) {
    const Field f = make_field(q);
    const Group g = Group::of_field(f);
    out.push_back(patterned(g));
    for (Elem b : usable_betas(f)) {
      const Starter s = horton_starter(f, b);
      out.push_back(factorization_from_starter(g, s));
      out.push_back(factorization_from_starter(g, negate_starter(g, s)));
    }
  }
  return out;
}

TEST(Expand, PatternedZ5) {
  const OneFactorization f = patterned(Group::cyclic(5));
  ASSERT_EQ(f.factors().size(), 5u);
  std::set<Edge> all;
  std::size_t total = 0;
  for (const auto& fac : f.factors()) {
    EXPECT_TRUE(fac.is_perfect_matching());
    total += fac.edges().size();
    all.insert(fac.edges().begin(), fac.edges().end());
  }
  EXPECT_EQ(total, 15u);
  EXPECT_EQ(all.size(), 15u);
  EXPECT_TRUE(is_one_factorization(f).ok);
}

TEST(Expand, Gf11S7FirstFactor) {
  const OneFactorization f = horton(11, 7);
  const auto& e = f.factor(Elem{0}).edges();
  EXPECT_NE(std::find(e.begin(), e.end(), make_edge(Vertex::infinity(), fin(0))), e.end());
  EXPECT_NE(std::find(e.begin(), e.end(), make_edge(fin(1), fin(7))), e.end());
  EXPECT_EQ(f.factors().size(), 11u);
  for (const auto& fac : f.factors()) EXPECT_EQ(fac.edges().size(), 6u);
  EXPECT_TRUE(f.fast_path_available());
}

TEST(Expand, RejectsNonStarter) {
  const Group g = Group::cyclic(7);
  const Starter bad({make_pair(Elem{1}, Elem{2}), make_pair(Elem{3}, Elem{4}), make_pair(Elem{5}, Elem{6})},
                    Provenance::custom());
  expect_error([&] { factorization_from_starter(g, bad); }, ErrorCode::InvalidStarter);
}

TEST(Expand, NegationSymmetry) {
  for (std::uint32_t q : testing::orders_3_mod_4(7, 31)) {
    const Field fld = make_field(q);
    const Group g = Group::of_field(fld);
    for (Elem b : usable_betas(fld)) {
      const Starter s = horton_starter(fld, b);
      const OneFactorization f = factorization_from_starter(g, s);
      const OneFactorization h = factorization_from_starter(g, negate_starter(g, s));
      for (std::uint32_t i = 0; i < q; ++i) {
        std::vector<Edge> image;
        for (const auto& e : f.factor(fld.neg(Elem{i})).edges()) {
          auto neg = [&](Vertex v) { return v.is_infinity() ? v : Vertex::finite(fld.neg(v.element())); };
          image.push_back(make_edge(neg(e.u), neg(e.v)));
        }
        std::sort(image.begin(), image.end());
        ASSERT_EQ(h.factor(Elem{i}).edges(), image) << q << " beta=" << b.value << " i=" << i;
      }
      EXPECT_EQ(factorization_c4_free(f, CheckMode::Exhaustive).pass,
                factorization_c4_free(h, CheckMode::Exhaustive).pass);
    }
  }
}

TEST(Structure, DetectsDuplicatesAndFixedPoints) {
  const OneFactorization f = horton(11, 7);
  std::vector<OneFactor> factors = f.factors();
  factors[1] = OneFactor(Elem{1}, factors[0].edges(), 12);
  const StructureReport dup = is_one_factorization(OneFactorization(f.group(), factors, {}));
  EXPECT_FALSE(dup.ok);
  bool named = false;
  for (const auto& v : dup.violations) named = named || v.find("appears in F[0] and F[1]") != std::string::npos;
  EXPECT_TRUE(named);

  factors = f.factors();
  std::vector<Edge> edges = factors[2].edges();
  edges[0] = Edge{fin(3), fin(3)};
  factors[2] = OneFactor(Elem{2}, edges, 12);
  EXPECT_FALSE(factors[2].is_perfect_matching());
  const StructureReport fixed = is_one_factorization(OneFactorization(f.group(), factors, {}));
  EXPECT_FALSE(fixed.ok);
  EXPECT_FALSE(factorization_c4_free(OneFactorization(f.group(), factors, {}), CheckMode::Exhaustive)
                   .pairs_checked == 0);

  factors = f.factors();
  factors.pop_back();
  EXPECT_FALSE(is_one_factorization(OneFactorization(f.group(), factors, {})).ok);
}

TEST(C4, Examples) {
  const OneFactorization z9 = patterned(Group::cyclic(9));
  const OneFactorization z7 = patterned(Group::cyclic(7));
  const auto& f0 = z9.factor(Elem{0});
  EXPECT_FALSE(factors_c4(f0, f0).has_value());
  EXPECT_TRUE(brute_force_c4(f0, f0).empty());

  std::optional<CycleWitness> found;
  for (const auto& other : z9.factors()) {
    if (other.gamma() == f0.gamma()) continue;
    if (auto w = factors_c4(f0, other)) {
      EXPECT_TRUE(witness_valid(*w, f0, other));
      const auto all = brute_force_c4(f0, other);
      ASSERT_FALSE(all.empty());
      EXPECT_TRUE(std::any_of(all.begin(), all.end(), [&](const CycleWitness& b) { return same_cycle(b, *w); }));
      found = w;
    }
  }
  EXPECT_TRUE(found.has_value());

  for (const auto& a : z7.factors()) {
    for (const auto& b : z7.factors()) EXPECT_FALSE(factors_c4(a, b).has_value());
  }
}

TEST(C4, WitnessShapeAndTampering) {
  const OneFactorization z9 = patterned(Group::cyclic(9));
  const auto& f = z9.factor(Elem{0});
  const auto& g = z9.factor(Elem{3});
  const auto w = factors_c4(f, g);
  ASSERT_TRUE(w.has_value());
  const auto [a, b, d, c] = w->cycle;
  EXPECT_EQ(f.partner(a), b);
  EXPECT_EQ(g.partner(b), d);
  EXPECT_EQ(f.partner(d), c);
  EXPECT_EQ(g.partner(c), a);
  EXPECT_EQ(to_string(w->edges[0].owner), "F[0]");
  EXPECT_EQ(to_string(w->edges[1].owner), "F[3]");

  CycleWitness bad = *w;
  std::swap(bad.cycle[1], bad.cycle[2]);
  EXPECT_FALSE(witness_valid(bad, f, g));
  bad = *w;
  bad.edges[1].owner = bad.edges[0].owner;
  EXPECT_FALSE(witness_valid(bad, f, g));
  EXPECT_FALSE(witness_valid(*w, f, z9.factor(Elem{1})));
}

TEST(C4, BruteForceGuard) {
  const OneFactorization big = patterned(Group::cyclic(65));
  expect_error([&] { brute_force_c4(big.factors()[0], big.factors()[1]); }, ErrorCode::TooLarge);
  const OneFactorization edge = patterned(Group::cyclic(63));
  EXPECT_NO_THROW(brute_force_c4(edge.factors()[0], edge.factors()[1]));
}

// Structure, oracle agreement and translation invariance over every factor
// pair of every small factorization, within and across families.
TEST(C4, OracleEquivalenceAndUnionStructure) {
  auto check = [](const OneFactor& a, const OneFactor& b, char fa, char fb) {
    const auto fast = factors_c4(a, b, fa, fb);
    const auto brute = brute_force_c4(a, b, fa, fb);
    ASSERT_EQ(fast.has_value(), !brute.empty());
    for (const auto& w : brute) ASSERT_TRUE(witness_valid(w, a, b, fa, fb));
    if (fast) ASSERT_TRUE(witness_valid(*fast, a, b, fa, fb));

    const UnionDecomposition u = decompose_union(a, b);
    ASSERT_LE(u.max_degree, 2u);
    std::uint32_t covered = 2 * u.shared_edges;
    for (auto len : u.cycle_lengths) {
      ASSERT_EQ(len % 2, 0u);
      ASSERT_GE(len, 4u);
      covered += len;
    }
    ASSERT_EQ(covered, a.vertex_count());
    const bool has_four = std::count(u.cycle_lengths.begin(), u.cycle_lengths.end(), 4u) > 0;
    ASSERT_EQ(has_four, fast.has_value());
    ASSERT_EQ(static_cast<std::size_t>(std::count(u.cycle_lengths.begin(), u.cycle_lengths.end(), 4u)),
              brute.size());
  };
  const auto family = small_family(31);
  for (const auto& f : family) {
    const auto& fs = f.factors();
    for (std::size_t i = 0; i < fs.size(); ++i) {
      for (std::size_t j = i + 1; j < fs.size(); ++j) {
        check(fs[i], fs[j], 'F', 'F');
        const Elem delta = f.group().sub(fs[j].gamma(), fs[i].gamma());
        ASSERT_EQ(factors_c4(fs[i], fs[j]).has_value(),
                  factors_c4(f.factor(f.group().zero()), f.factor(delta)).has_value());
      }
    }
  }
  // Across S_beta and -S_beta.
  for (std::uint32_t q : testing::orders_3_mod_4(7, 31)) {
    const Field fld = make_field(q);
    const Group g = Group::of_field(fld);
    for (Elem b : usable_betas(fld)) {
      const Starter s = horton_starter(fld, b);
      const OneFactorization f = factorization_from_starter(g, s);
      const OneFactorization h = factorization_from_starter(g, negate_starter(g, s));
      for (const auto& a : f.factors()) {
        for (const auto& c : h.factors()) check(a, c, 'F', 'G');
      }
    }
  }
}

TEST(C4Free, Examples) {
  EXPECT_TRUE(factorization_c4_free(horton(19, 2), CheckMode::Exhaustive).pass);
  EXPECT_TRUE(factorization_c4_free(horton(19, 2), CheckMode::Fast).pass);
  const PairCheckReport z9 = factorization_c4_free(patterned(Group::cyclic(9)), CheckMode::Exhaustive);
  EXPECT_FALSE(z9.pass);
  EXPECT_FALSE(z9.witnesses.empty());
  EXPECT_EQ(z9.pairs_checked, 36u);
  EXPECT_TRUE(factorization_c4_free(patterned(Group::of_field(make_field(11))), CheckMode::Exhaustive).pass);
  EXPECT_EQ(factorization_c4_free(horton(19, 2), CheckMode::Fast).pairs_checked, 18u);
}

TEST(C4Free, FastModeNeedsTrustedStarter) {
  const OneFactorization custom = untrusted_copy(horton(11, 7));
  expect_error([&] { factorization_c4_free(custom, CheckMode::Fast); }, ErrorCode::FastModeUnavailable);
  expect_error([&] { pair_totally_c4_free(custom, custom, CheckMode::Fast); }, ErrorCode::FastModeUnavailable);
  expect_error([&] { factorizations_orthogonal(custom, horton(11, 8), CheckMode::Fast); },
               ErrorCode::FastModeUnavailable);
  EXPECT_TRUE(factorization_c4_free(custom, CheckMode::Exhaustive).pass);
}

TEST(C4Free, FastAgreesWithExhaustive) {
  for (const auto& f : small_family(31)) {
    ASSERT_EQ(factorization_c4_free(f, CheckMode::Fast).pass, factorization_c4_free(f, CheckMode::Exhaustive).pass)
        << f.group().name();
  }
  for (std::uint32_t q : testing::orders_3_mod_4(7, 31)) {
    const Field fld = make_field(q);
    const Group g = Group::of_field(fld);
    for (Elem b : usable_betas(fld)) {
      const Starter s = horton_starter(fld, b);
      const OneFactorization f = factorization_from_starter(g, s);
      const OneFactorization h = factorization_from_starter(g, negate_starter(g, s));
      ASSERT_EQ(pair_totally_c4_free(f, h, CheckMode::Fast).pass, pair_totally_c4_free(f, h, CheckMode::Exhaustive).pass);
      ASSERT_EQ(pair_cross_c4_free(f, h, CheckMode::Fast).pass, pair_cross_c4_free(f, h, CheckMode::Exhaustive).pass);
      ASSERT_EQ(factorizations_orthogonal(f, h, CheckMode::Fast).pass,
                factorizations_orthogonal(f, h, CheckMode::Exhaustive).pass);
    }
  }
}

TEST(Totally, Examples) {
  const OneFactorization f11 = horton(11, 7);
  EXPECT_EQ(pair_totally_c4_free(f11, f11, CheckMode::Exhaustive).pass,
            factorization_c4_free(f11, CheckMode::Exhaustive).pass);
  const Field fld = make_field(11);
  const Group g = Group::of_field(fld);
  const OneFactorization neg = factorization_from_starter(g, negate_starter(g, horton_starter(fld, Elem{7})));
  const PairCheckReport r = pair_totally_c4_free(f11, neg, CheckMode::Exhaustive);
  EXPECT_TRUE(r.pass);
  EXPECT_EQ(r.pairs_checked, 55u + 55u + 121u);
  const OneFactorization z9 = patterned(Group::cyclic(9));
  EXPECT_FALSE(pair_totally_c4_free(z9, z9, CheckMode::Exhaustive).pass);
  expect_error([&] { pair_totally_c4_free(f11, patterned(Group::cyclic(9)), CheckMode::Exhaustive); },
               ErrorCode::InvalidInput);
}

TEST(Orthogonality, Examples) {
  const OneFactorization s7 = horton(11, 7);
  const PairCheckReport self = factorizations_orthogonal(s7, s7);
  EXPECT_FALSE(self.pass);
  ASSERT_FALSE(self.shared.empty());
  EXPECT_EQ(self.shared.front().edges.size(), 6u);
  EXPECT_TRUE(factorizations_orthogonal(s7, horton(11, 8)).pass);
  const Field fld = make_field(11);
  const Group g = Group::of_field(fld);
  const OneFactorization neg = factorization_from_starter(g, negate_starter(g, horton_starter(fld, Elem{7})));
  EXPECT_TRUE(factorizations_orthogonal(s7, neg).pass);
  EXPECT_TRUE(factorizations_orthogonal(s7, neg, CheckMode::Fast).pass);
  EXPECT_FALSE(factorizations_orthogonal(s7, s7, CheckMode::Fast).pass);
}

TEST(Vertex, Encoding) {
  EXPECT_EQ(to_string(Vertex::infinity()), "inf");
  EXPECT_EQ(to_string(fin(4)), "4");
  EXPECT_LT(Vertex::infinity(), fin(0));
  EXPECT_EQ(fin(4).element(), Elem{4});
}

}  // namespace
}  // namespace onefact
