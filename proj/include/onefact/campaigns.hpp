// Copyright 2026 The onefact Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "onefact/algebra.hpp"
#include "onefact/factorizations.hpp"
#include "onefact/theorems.hpp"

namespace onefact {

/// Named boolean outcome. Informational checks are recorded but do not
/// affect the pass flag.
struct Check {
  std::string name;
  bool value = false;
  bool counted = true;
};

/// One beta, one (beta1, beta2) pair, or one n.
struct CaseResult {
  std::vector<std::pair<std::string, std::uint32_t>> key;
  std::optional<ConditionProfile> profile;
  std::vector<Check> checks;
  std::uint64_t failing_pairs = 0;
  std::vector<CycleWitness> witnesses;  // first few only
  std::vector<SharedEdges> shared;
  std::vector<std::string> notes;
  bool pass = true;
  double millis = 0;
};

struct CampaignReport {
  std::string campaign;
  std::string group;
  std::uint32_t order = 0;
  std::optional<FieldSpec> field;
  std::string variant;
  std::vector<Check> checks;
  std::vector<CaseResult> cases;
  std::vector<std::string> notes;
  bool pass = true;
  double millis = 0;
};

inline constexpr std::size_t kMaxWitnessesPerCase = 4;

struct CampaignOptions {
  unsigned threads = 1;
  // Fast paths are re-run exhaustively and compared up to this order.
  std::uint32_t cross_check_limit = 31;
};

/// Every S_beta strong; all S_beta pairwise orthogonal; S, -S, P pairwise
/// orthogonal for each beta.
CampaignReport verify_horton(const Field& field, const CampaignOptions& opts = {});

/// Patterned starter over Z_n for odd n in [from, to]: C4-free exactly
/// when 3 does not divide n.
CampaignReport verify_dinitz(std::uint32_t from, std::uint32_t to, const CampaignOptions& opts = {});

/// For every beta in NQR \ {-1}: lemma6_condition implies a C4-free family.
CampaignReport verify_lemma6(const Field& field, CheckMode mode, const CampaignOptions& opts = {});

/// For every beta in NQR \ {-1}: lemma7_condition implies C4-free cross
/// unions between the families of S_beta and -S_beta.
CampaignReport verify_lemma7(const Field& field, CheckMode mode, const CampaignOptions& opts = {});

/// M nonempty, and for each beta in M the families of S_beta and -S_beta
/// are orthogonal and totally C4-free.
CampaignReport verify_theorem_main(const Field& field, const CampaignOptions& opts = {});

/// Every unordered pair of distinct betas in the variant's M gives an
/// orthogonal, totally C4-free pair.
CampaignReport verify_corollary_mod8(const Field& field, MVariant variant,
                                     const CampaignOptions& opts = {});

/// Existence lemmas and the four cyclotomic closed forms. Claims count
/// toward the verdict only for q >= 11.
CampaignReport verify_witnesses(const Field& field, const CampaignOptions& opts = {});

enum class CampaignKind { Horton, Dinitz, Lemma6, Lemma7, Main, Corollary, Witnesses };

std::string_view to_string(CampaignKind kind);
std::optional<CampaignKind> parse_campaign_kind(std::string_view name);

struct CampaignRequest {
  CampaignKind kind = CampaignKind::Main;
  std::uint32_t from = 0;
  std::uint32_t to = 0;
  std::vector<MVariant> variants{MVariant::Corollary10Paper, MVariant::Corollary10LemmaConsistent};
  CheckMode mode = CheckMode::Exhaustive;
  CampaignOptions options;
};

struct CampaignRun {
  std::string campaign;
  std::vector<CampaignReport> reports;
  std::vector<std::uint32_t> skipped;  // in range and right residue, not a prime power
  bool pass = true;
};

/// Orders in [from, to] matching the campaign's congruence. A single order
/// (from == to) that is invalid raises the underlying error; in a range,
/// non-prime-powers are skipped.
CampaignRun run_campaign(const CampaignRequest& request);

}  // namespace onefact
