// Copyright 2026 The onefact Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <string>

#include "json.hpp"
#include "onefact/campaigns.hpp"
#include "onefact/factorizations.hpp"
#include "onefact/starters.hpp"

namespace onefact {

using Json = nlohmann::ordered_json;

inline constexpr int kReportSchemaVersion = 1;

/// Compact single-line dump plus newline. Key order is fixed by the
/// writers below, so equal values emit identical bytes.
std::string dump(const Json& j);

Json to_json(const FieldSpec& spec);
Json to_json(const Group& group);
Json to_json(const Provenance& provenance);
Json to_json(Vertex v);
Json to_json(const CycleWitness& w);
Json to_json(const SharedEdges& s);
Json to_json(const PairCheckReport& r);
Json to_json(const StarterReport& r);
Json to_json(const OrthogonalityReport& r);
Json to_json(const StructureReport& r);
Json to_json(const ConditionProfile& p);
Json to_json(const WitnessReport& r);
Json to_json(const CampaignReport& r, bool timing);
Json to_json(const CampaignRun& run, bool timing);

/// Parsers throw Error(InvalidInput) on malformed documents. A field
/// description must name the canonical reduction polynomial.
Group group_from_json(const Json& j);
Provenance provenance_from_json(const Json& j);

struct StarterFile {
  Group group;
  Starter starter;
};

Json starter_to_json(const Group& group, const Starter& s);
StarterFile starter_from_json(const Json& j);

Json factorization_to_json(const OneFactorization& f);
/// The result is never trusted for fast-path checks.
OneFactorization factorization_from_json(const Json& j);

std::string to_text(const CampaignRun& run, bool timing);

}  // namespace onefact
