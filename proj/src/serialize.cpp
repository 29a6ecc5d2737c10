// Copyright 2026 The onefact Authors
// SPDX-License-Identifier: Apache-2.0

#include "onefact/serialize.hpp"

#include <cmath>
#include <sstream>

#include "onefact/error.hpp"

namespace onefact {
namespace {

[[noreturn]] void bad(const std::string& what) { throw Error(ErrorCode::InvalidInput, what); }

const Json& member(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) bad(std::string("missing \"") + key + "\"");
  return j.at(key);
}

std::uint32_t as_uint(const Json& j, const char* what) {
  if (!j.is_number_integer() || j.get<std::int64_t>() < 0 ||
      j.get<std::int64_t>() > std::int64_t{kMaxFieldOrder} * 2) {
    bad(std::string(what) + " must be a non-negative integer");
  }
  return static_cast<std::uint32_t>(j.get<std::int64_t>());
}

Elem as_elem(const Json& j, const Group& group, const char* what) {
  const std::uint32_t v = as_uint(j, what);
  if (!group.contains(Elem{v})) bad(std::string(what) + " outside " + group.name());
  return Elem{v};
}

Vertex vertex_from_json(const Json& j) {
  if (j.is_string()) {
    if (j.get<std::string>() != "inf") bad("vertex must be an integer or \"inf\"");
    return Vertex::infinity();
  }
  return Vertex::finite(Elem{as_uint(j, "vertex")});
}

Json checks_json(const std::vector<Check>& checks, bool counted) {
  Json out = Json::object();
  for (const auto& c : checks) {
    if (c.counted == counted) out[c.name] = c.value;
  }
  return out;
}

double rounded_ms(double ms) { return std::round(ms * 1000.0) / 1000.0; }

}  // namespace

std::string dump(const Json& j) { return j.dump() + "\n"; }

Json to_json(const FieldSpec& spec) {
  Json j;
  j["q"] = spec.q;
  j["p"] = spec.p;
  j["k"] = spec.k;
  if (spec.k > 1) j["poly"] = spec.reduction_poly;
  return j;
}

Json to_json(const Group& group) {
  if (group.is_field()) return to_json(group.field().spec());
  Json j;
  j["n"] = group.order();
  return j;
}

Group group_from_json(const Json& j) {
  if (!j.is_object()) bad("group must be an object");
  if (j.contains("n")) return Group::cyclic(as_uint(j.at("n"), "n"));
  const std::uint32_t q = as_uint(member(j, "q"), "q");
  Field field = make_field(q);
  const FieldSpec& spec = field.spec();
  if (as_uint(member(j, "p"), "p") != spec.p || as_uint(member(j, "k"), "k") != spec.k) {
    bad("field description disagrees with q = " + std::to_string(q));
  }
  if (spec.k > 1) {
    const Json& poly = member(j, "poly");
    if (!poly.is_array() || poly.size() != spec.reduction_poly.size()) bad("poly has wrong length");
    for (std::size_t i = 0; i < poly.size(); ++i) {
      if (as_uint(poly[i], "poly coefficient") != spec.reduction_poly[i]) {
        bad("poly is not the canonical reduction polynomial for q = " + std::to_string(q));
      }
    }
  } else if (j.contains("poly")) {
    bad("prime fields carry no poly");
  }
  return Group::of_field(std::move(field));
}

Json to_json(const Provenance& p) {
  Json j;
  switch (p.kind) {
    case Provenance::Kind::Horton:
      j["kind"] = "horton";
      j["beta"] = p.beta.value;
      break;
    case Provenance::Kind::Patterned: j["kind"] = "patterned"; break;
    case Provenance::Kind::Negated:
      j["kind"] = "negated";
      j["inner"] = p.inner ? to_json(*p.inner) : Json(nullptr);
      break;
    case Provenance::Kind::Custom: j["kind"] = "custom"; break;
  }
  return j;
}

Provenance provenance_from_json(const Json& j) {
  const Json& kind = member(j, "kind");
  if (!kind.is_string()) bad("provenance kind must be a string");
  const std::string k = kind.get<std::string>();
  if (k == "horton") return Provenance::horton(Elem{as_uint(member(j, "beta"), "beta")});
  if (k == "patterned") return Provenance::patterned();
  if (k == "custom") return Provenance::custom();
  if (k == "negated") return Provenance::negated(provenance_from_json(member(j, "inner")));
  bad("unknown provenance kind \"" + k + "\"");
}

Json starter_to_json(const Group& group, const Starter& s) {
  Json j;
  j["group"] = to_json(group);
  j["provenance"] = to_json(s.provenance());
  Json pairs = Json::array();
  for (const auto& pr : s.pairs()) pairs.push_back({pr.first.value, pr.second.value});
  j["pairs"] = std::move(pairs);
  return j;
}

StarterFile starter_from_json(const Json& j) {
  Group group = group_from_json(member(j, "group"));
  Provenance prov = provenance_from_json(member(j, "provenance"));
  const Json& pairs = member(j, "pairs");
  if (!pairs.is_array()) bad("pairs must be an array");
  std::vector<StarterPair> out;
  for (const auto& pr : pairs) {
    if (!pr.is_array() || pr.size() != 2) bad("each pair must have two elements");
    out.push_back(make_pair(as_elem(pr[0], group, "pair element"), as_elem(pr[1], group, "pair element")));
  }
  return StarterFile{group, Starter(std::move(out), std::move(prov))};
}

Json to_json(Vertex v) {
  if (v.is_infinity()) return "inf";
  return v.element().value;
}

Json factorization_to_json(const OneFactorization& f) {
  Json j;
  j["group"] = to_json(f.group());
  Json prov;
  if (f.source().starter) {
    prov["kind"] = "starter";
    prov["source"] = to_json(f.source().starter->provenance());
  } else {
    prov["kind"] = "custom";
  }
  j["provenance"] = std::move(prov);
  Json factors = Json::array();
  for (const auto& factor : f.factors()) {
    Json edges = Json::array();
    for (const auto& e : factor.edges()) edges.push_back({to_json(e.u), to_json(e.v)});
    Json fj;
    fj["gamma"] = factor.gamma().value;
    fj["edges"] = std::move(edges);
    factors.push_back(std::move(fj));
  }
  j["factors"] = std::move(factors);
  return j;
}

OneFactorization factorization_from_json(const Json& j) {
  Group group = group_from_json(member(j, "group"));
  const std::uint32_t vertices = group.order() + 1;
  const Json& factors = member(j, "factors");
  if (!factors.is_array()) bad("factors must be an array");
  std::vector<OneFactor> out;
  for (const auto& fj : factors) {
    const Elem gamma{as_uint(member(fj, "gamma"), "gamma")};
    const Json& edges = member(fj, "edges");
    if (!edges.is_array()) bad("edges must be an array");
    std::vector<Edge> list;
    for (const auto& e : edges) {
      if (!e.is_array() || e.size() != 2) bad("each edge must have two endpoints");
      list.push_back(make_edge(vertex_from_json(e[0]), vertex_from_json(e[1])));
    }
    out.emplace_back(gamma, std::move(list), vertices);
  }

  FactorizationSource source;
  const Json& prov = member(j, "provenance");
  const Json& kind = member(prov, "kind");
  if (kind == "starter") {
    // Recover the pairs from F_0; the provenance is kept for display only.
    std::vector<StarterPair> pairs;
    for (const auto& factor : out) {
      if (factor.gamma() != group.zero()) continue;
      for (const auto& e : factor.edges()) {
        if (!e.u.is_infinity()) pairs.push_back(make_pair(e.u.element(), e.v.element()));
      }
    }
    source.starter = Starter(std::move(pairs), provenance_from_json(member(prov, "source")));
  } else if (kind != "custom") {
    bad("factorization provenance must be \"starter\" or \"custom\"");
  }
  return OneFactorization(std::move(group), std::move(out), std::move(source));
}

Json to_json(const CycleWitness& w) {
  Json j;
  Json cycle = Json::array();
  for (const Vertex v : w.cycle) cycle.push_back(to_json(v));
  j["cycle"] = std::move(cycle);
  Json edges = Json::array();
  for (const auto& e : w.edges) {
    Json ej;
    ej["u"] = to_json(e.u);
    ej["v"] = to_json(e.v);
    ej["owner"] = to_string(e.owner);
    edges.push_back(std::move(ej));
  }
  j["edges"] = std::move(edges);
  return j;
}

Json to_json(const SharedEdges& s) {
  Json j;
  j["first"] = to_string(s.first);
  j["second"] = to_string(s.second);
  Json edges = Json::array();
  for (const auto& e : s.edges) edges.push_back({to_json(e.u), to_json(e.v)});
  j["edges"] = std::move(edges);
  return j;
}

Json to_json(const PairCheckReport& r) {
  Json j;
  j["property"] = r.property;
  j["pass"] = r.pass;
  j["mode"] = std::string(to_string(r.mode));
  j["pairs_checked"] = r.pairs_checked;
  Json ws = Json::array();
  for (const auto& w : r.witnesses) ws.push_back(to_json(w));
  j["witnesses"] = std::move(ws);
  Json shared = Json::array();
  for (const auto& s : r.shared) shared.push_back(to_json(s));
  j["shared"] = std::move(shared);
  return j;
}

Json to_json(const StarterReport& r) {
  Json j;
  j["is_starter"] = r.is_starter;
  j["is_strong"] = r.is_strong;
  Json sums = Json::array();
  for (const Elem e : r.sum_set) sums.push_back(e.value);
  j["sum_set"] = std::move(sums);
  j["violations"] = r.violations;
  return j;
}

Json to_json(const OrthogonalityReport& r) {
  Json j;
  j["orthogonal"] = r.orthogonal;
  Json d = Json::array();
  for (const Elem e : r.displacements) d.push_back(e.value);
  j["displacements"] = std::move(d);
  j["violations"] = r.violations;
  return j;
}

Json to_json(const StructureReport& r) {
  Json j;
  j["is_one_factorization"] = r.ok;
  j["violations"] = r.violations;
  return j;
}

Json to_json(const ConditionProfile& p) {
  Json j;
  j["beta"] = p.beta.value;
  j["beta_plus_one"] = std::string(to_string(p.beta_plus_one));
  j["beta_minus_one"] = std::string(to_string(p.beta_minus_one));
  j["beta_sq_plus_one"] = std::string(to_string(p.beta_sq_plus_one));
  j["sq_plus_one_over_minus_one"] = std::string(to_string(p.sq_plus_one_over_minus_one));
  j["half_sq_plus_one"] = std::string(to_string(p.half_sq_plus_one));
  j["half_minus_one"] = std::string(to_string(p.half_minus_one));
  j["cube_is_minus_one"] = p.cube_is_minus_one;
  j["excluded"] = p.excluded;
  return j;
}

Json to_json(const WitnessReport& r) {
  Json j;
  j["lemma"] = r.lemma;
  j["exists"] = r.exists;
  Json claims = Json::array();
  for (const auto& c : r.claims) {
    Json cj;
    cj["name"] = c.name;
    cj["condition"] = c.condition;
    cj["exists"] = c.exists;
    Json ws = Json::array();
    for (const Elem e : c.witnesses) ws.push_back(e.value);
    cj["witnesses"] = std::move(ws);
    claims.push_back(std::move(cj));
  }
  j["claims"] = std::move(claims);
  return j;
}

Json to_json(const CampaignReport& r, bool timing) {
  Json j;
  j["campaign"] = r.campaign;
  j["group"] = r.group;
  if (r.field) j["field"] = to_json(*r.field);
  if (!r.variant.empty()) j["variant"] = r.variant;
  j["pass"] = r.pass;
  j["checks"] = checks_json(r.checks, true);
  j["observations"] = checks_json(r.checks, false);
  j["notes"] = r.notes;
  Json cases = Json::array();
  for (const auto& c : r.cases) {
    Json cj;
    for (const auto& [k, v] : c.key) cj[k] = v;
    cj["pass"] = c.pass;
    cj["checks"] = checks_json(c.checks, true);
    cj["observations"] = checks_json(c.checks, false);
    if (c.profile) cj["profile"] = to_json(*c.profile);
    cj["failing_pairs"] = c.failing_pairs;
    Json ws = Json::array();
    for (const auto& w : c.witnesses) ws.push_back(to_json(w));
    cj["witnesses"] = std::move(ws);
    Json shared = Json::array();
    for (const auto& s : c.shared) shared.push_back(to_json(s));
    cj["shared"] = std::move(shared);
    cj["notes"] = c.notes;
    if (timing) cj["millis"] = rounded_ms(c.millis);
    cases.push_back(std::move(cj));
  }
  j["cases"] = std::move(cases);
  if (timing) j["millis"] = rounded_ms(r.millis);
  return j;
}

Json to_json(const CampaignRun& run, bool timing) {
  Json j;
  j["schema_version"] = kReportSchemaVersion;
  j["campaign"] = run.campaign;
  j["pass"] = run.pass;
  Json reports = Json::array();
  std::size_t passed = 0, cases = 0, failed_cases = 0;
  for (const auto& r : run.reports) {
    reports.push_back(to_json(r, timing));
    passed += r.pass ? 1 : 0;
    cases += r.cases.size();
    for (const auto& c : r.cases) failed_cases += c.pass ? 0 : 1;
  }
  j["reports"] = std::move(reports);
  j["skipped"] = run.skipped;
  Json summary;
  summary["reports"] = run.reports.size();
  summary["passed"] = passed;
  summary["failed"] = run.reports.size() - passed;
  summary["cases"] = cases;
  summary["failed_cases"] = failed_cases;
  summary["skipped"] = run.skipped.size();
  j["summary"] = std::move(summary);
  return j;
}

namespace {

std::string describe_witness(const CycleWitness& w) {
  std::string s = "4-cycle";
  for (const auto& e : w.edges) {
    s += " " + to_string(e.u) + "-" + to_string(e.v) + "(" + to_string(e.owner) + ")";
  }
  return s;
}

std::string key_text(const CaseResult& c) {
  std::string s;
  for (const auto& [k, v] : c.key) s += (s.empty() ? "" : " ") + k + "=" + std::to_string(v);
  return s;
}

}  // namespace

std::string to_text(const CampaignRun& run, bool timing) {
  std::ostringstream out;
  std::size_t passed = 0;
  for (const auto& r : run.reports) {
    passed += r.pass ? 1 : 0;
    out << r.group << " [" << r.campaign << (r.variant.empty() ? "" : "/" + r.variant)
        << "]: " << (r.pass ? "PASS" : "FAIL");
    if (timing) out << " (" << rounded_ms(r.millis) << " ms)";
    out << "\n";
    for (const auto& n : r.notes) out << "  note: " << n << "\n";
    for (const auto& c : r.checks) {
      out << "  " << c.name << ": " << (c.value ? "yes" : "no") << (c.counted ? "" : " (info)")
          << "\n";
    }
    for (const auto& c : r.cases) {
      out << "  " << key_text(c) << ": " << (c.pass ? "pass" : "FAIL");
      for (const auto& chk : c.checks) {
        if (chk.counted && !chk.value) out << " " << chk.name << "=no";
      }
      if (timing) out << " (" << rounded_ms(c.millis) << " ms)";
      out << "\n";
      if (!c.pass) {
        for (const auto& w : c.witnesses) out << "    witness: " << describe_witness(w) << "\n";
        for (const auto& s : c.shared) {
          out << "    shared: " << to_string(s.first) << " & " << to_string(s.second) << " share "
              << s.edges.size() << " edges\n";
        }
        for (const auto& n : c.notes) out << "    note: " << n << "\n";
      }
    }
  }
  if (!run.skipped.empty()) {
    out << "skipped (not prime powers):";
    for (const auto q : run.skipped) out << " " << q;
    out << "\n";
  }
  out << "campaign " << run.campaign << ": " << (run.pass ? "PASS" : "FAIL") << " (" << passed
      << "/" << run.reports.size() << " reports passed)\n";
  return out.str();
}

}  // namespace onefact
