// Copyright 2026 The onefact Authors
// SPDX-License-Identifier: Apache-2.0

#include "onefact/campaigns.hpp"

#include <algorithm>
#include <chrono>
#include <memory>

#include "onefact/error.hpp"
#include "onefact/parallel.hpp"
#include "onefact/starters.hpp"

namespace onefact {
namespace {

using Clock = std::chrono::steady_clock;

double millis_since(Clock::time_point start) {
  return std::chrono::duration<double, std::milli>(Clock::now() - start).count();
}

void add_check(CaseResult& r, std::string name, bool value, bool counted = true) {
  r.checks.push_back({std::move(name), value, counted});
  if (counted && !value) r.pass = false;
}

void add_check(CampaignReport& r, std::string name, bool value, bool counted = true) {
  r.checks.push_back({std::move(name), value, counted});
  if (counted && !value) r.pass = false;
}

void absorb(CaseResult& r, const PairCheckReport& check) {
  r.failing_pairs += check.witnesses.size() + check.shared.size();
  for (const auto& w : check.witnesses) {
    if (r.witnesses.size() < kMaxWitnessesPerCase) r.witnesses.push_back(w);
  }
  for (const auto& s : check.shared) {
    if (r.shared.size() < kMaxWitnessesPerCase) r.shared.push_back(s);
  }
}

const OneFactor& owner_factor(const FactorId& id, const OneFactorization& f,
                              const OneFactorization& g) {
  return (id.family == 'G' ? g : f).factor(id.gamma);
}

/// Every witness re-checks against the factors it names.
bool witnesses_revalidate(const PairCheckReport& check, const OneFactorization& f,
                          const OneFactorization& g) {
  return std::all_of(check.witnesses.begin(), check.witnesses.end(), [&](const CycleWitness& w) {
    const FactorId a = w.edges[0].owner, b = w.edges[1].owner;
    return witness_valid(w, owner_factor(a, f, g), owner_factor(b, f, g), a.family, b.family);
  });
}

bool has_family_pair(const PairCheckReport& check, char x, char y) {
  return std::any_of(check.witnesses.begin(), check.witnesses.end(), [&](const CycleWitness& w) {
    const char a = w.edges[0].owner.family, b = w.edges[1].owner.family;
    return (a == x && b == y) || (a == y && b == x);
  });
}

CampaignReport field_report(std::string campaign, const Field& field) {
  CampaignReport r;
  r.campaign = std::move(campaign);
  r.group = "GF(" + std::to_string(field.order()) + ")";
  r.order = field.order();
  r.field = field.spec();
  return r;
}

template <class Fn>
void run_cases(CampaignReport& report, std::size_t count, const CampaignOptions& opts, Fn&& fn) {
  report.cases = parallel_map(count, opts.threads, [&](std::size_t i) {
    const auto start = Clock::now();
    CaseResult r = fn(i);
    r.millis = millis_since(start);
    return r;
  });
  for (const auto& c : report.cases) report.pass = report.pass && c.pass;
}

std::vector<Elem> horton_betas(const Field& field) {
  std::vector<Elem> out = field.nqr_set();
  const Elem minus_one = field.neg(field.one());
  std::erase(out, minus_one);
  return out;
}

const char* kNegationNote =
    "second family G is generated by the negated starter -S_beta; a Horton starter with "
    "parameter -beta is ill-formed because -beta is a residue";

}  // namespace

CampaignReport verify_horton(const Field& field, const CampaignOptions& opts) {
  const auto start = Clock::now();
  CampaignReport report = field_report("horton", field);
  if (field.order() % 4 != 3 || field.order() == 3) {
    throw Error(ErrorCode::BadField, "horton campaign needs q = 3 (mod 4), q > 3");
  }
  const Group group = Group::of_field(std::make_shared<const Field>(field));
  const std::vector<Elem> betas = horton_betas(field);
  std::vector<Starter> starters;
  for (const Elem b : betas) starters.push_back(horton_starter(field, b));
  const Starter patterned = patterned_starter(group);

  run_cases(report, betas.size(), opts, [&](std::size_t i) {
    CaseResult r;
    const Elem beta = betas[i];
    r.key = {{"beta", beta.value}};
    const Starter& s = starters[i];
    const StarterReport sr = validate_starter(group, s);
    add_check(r, "strong_starter", sr.is_strong);
    for (const auto& v : sr.violations) r.notes.push_back(v);

    // Sums are x(1+beta) over QR: a coset of QR.
    std::vector<Elem> coset;
    const Elem one_plus = field.add(field.one(), beta);
    for (const Elem x : field.qr_set()) coset.push_back(field.mul(x, one_plus));
    std::sort(coset.begin(), coset.end());
    add_check(r, "sums_form_coset", coset == sr.sum_set);

    const Starter negated = negate_starter(group, s);
    add_check(r, "orthogonal_to_negation", starters_orthogonal(group, s, negated).orthogonal);
    add_check(r, "orthogonal_to_patterned", starters_orthogonal(group, s, patterned).orthogonal);
    add_check(r, "negation_orthogonal_to_patterned",
              starters_orthogonal(group, negated, patterned).orthogonal);

    bool all_orthogonal = true;
    for (std::size_t j = 0; j < betas.size(); ++j) {
      if (j == i) continue;
      if (!starters_orthogonal(group, s, starters[j]).orthogonal) {
        all_orthogonal = false;
        r.notes.push_back("not orthogonal to S_" + std::to_string(betas[j].value));
      }
    }
    add_check(r, "orthogonal_to_other_betas", all_orthogonal);
    return r;
  });
  report.millis = millis_since(start);
  return report;
}

CampaignReport verify_dinitz(std::uint32_t from, std::uint32_t to, const CampaignOptions& opts) {
  const auto start = Clock::now();
  CampaignReport report;
  report.campaign = "dinitz";
  report.group = "Z_n";
  std::vector<std::uint32_t> orders;
  for (std::uint32_t n = std::max<std::uint32_t>(from, 5); n <= to; ++n) {
    if (n % 2 == 1) orders.push_back(n);
  }
  run_cases(report, orders.size(), opts, [&](std::size_t i) {
    CaseResult r;
    const std::uint32_t n = orders[i];
    r.key = {{"n", n}};
    const Group group = Group::cyclic(n);
    const OneFactorization f = factorization_from_starter(group, patterned_starter(group));
    const PairCheckReport check = factorization_c4_free(f, CheckMode::Fast);
    absorb(r, check);
    add_check(r, "c4_free", check.pass, false);
    add_check(r, "expected_c4_free", n % 3 != 0, false);
    add_check(r, "matches_prediction", check.pass == (n % 3 != 0));
    add_check(r, "witnesses_revalidate", witnesses_revalidate(check, f, f));
    if (n <= opts.cross_check_limit) {
      const PairCheckReport full = factorization_c4_free(f, CheckMode::Exhaustive);
      add_check(r, "fast_matches_exhaustive", full.pass == check.pass);
    }
    return r;
  });
  report.millis = millis_since(start);
  return report;
}

CampaignReport verify_lemma6(const Field& field, CheckMode mode, const CampaignOptions& opts) {
  const auto start = Clock::now();
  CampaignReport report = field_report("lemma6", field);
  const Group group = Group::of_field(std::make_shared<const Field>(field));
  const std::vector<Elem> betas = horton_betas(field);
  run_cases(report, betas.size(), opts, [&](std::size_t i) {
    CaseResult r;
    const Elem beta = betas[i];
    r.key = {{"beta", beta.value}};
    r.profile = condition_profile(field, beta);
    const bool condition = lemma6_condition(field, beta);
    const OneFactorization f = factorization_from_starter(group, horton_starter(field, beta));
    const PairCheckReport check = factorization_c4_free(f, mode);
    absorb(r, check);
    add_check(r, "condition", condition, false);
    add_check(r, "c4_free", check.pass, false);
    add_check(r, "condition_implies_c4_free", !condition || check.pass);
    return r;
  });
  report.millis = millis_since(start);
  return report;
}

CampaignReport verify_lemma7(const Field& field, CheckMode mode, const CampaignOptions& opts) {
  const auto start = Clock::now();
  CampaignReport report = field_report("lemma7", field);
  report.notes.push_back(kNegationNote);
  const Group group = Group::of_field(std::make_shared<const Field>(field));
  const std::vector<Elem> betas = horton_betas(field);
  run_cases(report, betas.size(), opts, [&](std::size_t i) {
    CaseResult r;
    const Elem beta = betas[i];
    r.key = {{"beta", beta.value}};
    r.profile = condition_profile(field, beta);
    const bool condition = lemma7_condition(field, beta);
    const Starter s = horton_starter(field, beta);
    const OneFactorization f = factorization_from_starter(group, s);
    const OneFactorization g = factorization_from_starter(group, negate_starter(group, s));
    const PairCheckReport check = pair_cross_c4_free(f, g, mode);
    absorb(r, check);
    add_check(r, "condition", condition, false);
    add_check(r, "cross_c4_free", check.pass, false);
    add_check(r, "condition_implies_cross_c4_free", !condition || check.pass);
    return r;
  });
  report.millis = millis_since(start);
  return report;
}

CampaignReport verify_theorem_main(const Field& field, const CampaignOptions& opts) {
  const auto start = Clock::now();
  CampaignReport report = field_report("main", field);
  report.notes.push_back(kNegationNote);
  const MSets m = m_sets(field, MVariant::Theorem9);
  const std::vector<Elem> betas = m.combined();
  add_check(report, "m_nonempty", !betas.empty());
  report.notes.push_back("|M1| = " + std::to_string(m.m1.size()) + ", |M2| = " +
                         std::to_string(m.m2.size()) + ", |M| = " + std::to_string(betas.size()));
  const Group group = Group::of_field(std::make_shared<const Field>(field));
  const bool cross_check = field.order() <= opts.cross_check_limit;

  run_cases(report, betas.size(), opts, [&](std::size_t i) {
    CaseResult r;
    const Elem beta = betas[i];
    r.key = {{"beta", beta.value}};
    r.profile = condition_profile(field, beta);
    const Starter s = horton_starter(field, beta);
    const OneFactorization f = factorization_from_starter(group, s);
    const OneFactorization g = factorization_from_starter(group, negate_starter(group, s));

    const PairCheckReport orth = factorizations_orthogonal(f, g, CheckMode::Fast);
    const PairCheckReport total = pair_totally_c4_free(f, g, CheckMode::Fast);
    absorb(r, orth);
    absorb(r, total);
    add_check(r, "orthogonal", orth.pass);
    add_check(r, "totally_c4_free", total.pass);
    add_check(r, "within_f_c4_free", !has_family_pair(total, 'F', 'F'), false);
    add_check(r, "within_g_c4_free", !has_family_pair(total, 'G', 'G'), false);
    add_check(r, "cross_c4_free", !has_family_pair(total, 'F', 'G'), false);
    add_check(r, "lemma6_condition", lemma6_condition(field, beta), false);
    add_check(r, "lemma7_condition", lemma7_condition(field, beta), false);
    add_check(r, "witnesses_revalidate", witnesses_revalidate(total, f, g));
    if (cross_check) {
      const bool orth_full = factorizations_orthogonal(f, g, CheckMode::Exhaustive).pass;
      const bool total_full = pair_totally_c4_free(f, g, CheckMode::Exhaustive).pass;
      add_check(r, "fast_matches_exhaustive", orth_full == orth.pass && total_full == total.pass);
    }
    return r;
  });
  std::size_t good = 0;
  for (const auto& c : report.cases) good += c.pass ? 1 : 0;
  add_check(report, "some_beta_in_m_works", good > 0, false);
  report.notes.push_back(std::to_string(good) + " of " + std::to_string(betas.size()) +
                         " betas in M give a totally C4-free orthogonal pair");
  report.millis = millis_since(start);
  return report;
}

CampaignReport verify_corollary_mod8(const Field& field, MVariant variant,
                                     const CampaignOptions& opts) {
  const auto start = Clock::now();
  CampaignReport report = field_report("corollary", field);
  report.variant = std::string(to_string(variant));
  if (variant == MVariant::Theorem9) {
    throw Error(ErrorCode::InvalidInput, "corollary campaign takes the paper or lemma variant");
  }
  const MSets m = m_sets(field, variant);
  const std::vector<Elem> betas = m.combined();
  report.notes.push_back("|M1| = " + std::to_string(m.m1.size()) + ", |M2| = " +
                         std::to_string(m.m2.size()) + ", |M| = " + std::to_string(betas.size()));
  add_check(report, "m_has_two_elements", betas.size() >= 2, false);
  const Group group = Group::of_field(std::make_shared<const Field>(field));

  std::vector<OneFactorization> families;
  families.reserve(betas.size());
  for (const Elem b : betas) families.push_back(factorization_from_starter(group, horton_starter(field, b)));
  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  for (std::size_t i = 0; i < betas.size(); ++i) {
    for (std::size_t j = i + 1; j < betas.size(); ++j) pairs.emplace_back(i, j);
  }
  run_cases(report, pairs.size(), opts, [&](std::size_t idx) {
    CaseResult r;
    const auto [i, j] = pairs[idx];
    r.key = {{"beta1", betas[i].value}, {"beta2", betas[j].value}};
    const OneFactorization& f = families[i];
    const OneFactorization& g = families[j];
    const PairCheckReport orth = factorizations_orthogonal(f, g, CheckMode::Fast);
    const PairCheckReport total = pair_totally_c4_free(f, g, CheckMode::Fast);
    absorb(r, orth);
    absorb(r, total);
    add_check(r, "orthogonal", orth.pass);
    add_check(r, "totally_c4_free", total.pass);
    add_check(r, "within_f_c4_free", !has_family_pair(total, 'F', 'F'), false);
    add_check(r, "within_g_c4_free", !has_family_pair(total, 'G', 'G'), false);
    add_check(r, "cross_c4_free", !has_family_pair(total, 'F', 'G'), false);
    const bool valid = witnesses_revalidate(total, f, g);
    add_check(r, "witnesses_revalidate", valid);
    if (!valid) r.notes.push_back("a reported witness failed re-validation");
    return r;
  });
  report.millis = millis_since(start);
  return report;
}

CampaignReport verify_witnesses(const Field& field, const CampaignOptions&) {
  const auto start = Clock::now();
  CampaignReport report = field_report("witnesses", field);
  const bool counted = field.order() >= 11;
  if (!counted) report.notes.push_back("q < 11: existence claims recorded but not counted");
  for (const WitnessReport& w : {witness_lemma_1beta(field), witness_lemma_1alpha(field),
                                 witness_nqr(field), witness_qr(field)}) {
    for (const LemmaClaim& c : w.claims) {
      add_check(report, w.lemma + "." + c.name, c.exists, counted);
      std::string listed;
      for (std::size_t i = 0; i < c.witnesses.size() && i < 8; ++i) {
        listed += (i ? "," : "") + std::to_string(c.witnesses[i].value);
      }
      report.notes.push_back(w.lemma + "." + c.name + " [" + c.condition + "]: " +
                             std::to_string(c.witnesses.size()) + " witnesses" +
                             (listed.empty() ? "" : " (" + listed + (c.witnesses.size() > 8 ? ",..." : "") + ")"));
    }
  }
  const std::uint64_t f = (field.order() - 1) / 2;
  add_check(report, "cyclotomic_00", cyclotomic_number(field, 0, 0) == (f - 1) / 2);
  add_check(report, "cyclotomic_01", cyclotomic_number(field, 0, 1) == (f + 1) / 2);
  add_check(report, "cyclotomic_10", cyclotomic_number(field, 1, 0) == (f - 1) / 2);
  add_check(report, "cyclotomic_11", cyclotomic_number(field, 1, 1) == (f - 1) / 2);
  report.millis = millis_since(start);
  return report;
}

std::string_view to_string(CampaignKind kind) {
  switch (kind) {
    case CampaignKind::Horton: return "horton";
    case CampaignKind::Dinitz: return "dinitz";
    case CampaignKind::Lemma6: return "lemma6";
    case CampaignKind::Lemma7: return "lemma7";
    case CampaignKind::Main: return "main";
    case CampaignKind::Corollary: return "corollary";
    case CampaignKind::Witnesses: return "witnesses";
  }
  return "?";
}

std::optional<CampaignKind> parse_campaign_kind(std::string_view name) {
  for (auto k : {CampaignKind::Horton, CampaignKind::Dinitz, CampaignKind::Lemma6,
                 CampaignKind::Lemma7, CampaignKind::Main, CampaignKind::Corollary,
                 CampaignKind::Witnesses}) {
    if (to_string(k) == name) return k;
  }
  return std::nullopt;
}

CampaignRun run_campaign(const CampaignRequest& request) {
  CampaignRun run;
  run.campaign = std::string(to_string(request.kind));
  if (request.from > request.to) throw Error(ErrorCode::InvalidInput, "empty range");

  if (request.kind == CampaignKind::Dinitz) {
    run.reports.push_back(verify_dinitz(request.from, request.to, request.options));
    run.pass = run.reports.front().pass;
    return run;
  }

  const bool single = request.from == request.to;
  const std::uint32_t modulus = request.kind == CampaignKind::Corollary ? 8 : 4;
  std::uint32_t min_q = 7;
  if (request.kind == CampaignKind::Main || request.kind == CampaignKind::Corollary) min_q = 11;

  std::vector<std::shared_ptr<const Field>> fields;
  for (std::uint64_t q = request.from; q <= request.to; ++q) {
    if (!single && (q % modulus != 3 || q < min_q)) continue;
    if (!single && prime_power(q).first == 0) {
      run.skipped.push_back(static_cast<std::uint32_t>(q));
      continue;
    }
    fields.push_back(std::make_shared<const Field>(make_field(q)));
  }

  struct Job {
    std::size_t field;
    MVariant variant;
  };
  std::vector<Job> jobs;
  for (std::size_t i = 0; i < fields.size(); ++i) {
    if (request.kind == CampaignKind::Corollary) {
      for (const MVariant v : request.variants) jobs.push_back({i, v});
    } else {
      jobs.push_back({i, MVariant::Theorem9});
    }
  }

  // A single job parallelizes internally; ranges parallelize across jobs.
  CampaignOptions inner = request.options;
  unsigned outer = 1;
  if (jobs.size() > 1) {
    outer = request.options.threads;
    inner.threads = 1;
  }
  run.reports = parallel_map(jobs.size(), outer, [&](std::size_t i) {
    const Field& field = *fields[jobs[i].field];
    switch (request.kind) {
      case CampaignKind::Horton: return verify_horton(field, inner);
      case CampaignKind::Lemma6: return verify_lemma6(field, request.mode, inner);
      case CampaignKind::Lemma7: return verify_lemma7(field, request.mode, inner);
      case CampaignKind::Main: return verify_theorem_main(field, inner);
      case CampaignKind::Corollary: return verify_corollary_mod8(field, jobs[i].variant, inner);
      case CampaignKind::Witnesses: return verify_witnesses(field, inner);
      case CampaignKind::Dinitz: break;
    }
    throw Error(ErrorCode::InvalidInput, "unreachable campaign kind");
  });
  for (const auto& r : run.reports) run.pass = run.pass && r.pass;
  return run;
}

}  // namespace onefact
