// Copyright 2026 The onefact Authors
// SPDX-License-Identifier: Apache-2.0

#include "onefact/cli.hpp"

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "onefact/campaigns.hpp"
#include "onefact/error.hpp"
#include "onefact/parallel.hpp"
#include "onefact/serialize.hpp"

namespace onefact {
namespace {

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Options {
  // shared
  std::string format = "text";
  std::string out_path;
  // construction
  std::optional<std::uint32_t> q;
  std::optional<std::uint32_t> zn;
  std::string kind = "horton";
  std::optional<std::uint32_t> beta;
  std::string in_path;
  bool validate = false;
  // verify
  std::string in2_path;
  std::optional<std::uint32_t> beta2;
  bool with_negation = false;
  bool c4free = false;
  bool totally = false;
  bool orthogonal = false;
  bool cross = false;
  bool strong = false;
  bool exhaustive = false;
  // campaign
  std::string campaign;
  std::optional<std::uint32_t> from;
  std::optional<std::uint32_t> to;
  std::string variant = "both";
  std::string mode = "exhaustive";
  unsigned threads = 0;
  bool timing = false;
};

bool json_format(const Options& o) {
  if (o.format != "text" && o.format != "json") throw UsageError("--format must be text or json");
  return o.format == "json";
}

Json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw UsageError("cannot open " + path);
  try {
    return Json::parse(in);
  } catch (const Json::parse_error& e) {
    throw Error(ErrorCode::InvalidInput, path + ": " + e.what());
  }
}

void emit(const Options& o, const std::string& text, std::ostream& out) {
  if (o.out_path.empty()) {
    out << text;
    return;
  }
  std::ofstream file(o.out_path, std::ios::binary);
  if (!file) throw UsageError("cannot write " + o.out_path);
  file << text;
}

Group group_from_flags(const Options& o) {
  if (o.q && o.zn) throw UsageError("give --q or --zn, not both");
  if (o.q) return Group::of_field(make_field(*o.q));
  if (o.zn) return Group::cyclic(*o.zn);
  throw UsageError("need --q or --zn");
}

Starter starter_from_flags(const Group& group, const Options& o) {
  if (o.kind == "patterned") return patterned_starter(group);
  if (o.kind != "horton" && o.kind != "negated") {
    throw UsageError("--kind must be horton, negated, or patterned");
  }
  if (!group.is_field()) throw UsageError("--kind " + o.kind + " needs --q");
  if (!o.beta) throw UsageError("--kind " + o.kind + " needs --beta");
  Starter s = horton_starter(group.field(), Elem{*o.beta});
  return o.kind == "negated" ? negate_starter(group, s) : s;
}

/// Either a starter we expand ourselves (trusted) or a factorization file.
struct Input {
  std::optional<StarterFile> starter;
  std::optional<OneFactorization> factorization;
};

Input load_input(const std::string& path) {
  const Json j = read_json_file(path);
  Input in;
  if (j.is_object() && j.contains("pairs")) {
    in.starter = starter_from_json(j);
  } else if (j.is_object() && j.contains("factors")) {
    in.factorization = factorization_from_json(j);
  } else {
    throw Error(ErrorCode::InvalidInput, path + " is neither a starter nor a factorization file");
  }
  return in;
}

Input input_from_flags(const Options& o) {
  if (!o.in_path.empty()) return load_input(o.in_path);
  Group group = group_from_flags(o);
  Starter s = starter_from_flags(group, o);
  return Input{StarterFile{group, s}, std::nullopt};
}

OneFactorization expand(const Input& in) {
  if (in.factorization) {
    const StructureReport report = is_one_factorization(*in.factorization);
    if (!report.ok) {
      throw Error(ErrorCode::InvalidInput, "not a one-factorization: " + report.violations.front());
    }
    return *in.factorization;
  }
  OneFactorization f = factorization_from_starter(in.starter->group, in.starter->starter);
  const StructureReport report = is_one_factorization(f);
  if (!report.ok) throw Error(ErrorCode::InvalidStarter, report.violations.front());
  return f;
}

int cmd_field(const Options& o, std::ostream& out) {
  if (!o.q) throw UsageError("field needs --q");
  const Field field = make_field(*o.q);
  const Residue minus_one = field.residue_class(field.neg(field.one()));
  const Residue two = field.residue_class(field.from_int(2));
  if (json_format(o)) {
    Json j;
    j["field"] = to_json(field.spec());
    j["qr_count"] = field.qr_set().size();
    j["nqr_count"] = field.nqr_set().size();
    j["minus_one"] = std::string(to_string(minus_one));
    j["two"] = std::string(to_string(two));
    out << dump(j);
    return kExitPass;
  }
  const FieldSpec& s = field.spec();
  out << "GF(" << s.q << "): p=" << s.p << " k=" << s.k;
  if (s.k > 1) {
    out << " poly=[";
    for (std::size_t i = 0; i < s.reduction_poly.size(); ++i) out << (i ? "," : "") << s.reduction_poly[i];
    out << "]";
  }
  out << "\n|QR|=" << field.qr_set().size() << " |NQR|=" << field.nqr_set().size() << "\n";
  out << "-1: " << to_string(minus_one) << "\n2: " << to_string(two) << "\n";
  return kExitPass;
}

int cmd_starter(const Options& o, std::ostream& out) {
  StarterFile file = [&] {
    if (!o.in_path.empty()) {
      Input in = load_input(o.in_path);
      if (!in.starter) throw UsageError(o.in_path + " is not a starter file");
      return *in.starter;
    }
    Group group = group_from_flags(o);
    Starter s = starter_from_flags(group, o);
    return StarterFile{group, s};
  }();
  if (!o.validate) {
    emit(o, dump(starter_to_json(file.group, file.starter)), out);
    return kExitPass;
  }
  if (!o.out_path.empty()) emit(o, dump(starter_to_json(file.group, file.starter)), out);
  const StarterReport report = validate_starter(file.group, file.starter);
  if (json_format(o)) {
    out << dump(to_json(report));
  } else {
    out << file.starter.provenance().describe() << " over " << file.group.name() << ": "
        << (report.is_starter ? "starter" : "NOT a starter") << ", "
        << (report.is_strong ? "strong" : "not strong") << "\n";
    for (const auto& v : report.violations) out << "  " << v << "\n";
  }
  return report.is_starter ? kExitPass : kExitFail;
}

int cmd_factorize(const Options& o, std::ostream& out) {
  const OneFactorization f = expand(input_from_flags(o));
  emit(o, dump(factorization_to_json(f)), out);
  return kExitPass;
}

int cmd_verify(Options o, std::ostream& out) {
  if (!o.c4free && !o.totally && !o.orthogonal && !o.cross && !o.strong) o.c4free = true;
  const bool json = json_format(o);
  const Input primary = input_from_flags(o);
  const OneFactorization f = expand(primary);

  std::optional<OneFactorization> g;
  if (!o.in2_path.empty()) {
    g = expand(load_input(o.in2_path));
  } else if (o.beta2 || o.with_negation) {
    if (!primary.starter) throw UsageError("--beta2/--with-negation need a starter input");
    const Group& group = primary.starter->group;
    if (o.with_negation) {
      g = factorization_from_starter(group, negate_starter(group, primary.starter->starter));
    } else {
      if (!group.is_field()) throw UsageError("--beta2 needs a field");
      g = factorization_from_starter(group, horton_starter(group.field(), Elem{*o.beta2}));
    }
  }
  if ((o.totally || o.orthogonal || o.cross) && !g) {
    throw UsageError("--totally/--orthogonal/--cross need a second input (--in2, --beta2, --with-negation)");
  }
  const bool trusted = f.fast_path_available() && (!g || g->fast_path_available());
  const CheckMode mode = o.exhaustive || !trusted ? CheckMode::Exhaustive : CheckMode::Fast;

  std::vector<PairCheckReport> reports;
  std::optional<StarterReport> strong;
  if (o.strong) {
    if (!primary.starter) throw UsageError("--strong needs a starter input");
    strong = validate_starter(primary.starter->group, primary.starter->starter);
  }
  if (o.c4free) reports.push_back(factorization_c4_free(f, mode));
  if (o.cross) reports.push_back(pair_cross_c4_free(f, *g, mode));
  if (o.totally) reports.push_back(pair_totally_c4_free(f, *g, mode));
  if (o.orthogonal) reports.push_back(factorizations_orthogonal(f, *g, mode));

  bool pass = !strong || strong->is_strong;
  for (const auto& r : reports) pass = pass && r.pass;

  if (json) {
    Json j;
    j["schema_version"] = kReportSchemaVersion;
    j["group"] = to_json(f.group());
    j["pass"] = pass;
    if (strong) j["strong"] = to_json(*strong);
    Json checks = Json::array();
    for (const auto& r : reports) checks.push_back(to_json(r));
    j["checks"] = std::move(checks);
    out << dump(j);
  } else {
    if (strong) {
      out << "strong_starter: " << (strong->is_strong ? "pass" : "FAIL") << "\n";
      for (const auto& v : strong->violations) out << "  " << v << "\n";
    }
    for (const auto& r : reports) {
      out << r.property << " (" << to_string(r.mode) << ", " << r.pairs_checked
          << " pairs): " << (r.pass ? "pass" : "FAIL") << "\n";
      for (const auto& w : r.witnesses) out << "  witness: " << dump(to_json(w));
      for (const auto& s : r.shared) out << "  shared: " << dump(to_json(s));
    }
  }
  return pass ? kExitPass : kExitFail;
}

int cmd_campaign(const Options& o, std::ostream& out, std::ostream& err) {
  const bool json = json_format(o);
  const auto kind = parse_campaign_kind(o.campaign);
  if (!kind) throw UsageError("unknown campaign \"" + o.campaign + "\"");
  CampaignRequest req;
  req.kind = *kind;
  if (o.q && (o.from || o.to)) throw UsageError("give --q or --from/--to, not both");
  if (o.q) {
    req.from = req.to = *o.q;
  } else if (o.from && o.to) {
    req.from = *o.from;
    req.to = *o.to;
  } else {
    throw UsageError("campaign needs --q or --from and --to");
  }
  if (o.variant == "both") {
    req.variants = {MVariant::Corollary10Paper, MVariant::Corollary10LemmaConsistent};
  } else if (o.variant == "paper") {
    req.variants = {MVariant::Corollary10Paper};
  } else if (o.variant == "lemma") {
    req.variants = {MVariant::Corollary10LemmaConsistent};
  } else {
    throw UsageError("--variant must be paper, lemma, or both");
  }
  if (o.mode != "fast" && o.mode != "exhaustive") throw UsageError("--mode must be fast or exhaustive");
  req.mode = o.mode == "fast" ? CheckMode::Fast : CheckMode::Exhaustive;
  req.options.threads = o.threads == 0 ? default_thread_count() : o.threads;

  const CampaignRun run = run_campaign(req);
  for (const auto& r : run.reports) {
    err << "[" << run.campaign << "] " << r.group << (r.variant.empty() ? "" : "/" + r.variant)
        << ": " << (r.pass ? "pass" : "FAIL") << " (" << r.cases.size() << " cases)\n";
  }
  out << (json ? dump(to_json(run, o.timing)) : to_text(run, o.timing));
  return run.pass ? kExitPass : kExitFail;
}

void add_construction_flags(CLI::App* cmd, Options& o) {
  cmd->add_option("--q", o.q, "field order (odd prime power)");
  cmd->add_option("--zn", o.zn, "cyclic group order (odd)");
  cmd->add_option("--kind", o.kind, "horton | negated | patterned")->capture_default_str();
  cmd->add_option("--beta", o.beta, "non-residue parameter of the Horton starter");
  cmd->add_option("--in", o.in_path, "starter or factorization JSON file");
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  Options o;
  CLI::App app{"Starters, one-factorizations and C4-free verification"};
  app.name("onefact");
  app.require_subcommand(1, 1);

  auto* field = app.add_subcommand("field", "describe GF(q)");
  field->add_option("--q", o.q, "field order")->required();
  field->add_option("--format", o.format, "text | json");

  auto* starter = app.add_subcommand("starter", "construct or validate a starter");
  add_construction_flags(starter, o);
  starter->add_option("--out", o.out_path, "write the starter file here");
  starter->add_flag("--validate", o.validate, "print the starter report");
  starter->add_option("--format", o.format, "text | json");

  auto* factorize = app.add_subcommand("factorize", "expand a starter into a one-factorization");
  add_construction_flags(factorize, o);
  factorize->add_option("--out", o.out_path, "write the factorization file here");

  auto* verify = app.add_subcommand("verify", "check C4-freeness and orthogonality");
  add_construction_flags(verify, o);
  verify->add_option("--in2", o.in2_path, "second starter or factorization file");
  verify->add_option("--beta2", o.beta2, "second family from S_beta2");
  verify->add_flag("--with-negation", o.with_negation, "second family from -S");
  verify->add_flag("--c4free", o.c4free, "first family is C4-free");
  verify->add_flag("--cross", o.cross, "unions across the two families are C4-free");
  verify->add_flag("--totally", o.totally, "the pair is totally C4-free");
  verify->add_flag("--orthogonal", o.orthogonal, "the two families are orthogonal");
  verify->add_flag("--strong", o.strong, "the input starter is strong");
  verify->add_flag("--exhaustive", o.exhaustive, "check every factor pair");
  verify->add_option("--format", o.format, "text | json");

  auto* campaign = app.add_subcommand("campaign", "run a verification campaign");
  campaign->add_option("name", o.campaign, "horton | dinitz | lemma6 | lemma7 | main | corollary | witnesses")
      ->required();
  campaign->add_option("--q", o.q, "single order");
  campaign->add_option("--from", o.from, "range start");
  campaign->add_option("--to", o.to, "range end");
  campaign->add_option("--variant", o.variant, "corollary M2 variant: paper | lemma | both");
  campaign->add_option("--mode", o.mode, "lemma6/lemma7 check mode: fast | exhaustive");
  campaign->add_option("--threads", o.threads, "worker threads (default: all cores)");
  campaign->add_option("--format", o.format, "text | json");
  campaign->add_flag("--timing", o.timing, "include timings in the report");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitPass : kExitUsage;
  }

  try {
    if (*field) return cmd_field(o, out);
    if (*starter) return cmd_starter(o, out);
    if (*factorize) return cmd_factorize(o, out);
    if (*verify) return cmd_verify(o, out);
    if (*campaign) return cmd_campaign(o, out, err);
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {  // malformed JSON shapes surface here
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}

}  // namespace onefact
