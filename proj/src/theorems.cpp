// Copyright 2026 The onefact Authors
// SPDX-License-Identifier: Apache-2.0

#include "onefact/theorems.hpp"

#include <algorithm>
#include <functional>
#include <iterator>

#include "onefact/error.hpp"

namespace onefact {
namespace {

void require_3_mod_4(const Field& field, std::uint32_t min_q) {
  const std::uint32_t q = field.order();
  if (q % 4 != 3 || q < min_q) {
    throw Error(ErrorCode::BadField, "need q = 3 (mod 4) and q >= " + std::to_string(min_q) +
                                         "; got " + std::to_string(q));
  }
}

}  // namespace

std::string_view to_string(MVariant v) {
  switch (v) {
    case MVariant::Theorem9: return "theorem9";
    case MVariant::Corollary10Paper: return "paper";
    case MVariant::Corollary10LemmaConsistent: return "lemma";
  }
  return "?";
}

ConditionProfile condition_profile(const Field& field, Elem beta) {
  require_3_mod_4(field, 7);
  const Elem minus_one = field.neg(field.one());
  if (!field.contains(beta) || !field.is_nqr(beta) || beta == minus_one) {
    throw Error(ErrorCode::BadBeta, "beta = " + std::to_string(beta.value) +
                                        " must be a non-residue other than -1");
  }
  const Elem one = field.one();
  const Elem two = field.from_int(2);
  const Elem plus = field.add(beta, one);
  const Elem minus = field.sub(beta, one);
  const Elem sq_plus = field.add(field.mul(beta, beta), one);

  ConditionProfile out;
  out.beta = beta;
  out.beta_plus_one = field.residue_class(plus);
  out.beta_minus_one = field.residue_class(minus);
  out.beta_sq_plus_one = field.residue_class(sq_plus);
  out.sq_plus_one_over_minus_one = field.residue_class(field.div(sq_plus, minus));
  out.half_sq_plus_one = field.residue_class(field.div(sq_plus, two));
  out.half_minus_one = field.residue_class(field.div(minus, two));
  out.cube_is_minus_one = field.pow(beta, 3) == minus_one;
  out.excluded = beta == two || beta == field.inv(two) || beta == minus_one;
  return out;
}

bool lemma6_condition(const Field& field, Elem beta) {
  return condition_profile(field, beta).sq_plus_one_over_minus_one == Residue::QR;
}

bool lemma7_condition(const Field& field, Elem beta) {
  const ConditionProfile c = condition_profile(field, beta);
  const Elem two = field.from_int(2);
  if (beta == two || beta == field.inv(two)) return false;
  return c.half_sq_plus_one == Residue::QR || c.half_minus_one == Residue::QR;
}

std::vector<Elem> MSets::combined() const {
  std::vector<Elem> out;
  std::set_union(m1.begin(), m1.end(), m2.begin(), m2.end(), std::back_inserter(out));
  return out;
}

MSets m_sets(const Field& field, MVariant variant) {
  require_3_mod_4(field, 11);
  if (variant != MVariant::Theorem9 && field.order() % 8 != 3) {
    throw Error(ErrorCode::BadField, "corollary sets need q = 3 (mod 8); got " +
                                         std::to_string(field.order()));
  }
  MSets out;
  out.variant = variant;
  const Elem minus_one = field.neg(field.one());
  for (const Elem beta : field.nqr_set()) {
    if (beta == minus_one) continue;
    const ConditionProfile c = condition_profile(field, beta);
    if (c.excluded || c.cube_is_minus_one) continue;
    bool in_m1 = false, in_m2 = false;
    switch (variant) {
      case MVariant::Theorem9:
        in_m1 = c.half_sq_plus_one == Residue::QR;
        in_m2 = c.half_minus_one == Residue::QR;
        break;
      case MVariant::Corollary10Paper:
        in_m1 = c.beta_sq_plus_one == Residue::NQR;
        in_m2 = c.beta_minus_one == Residue::QR;
        break;
      case MVariant::Corollary10LemmaConsistent:
        in_m1 = c.beta_sq_plus_one == Residue::NQR;
        in_m2 = c.beta_minus_one == Residue::NQR;
        break;
    }
    if (in_m1) out.m1.push_back(beta);
    if (in_m2) out.m2.push_back(beta);
  }
  return out;
}

void require_witness_field(const Field& field) { require_3_mod_4(field, 7); }

namespace {

LemmaClaim scan(const std::vector<Elem>& domain, std::string name, std::string condition,
                const std::function<bool(Elem)>& holds) {
  LemmaClaim claim{std::move(name), std::move(condition), {}, false};
  for (const Elem x : domain) {
    if (holds(x)) claim.witnesses.push_back(x);
  }
  claim.exists = !claim.witnesses.empty();
  return claim;
}

WitnessReport finish(std::string lemma, std::vector<LemmaClaim> claims) {
  WitnessReport r{std::move(lemma), std::move(claims), true};
  for (const auto& c : r.claims) r.exists = r.exists && c.exists;
  return r;
}

WitnessReport neighbour_classes(const Field& field, const std::vector<Elem>& domain,
                                std::string lemma, const char* symbol) {
  const Elem one = field.one();
  auto both = [&](Residue want) {
    return [&field, one, want](Elem x) {
      return field.residue_class(field.add(x, one)) == want &&
             field.residue_class(field.sub(x, one)) == want;
    };
  };
  const std::string s = symbol;
  return finish(std::move(lemma),
                {scan(domain, "item1", s + "+1 in NQR and " + s + "-1 in NQR", both(Residue::NQR)),
                 scan(domain, "item2", s + "+1 in QR and " + s + "-1 in QR", both(Residue::QR))});
}

WitnessReport product_class(const Field& field, const std::vector<Elem>& domain, std::string lemma,
                            const char* symbol) {
  const Elem one = field.one();
  const std::string s = symbol;
  return finish(std::move(lemma),
                {scan(domain, "product", "(" + s + "+1)(" + s + "-1) in NQR", [&](Elem x) {
                   return field.is_nqr(field.mul(field.add(x, one), field.sub(x, one)));
                 })});
}

}  // namespace

WitnessReport witness_lemma_1beta(const Field& field) {
  require_witness_field(field);
  return neighbour_classes(field, field.nqr_set(), "nqr_neighbours", "b");
}

WitnessReport witness_lemma_1alpha(const Field& field) {
  require_witness_field(field);
  return neighbour_classes(field, field.qr_set(), "qr_neighbours", "a");
}

WitnessReport witness_nqr(const Field& field) {
  require_witness_field(field);
  return product_class(field, field.nqr_set(), "nqr_product", "b");
}

WitnessReport witness_qr(const Field& field) {
  require_witness_field(field);
  return product_class(field, field.qr_set(), "qr_product", "a");
}

}  // namespace onefact
