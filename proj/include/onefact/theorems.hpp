// Copyright 2026 The onefact Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "onefact/algebra.hpp"

namespace onefact {

/// Residue classes of every expression the existence and C4 conditions
/// mention, for one beta in NQR(q) \ {-1}.
struct ConditionProfile {
  Elem beta;
  Residue beta_plus_one = Residue::Zero;
  Residue beta_minus_one = Residue::Zero;
  Residue beta_sq_plus_one = Residue::Zero;
  Residue sq_plus_one_over_minus_one = Residue::Zero;  // (b^2+1)/(b-1)
  Residue half_sq_plus_one = Residue::Zero;            // (b^2+1)/2
  Residue half_minus_one = Residue::Zero;              // (b-1)/2
  bool cube_is_minus_one = false;
  bool excluded = false;  // b in {2, 1/2, -1}
};

/// Throws BadField unless q = 3 (mod 4), q > 3; BadBeta unless beta is a
/// non-residue other than -1.
ConditionProfile condition_profile(const Field& field, Elem beta);

/// (b^2+1)/(b-1) in QR: the factorization from S_b is C4-free.
bool lemma6_condition(const Field& field, Elem beta);

/// (b^2+1)/2 in QR or (b-1)/2 in QR, with b not in {2, 1/2}: the pair
/// (S_b, -S_b) has C4-free cross unions.
bool lemma7_condition(const Field& field, Elem beta);

enum class MVariant {
  Theorem9,
  Corollary10Paper,           // M2 uses b - 1 in QR
  Corollary10LemmaConsistent  // M2 uses b - 1 in NQR
};

std::string_view to_string(MVariant v);

struct MSets {
  MVariant variant = MVariant::Theorem9;
  std::vector<Elem> m1;
  std::vector<Elem> m2;

  /// m1 u m2, ascending.
  std::vector<Elem> combined() const;
};

/// Exhaustive scan of NQR(q). Theorem9 needs q = 3 (mod 4), q >= 11; the
/// corollary variants need q = 3 (mod 8), q >= 11. Throws BadField.
MSets m_sets(const Field& field, MVariant variant);

struct LemmaClaim {
  std::string name;
  std::string condition;
  std::vector<Elem> witnesses;  // ascending
  bool exists = false;
};

struct WitnessReport {
  std::string lemma;
  std::vector<LemmaClaim> claims;
  bool exists = false;  // every claim has a witness
};

/// beta in NQR with b+1, b-1 both NQR (item 1) and both QR (item 2).
WitnessReport witness_lemma_1beta(const Field& field);
/// alpha in QR with a+1, a-1 both NQR (item 1) and both QR (item 2).
WitnessReport witness_lemma_1alpha(const Field& field);
/// beta in NQR with (b+1)(b-1) in NQR.
WitnessReport witness_nqr(const Field& field);
/// alpha in QR with (a+1)(a-1) in NQR.
WitnessReport witness_qr(const Field& field);

/// Witness searches accept q = 3 (mod 4) with q >= 7; throws BadField.
void require_witness_field(const Field& field);

}  // namespace onefact
