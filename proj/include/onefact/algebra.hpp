// Copyright 2026 The onefact Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <compare>
#include <cstdint>
#include <string_view>
#include <utility>
#include <vector>

namespace onefact {

/// Group or field element. For GF(p^k) the value is the base-p,
/// little-endian encoding of the residue polynomial's coefficients;
/// for Z_n it is the residue itself.
struct Elem {
  std::uint32_t value = 0;

  constexpr Elem() = default;
  constexpr explicit Elem(std::uint32_t v) : value(v) {}

  friend constexpr auto operator<=>(const Elem&, const Elem&) = default;
};

enum class Residue : std::uint8_t { Zero, QR, NQR };

std::string_view to_string(Residue r);

inline constexpr std::uint32_t kMaxFieldOrder = 1u << 20;

struct FieldSpec {
  std::uint32_t p = 0;
  std::uint32_t k = 0;
  std::uint32_t q = 0;
  // k+1 coefficients, little-endian, leading 1 included; empty when k == 1.
  std::vector<std::uint32_t> reduction_poly;

  friend bool operator==(const FieldSpec&, const FieldSpec&) = default;
};

/// GF(q) for odd prime powers q <= kMaxFieldOrder.
///
/// Construction precomputes the residue-class table (and, for k > 1, the
/// exp/log tables of a primitive element), so a Field is immutable and
/// safe to share between threads once built.
class Field {
 public:
  const FieldSpec& spec() const noexcept { return spec_; }
  std::uint32_t order() const noexcept { return spec_.q; }
  std::uint32_t characteristic() const noexcept { return spec_.p; }
  std::uint32_t degree() const noexcept { return spec_.k; }

  Elem zero() const noexcept { return Elem{0}; }
  Elem one() const noexcept { return Elem{1}; }
  /// Image of the integer n under Z -> GF(p) -> GF(q).
  Elem from_int(std::int64_t n) const noexcept;
  bool contains(Elem a) const noexcept { return a.value < spec_.q; }

  Elem add(Elem a, Elem b) const noexcept;
  Elem sub(Elem a, Elem b) const noexcept;
  Elem neg(Elem a) const noexcept;
  Elem mul(Elem a, Elem b) const noexcept;
  Elem inv(Elem a) const;  // throws DivisionByZero
  Elem div(Elem a, Elem b) const { return mul(a, inv(b)); }
  Elem pow(Elem a, std::uint64_t e) const noexcept;

  /// Schoolbook product reduced by the reduction polynomial. Agrees with
  /// mul() everywhere; mul() uses log tables when k > 1.
  Elem poly_mul(Elem a, Elem b) const noexcept;

  Residue residue_class(Elem a) const noexcept { return residue_[a.value]; }
  bool is_qr(Elem a) const noexcept { return residue_class(a) == Residue::QR; }
  bool is_nqr(Elem a) const noexcept { return residue_class(a) == Residue::NQR; }

  std::vector<Elem> qr_set() const;
  std::vector<Elem> nqr_set() const;
  std::vector<Elem> nonzero_elements() const;

  friend Field make_field(std::uint64_t q);

 private:
  explicit Field(FieldSpec spec);

  FieldSpec spec_;
  std::vector<std::uint32_t> exp_;  // k > 1 only
  std::vector<std::uint32_t> log_;
  std::vector<Residue> residue_;
};

/// Factors q = p^k and, for k > 1, picks the monic irreducible of degree k
/// with the smallest base-p encoding.
/// Throws EvenOrder, NotPrimePower, OutOfRange.
Field make_field(std::uint64_t q);

/// Euler's criterion evaluated directly, bypassing the cached table.
Residue residue_by_exponentiation(const Field& field, Elem a);

/// Number of x in C_i with x + 1 in C_j, where C_0 = QR and C_1 = NQR.
std::uint64_t cyclotomic_number(const Field& field, int i, int j);

/// Additive group Z_n, n odd and >= 3.
struct CyclicRing {
  std::uint32_t n = 0;

  friend bool operator==(const CyclicRing&, const CyclicRing&) = default;
};

CyclicRing make_cyclic(std::uint64_t n);

namespace poly {

/// Polynomials over GF(p), little-endian coefficient vectors without
/// trailing zeros (the zero polynomial is empty).
using Coeffs = std::vector<std::uint32_t>;

Coeffs mod(Coeffs a, const Coeffs& m, std::uint32_t p);
bool is_irreducible(const Coeffs& f, std::uint32_t p);

}  // namespace poly

/// Returns {p, k} with q = p^k, or {0, 0} when q is not a prime power.
std::pair<std::uint32_t, std::uint32_t> prime_power(std::uint64_t q);

}  // namespace onefact
