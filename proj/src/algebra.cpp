// Copyright 2026 The onefact Authors
// SPDX-License-Identifier: Apache-2.0

#include "onefact/algebra.hpp"

#include <string>

#include "onefact/error.hpp"

namespace onefact {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::NotPrimePower: return "NotPrimePower";
    case ErrorCode::EvenOrder: return "EvenOrder";
    case ErrorCode::OutOfRange: return "OutOfRange";
    case ErrorCode::DivisionByZero: return "DivisionByZero";
    case ErrorCode::BadBeta: return "BadBeta";
    case ErrorCode::BadField: return "BadField";
    case ErrorCode::InvalidStarter: return "InvalidStarter";
    case ErrorCode::MalformedStarter: return "MalformedStarter";
    case ErrorCode::TooLarge: return "TooLarge";
    case ErrorCode::FastModeUnavailable: return "FastModeUnavailable";
    case ErrorCode::InvalidInput: return "InvalidInput";
  }
  return "Unknown";
}

std::string_view to_string(Residue r) {
  switch (r) {
    case Residue::Zero: return "zero";
    case Residue::QR: return "QR";
    case Residue::NQR: return "NQR";
  }
  return "?";
}

std::pair<std::uint32_t, std::uint32_t> prime_power(std::uint64_t q) {
  if (q < 2) return {0, 0};
  std::uint64_t p = 0;
  for (std::uint64_t d = 2; d * d <= q; ++d) {
    if (q % d == 0) {
      p = d;
      break;
    }
  }
  if (p == 0) return {static_cast<std::uint32_t>(q), 1};
  std::uint32_t k = 0;
  while (q % p == 0) {
    q /= p;
    ++k;
  }
  if (q != 1) return {0, 0};
  return {static_cast<std::uint32_t>(p), k};
}

namespace poly {
namespace {

void trim(Coeffs& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

}  // namespace

Coeffs mod(Coeffs a, const Coeffs& m, std::uint32_t p) {
  // m is monic
  trim(a);
  const std::size_t dm = m.size() - 1;
  while (a.size() > dm) {
    const std::uint64_t c = a.back();
    const std::size_t shift = a.size() - 1 - dm;
    for (std::size_t i = 0; i <= dm; ++i) {
      const std::uint64_t sub = (c * m[i]) % p;
      a[shift + i] = static_cast<std::uint32_t>((a[shift + i] + p - sub) % p);
    }
    trim(a);
  }
  return a;
}

bool is_irreducible(const Coeffs& f, std::uint32_t p) {
  const std::size_t deg = f.size() - 1;
  if (deg <= 1) return deg == 1;
  // Trial division by every monic polynomial of degree 1..deg/2.
  for (std::size_t d = 1; d <= deg / 2; ++d) {
    std::uint64_t combos = 1;
    for (std::size_t i = 0; i < d; ++i) combos *= p;
    Coeffs g(d + 1, 0);
    g[d] = 1;
    for (std::uint64_t code = 0; code < combos; ++code) {
      std::uint64_t c = code;
      for (std::size_t i = 0; i < d; ++i) {
        g[i] = static_cast<std::uint32_t>(c % p);
        c /= p;
      }
      if (mod(f, g, p).empty()) return false;
    }
  }
  return true;
}

}  // namespace poly

Field make_field(std::uint64_t q) {
  if (q < 3 || q > kMaxFieldOrder) {
    throw Error(ErrorCode::OutOfRange,
                "field order " + std::to_string(q) + " outside [3, " +
                    std::to_string(kMaxFieldOrder) + "]");
  }
  const auto [p, k] = prime_power(q);
  if (p == 0) {
    throw Error(ErrorCode::NotPrimePower, std::to_string(q) + " is not a prime power");
  }
  if (p == 2) {
    throw Error(ErrorCode::EvenOrder, std::to_string(q) + " is even");
  }
  FieldSpec spec{p, k, static_cast<std::uint32_t>(q), {}};
  if (k > 1) {
    // q = p^k, so the k low coefficients range over exactly q codes.
    poly::Coeffs f(k + 1, 0);
    f[k] = 1;
    for (std::uint32_t code = 0; code < q; ++code) {
      std::uint32_t c = code;
      for (std::uint32_t i = 0; i < k; ++i) {
        f[i] = c % p;
        c /= p;
      }
      if (poly::is_irreducible(f, p)) {
        spec.reduction_poly = f;
        break;
      }
    }
  }
  return Field(std::move(spec));
}

Field::Field(FieldSpec spec) : spec_(std::move(spec)) {
  const std::uint32_t q = spec_.q;
  if (spec_.k > 1) {
    exp_.assign(q - 1, 0);
    log_.assign(q, 0);
    for (std::uint32_t g = 2; g < q; ++g) {
      std::uint32_t x = 1;
      bool primitive = true;
      for (std::uint32_t i = 0; i + 1 < q; ++i) {
        exp_[i] = x;
        x = poly_mul(Elem{x}, Elem{g}).value;
        if (x == 1 && i + 2 < q) {
          primitive = false;
          break;
        }
      }
      if (primitive && x == 1) break;
    }
    for (std::uint32_t i = 0; i + 1 < q; ++i) log_[exp_[i]] = i;
  }
  residue_.assign(q, Residue::Zero);
  for (std::uint32_t a = 1; a < q; ++a) {
    residue_[a] = residue_by_exponentiation(*this, Elem{a});
  }
}

Elem Field::from_int(std::int64_t n) const noexcept {
  const std::int64_t p = spec_.p;
  return Elem{static_cast<std::uint32_t>(((n % p) + p) % p)};
}

Elem Field::add(Elem a, Elem b) const noexcept {
  const std::uint32_t p = spec_.p;
  if (spec_.k == 1) {
    const std::uint32_t s = a.value + b.value;
    return Elem{s >= p ? s - p : s};
  }
  std::uint32_t x = a.value, y = b.value, r = 0, place = 1;
  for (std::uint32_t i = 0; i < spec_.k; ++i) {
    r += ((x % p + y % p) % p) * place;
    x /= p;
    y /= p;
    place *= p;
  }
  return Elem{r};
}

Elem Field::neg(Elem a) const noexcept {
  const std::uint32_t p = spec_.p;
  if (spec_.k == 1) return Elem{a.value == 0 ? 0 : p - a.value};
  std::uint32_t x = a.value, r = 0, place = 1;
  for (std::uint32_t i = 0; i < spec_.k; ++i) {
    r += ((p - x % p) % p) * place;
    x /= p;
    place *= p;
  }
  return Elem{r};
}

Elem Field::sub(Elem a, Elem b) const noexcept { return add(a, neg(b)); }

Elem Field::poly_mul(Elem a, Elem b) const noexcept {
  const std::uint32_t p = spec_.p;
  const std::uint32_t k = spec_.k;
  if (k == 1) {
    return Elem{static_cast<std::uint32_t>(std::uint64_t{a.value} * b.value % p)};
  }
  std::vector<std::uint64_t> x(k), y(k), prod(2 * k - 1, 0);
  for (std::uint32_t i = 0, u = a.value, v = b.value; i < k; ++i, u /= p, v /= p) {
    x[i] = u % p;
    y[i] = v % p;
  }
  for (std::uint32_t i = 0; i < k; ++i) {
    for (std::uint32_t j = 0; j < k; ++j) prod[i + j] = (prod[i + j] + x[i] * y[j]) % p;
  }
  const auto& f = spec_.reduction_poly;
  for (std::uint32_t d = 2 * k - 2; d >= k; --d) {
    const std::uint64_t c = prod[d];
    if (c == 0) continue;
    for (std::uint32_t i = 0; i <= k; ++i) {
      prod[d - k + i] = (prod[d - k + i] + p - c * f[i] % p) % p;
    }
  }
  std::uint32_t r = 0;
  for (std::uint32_t i = k; i-- > 0;) r = r * p + static_cast<std::uint32_t>(prod[i]);
  return Elem{r};
}

Elem Field::mul(Elem a, Elem b) const noexcept {
  if (spec_.k == 1) {
    return Elem{static_cast<std::uint32_t>(std::uint64_t{a.value} * b.value % spec_.p)};
  }
  if (a.value == 0 || b.value == 0) return Elem{0};
  const std::uint32_t e = (log_[a.value] + log_[b.value]) % (spec_.q - 1);
  return Elem{exp_[e]};
}

Elem Field::pow(Elem a, std::uint64_t e) const noexcept {
  Elem result = one();
  Elem base = a;
  while (e > 0) {
    if (e & 1) result = mul(result, base);
    base = mul(base, base);
    e >>= 1;
  }
  return result;
}

Elem Field::inv(Elem a) const {
  if (a.value == 0) throw Error(ErrorCode::DivisionByZero, "inverse of zero");
  return pow(a, spec_.q - 2);
}

std::vector<Elem> Field::qr_set() const {
  std::vector<Elem> out;
  out.reserve((spec_.q - 1) / 2);
  for (std::uint32_t a = 1; a < spec_.q; ++a) {
    if (residue_[a] == Residue::QR) out.emplace_back(a);
  }
  return out;
}

std::vector<Elem> Field::nqr_set() const {
  std::vector<Elem> out;
  out.reserve((spec_.q - 1) / 2);
  for (std::uint32_t a = 1; a < spec_.q; ++a) {
    if (residue_[a] == Residue::NQR) out.emplace_back(a);
  }
  return out;
}

std::vector<Elem> Field::nonzero_elements() const {
  std::vector<Elem> out;
  out.reserve(spec_.q - 1);
  for (std::uint32_t a = 1; a < spec_.q; ++a) out.emplace_back(a);
  return out;
}

Residue residue_by_exponentiation(const Field& field, Elem a) {
  if (a.value == 0) return Residue::Zero;
  const Elem e = field.pow(a, (field.order() - 1) / 2);
  return e == field.one() ? Residue::QR : Residue::NQR;
}

std::uint64_t cyclotomic_number(const Field& field, int i, int j) {
  if ((i != 0 && i != 1) || (j != 0 && j != 1)) {
    throw Error(ErrorCode::OutOfRange, "cyclotomic class index must be 0 or 1");
  }
  const Residue ci = i == 0 ? Residue::QR : Residue::NQR;
  const Residue cj = j == 0 ? Residue::QR : Residue::NQR;
  std::uint64_t count = 0;
  for (const Elem x : field.nonzero_elements()) {
    if (field.residue_class(x) == ci && field.residue_class(field.add(x, field.one())) == cj) {
      ++count;
    }
  }
  return count;
}

CyclicRing make_cyclic(std::uint64_t n) {
  if (n < 3 || n > kMaxFieldOrder) {
    throw Error(ErrorCode::OutOfRange, "cyclic order " + std::to_string(n) + " outside range");
  }
  if (n % 2 == 0) throw Error(ErrorCode::EvenOrder, std::to_string(n) + " is even");
  return CyclicRing{static_cast<std::uint32_t>(n)};
}

}  // namespace onefact
