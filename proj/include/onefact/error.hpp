// Copyright 2026 The onefact Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace onefact {

enum class ErrorCode {
  NotPrimePower,
  EvenOrder,
  OutOfRange,
  DivisionByZero,
  BadBeta,
  BadField,
  InvalidStarter,
  MalformedStarter,
  TooLarge,
  FastModeUnavailable,
  InvalidInput,
};

std::string_view to_string(ErrorCode code);

/// Thrown for usage and precondition failures. Mathematical outcomes
/// (a starter that is not strong, a factorization with a 4-cycle) are
/// reported through report objects instead.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace onefact
