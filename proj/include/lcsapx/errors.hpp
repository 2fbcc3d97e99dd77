#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace lcsapx {

enum class ErrorCode {
  invalid_alphabet,
  invalid_symbol,
  invalid_subalphabet,
  precondition,
  size_limit,
  segmentation,
  spec,
  alphabet_too_large,
  unknown_symbol,
  contract_violation,
  internal_contradiction,
  invalid_witness,
};

std::string_view to_string(ErrorCode code);

// Internal errors signal a bug in this library rather than bad input.
constexpr bool is_internal(ErrorCode code) {
  return code == ErrorCode::contract_violation ||
         code == ErrorCode::internal_contradiction ||
         code == ErrorCode::invalid_witness;
}

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(std::string(to_string(code)) + ": " + message), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace lcsapx
