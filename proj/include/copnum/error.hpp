#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace copnum {

enum class Errc {
  invalid_argument,
  resource_limit,
  non_generating,
  t_not_subset,
  empty_s,
  zero_k,
  boundary_instance,
  no_valid_pair,
  budget_exceeded,
  out_of_regime,
  not_prime,
  p_too_small,
  zero_difference,
  size_mismatch,
  unknown_format,
  illegal_adversary_move,
  parse_error,
};

inline const char* errc_name(Errc c) {
  switch (c) {
    case Errc::invalid_argument: return "InvalidArgument";
    case Errc::resource_limit: return "ResourceLimit";
    case Errc::non_generating: return "NonGenerating";
    case Errc::t_not_subset: return "TNotSubset";
    case Errc::empty_s: return "EmptyS";
    case Errc::zero_k: return "ZeroK";
    case Errc::boundary_instance: return "BoundaryInstance";
    case Errc::no_valid_pair: return "NoValidPair";
    case Errc::budget_exceeded: return "BudgetExceeded";
    case Errc::out_of_regime: return "OutOfRegime";
    case Errc::not_prime: return "NotPrime";
    case Errc::p_too_small: return "PTooSmall";
    case Errc::zero_difference: return "ZeroDifference";
    case Errc::size_mismatch: return "SizeMismatch";
    case Errc::unknown_format: return "UnknownFormat";
    case Errc::illegal_adversary_move: return "IllegalAdversaryMove";
    case Errc::parse_error: return "ParseError";
  }
  return "Unknown";
}

/// Every precondition violation in the library surfaces as an Error carrying
/// a machine-readable code.
class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what)
      : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code) {}

  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

class BudgetExceeded : public Error {
 public:
  BudgetExceeded(std::uint64_t estimate, std::uint64_t budget)
      : Error(Errc::budget_exceeded, "estimated " + std::to_string(estimate) +
                                         " expanded arcs exceeds budget " + std::to_string(budget)),
        estimate_(estimate),
        budget_(budget) {}

  std::uint64_t estimate() const noexcept { return estimate_; }
  std::uint64_t budget() const noexcept { return budget_; }

 private:
  std::uint64_t estimate_;
  std::uint64_t budget_;
};

}  // namespace copnum
