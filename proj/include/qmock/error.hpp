#pragma once

#include <stdexcept>
#include <string>

namespace qmock {

enum class ErrorKind {
  division_by_zero,
  incompatible_conductors,
  unsupported_order,
  scale_mismatch,
  zero_inversion,
  order_exceeds_guarantee,
  degenerate_specialization,
  pole_in_term,
  not_convergent,
  parse_error,
  unbound_variable,
  unknown_name,
  invalid_argument,
};

inline const char* to_string(ErrorKind k) {
  switch (k) {
    case ErrorKind::division_by_zero: return "division-by-zero";
    case ErrorKind::incompatible_conductors: return "incompatible-conductors";
    case ErrorKind::unsupported_order: return "unsupported-order";
    case ErrorKind::scale_mismatch: return "scale-mismatch";
    case ErrorKind::zero_inversion: return "zero-series-inversion";
    case ErrorKind::order_exceeds_guarantee: return "order-exceeds-guarantee";
    case ErrorKind::degenerate_specialization: return "degenerate-specialization";
    case ErrorKind::pole_in_term: return "pole-in-term";
    case ErrorKind::not_convergent: return "not-q-adically-convergent";
    case ErrorKind::parse_error: return "parse-error";
    case ErrorKind::unbound_variable: return "unbound-variable";
    case ErrorKind::unknown_name: return "unknown-name";
    case ErrorKind::invalid_argument: return "invalid-argument";
  }
  return "unknown";
}

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

  // Pole, zero-denominator and non-convergence are all consequences of the
  // chosen specialization; callers report them as degenerate outcomes.
  bool is_degenerate() const noexcept {
    return kind_ == ErrorKind::degenerate_specialization || kind_ == ErrorKind::pole_in_term ||
           kind_ == ErrorKind::zero_inversion || kind_ == ErrorKind::division_by_zero;
  }

 private:
  ErrorKind kind_;
};

[[noreturn]] inline void fail(ErrorKind kind, const std::string& what) { throw Error(kind, what); }

}  // namespace qmock
