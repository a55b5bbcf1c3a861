#pragma once

#include <optional>
#include <stdexcept>
#include <string>

namespace skewbrace {

// Every failure the library can signal, grouped so callers can map them to
// exit codes without string matching.  kinds up to and including
// unknown_scenario describe invalid input; the remaining ones describe a
// configured limit being hit.
enum class errc {
  invalid_table,       // not a Cayley table of a group
  identity_mismatch,   // additive and multiplicative identities differ
  brace_law,           // a o (b + c) != a o b - a + a o c at some triple
  bad_parameters,      // constructor arguments out of range
  not_a_subgroup,
  not_an_ideal,
  not_a_homomorphism,
  no_index2_subgroup,  // sign action requested but no unique index-2 subgroup
  parse_error,         // malformed JSON or plain-text input
  unsupported_order,   // enumeration catalog does not cover the order
  unknown_scenario,
  search_failed,       // an object the caller asserted to exist was not found
  bound_exceeded,      // configured size bound hit (automorphisms, holomorph)
  cap_exceeded,        // star-closure subgroup cap hit
};

// Witness for a rejected table: the check that failed evaluates some
// three-element expression at (a, b, c).
struct violation {
  int a = -1;
  int b = -1;
  int c = -1;
};

class error : public std::runtime_error {
public:
  error(errc code, std::string message)
      : std::runtime_error(std::move(message)), code_(code) {}
  error(errc code, std::string message, violation w)
      : std::runtime_error(std::move(message)), code_(code), witness_(w) {}

  errc code() const noexcept { return code_; }
  const std::optional<violation>& witness() const noexcept { return witness_; }

private:
  errc code_;
  std::optional<violation> witness_;
};

const char* errc_name(errc code);

}  // namespace skewbrace
