#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace sofic {

enum class ErrorKind {
  family_mismatch,
  unsupported_subgroup,
  parse_error,
  invalid_group_table,
  equality_violation,
  invalid_rule,
  size_cap_exceeded,
  asymmetric_connection,
  identity_in_connection,
  pair_invariant_violation,
  invariance_violation,
  relation_violation,
  size_mismatch,
  missing_phi_entry,
  window_failure,
  malformed_certificate,
  folner_defect_too_large,
  eppa_cap_exhausted,
  invalid_partial,
  automorphism_cap_exceeded,
  s_too_small,
  gh_closeness_violated,
  support_escapes_window,
  unsupported_family,
  malformed_input,
};

std::string_view to_string(ErrorKind kind);

// Every failure raised by the library carries one of the kinds above so that
// callers (and the CLI exit-code mapping) can branch without parsing text.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace sofic
