#include "sofic/error.hpp"

#include <charconv>

#include "sofic/labels.hpp"
#include "sofic/rational.hpp"

namespace sofic {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::family_mismatch: return "family-mismatch";
    case ErrorKind::unsupported_subgroup: return "unsupported-subgroup-kind";
    case ErrorKind::parse_error: return "parse-error";
    case ErrorKind::invalid_group_table: return "invalid-group-table";
    case ErrorKind::equality_violation: return "equality-violation";
    case ErrorKind::invalid_rule: return "invalid-rule";
    case ErrorKind::size_cap_exceeded: return "size-cap-exceeded";
    case ErrorKind::asymmetric_connection: return "asymmetric-conn";
    case ErrorKind::identity_in_connection: return "identity-in-conn";
    case ErrorKind::pair_invariant_violation: return "pair-invariant-violation";
    case ErrorKind::invariance_violation: return "invariance-violation";
    case ErrorKind::relation_violation: return "relation-violation";
    case ErrorKind::size_mismatch: return "size-mismatch";
    case ErrorKind::missing_phi_entry: return "missing-phi-entry";
    case ErrorKind::window_failure: return "window-materialization-failure";
    case ErrorKind::malformed_certificate: return "malformed-certificate";
    case ErrorKind::folner_defect_too_large: return "folner-defect-too-large";
    case ErrorKind::eppa_cap_exhausted: return "eppa-cap-exhausted";
    case ErrorKind::invalid_partial: return "invalid-partial";
    case ErrorKind::automorphism_cap_exceeded: return "automorphism-cap-exceeded";
    case ErrorKind::s_too_small: return "S-too-small";
    case ErrorKind::gh_closeness_violated: return "gh-closeness-violated";
    case ErrorKind::support_escapes_window: return "support-escapes-window";
    case ErrorKind::unsupported_family: return "unsupported-family";
    case ErrorKind::malformed_input: return "malformed-input";
  }
  return "unknown";
}

std::string to_string(const Rational& r) {
  return std::to_string(r.numerator()) + "/" + std::to_string(r.denominator());
}

namespace {

std::int64_t parse_int(std::string_view text, std::string_view whole) {
  std::int64_t value = 0;
  if (!text.empty() && text.front() == '+') text.remove_prefix(1);
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (text.empty() || ec != std::errc() || ptr != text.data() + text.size())
    throw Error(ErrorKind::parse_error, "not a rational: '" + std::string(whole) + "'");
  return value;
}

}  // namespace

Rational parse_rational(std::string_view text) {
  auto slash = text.find('/');
  if (slash == std::string_view::npos) return Rational(parse_int(text, text));
  std::int64_t num = parse_int(text.substr(0, slash), text);
  std::int64_t den = parse_int(text.substr(slash + 1), text);
  if (den == 0) throw Error(ErrorKind::parse_error, "zero denominator in '" + std::string(text) + "'");
  return Rational(num, den);
}

std::string join_tuple(const std::vector<std::string>& parts) {
  std::string out = "<";
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (i) out += '|';
    out += parts[i];
  }
  out += '>';
  return out;
}

std::vector<std::string> split_tuple(std::string_view text) {
  if (text.size() < 2 || text.front() != '<' || text.back() != '>')
    throw Error(ErrorKind::parse_error, "expected tuple '<...>', got '" + std::string(text) + "'");
  std::vector<std::string> parts;
  std::string current;
  int depth = 0;
  for (std::size_t i = 1; i + 1 < text.size(); ++i) {
    char c = text[i];
    if (c == '<') ++depth;
    if (c == '>') --depth;
    if (depth < 0) throw Error(ErrorKind::parse_error, "unbalanced tuple '" + std::string(text) + "'");
    if (c == '|' && depth == 0) {
      parts.push_back(std::move(current));
      current.clear();
    } else {
      current += c;
    }
  }
  if (depth != 0) throw Error(ErrorKind::parse_error, "unbalanced tuple '" + std::string(text) + "'");
  parts.push_back(std::move(current));
  return parts;
}

std::string tag(std::size_t side, std::string_view label) {
  return std::to_string(side) + ":" + std::string(label);
}

std::pair<std::size_t, std::string> untag(std::string_view label) {
  auto colon = label.find(':');
  if (colon == std::string_view::npos || colon == 0)
    throw Error(ErrorKind::parse_error, "expected tagged vertex 'i:v', got '" + std::string(label) + "'");
  auto side = parse_int(label.substr(0, colon), label);
  if (side < 0) throw Error(ErrorKind::parse_error, "negative tag in '" + std::string(label) + "'");
  return {static_cast<std::size_t>(side), std::string(label.substr(colon + 1))};
}

}  // namespace sofic
