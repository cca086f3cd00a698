#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace sofic {

// Composite labels. Tuples render as "<x|y|...>" and may nest; coproduct
// tags render as "i:v". Both are used for group elements of product
// families and for vertices of product and coproduct graphs.

std::string join_tuple(const std::vector<std::string>& parts);
/// Splits one level of "<...|...>"; throws Error(parse_error).
std::vector<std::string> split_tuple(std::string_view text);

std::string tag(std::size_t side, std::string_view label);
/// Inverse of tag(); throws Error(parse_error).
std::pair<std::size_t, std::string> untag(std::string_view label);

}  // namespace sofic
