#pragma once

// Text format for specs:
//
//   rank1-spec v1
//   stage 3 [1,0]
//   tail periodic { stage 3 [1,0] ; stage 3 [0,1] }
//
// '#' starts a comment. The tail line is one of `tail truncated`,
// `tail periodic { ... }` or `tail arithmetic stage r [...] inc [...]`.

#include <string>
#include <string_view>

#include "rank1/spec.hpp"

namespace rank1 {

/// Throws Error(ParseError) with "source:line:column: message".
RankOneSpec parse_spec(std::string_view text, std::string_view source = "<input>");

/// Canonical rendering; parse_spec(write_spec(s)) == s.
std::string write_spec(const RankOneSpec& spec);

}  // namespace rank1
