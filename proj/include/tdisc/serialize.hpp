#pragma once

#include "tdisc/design.hpp"
#include "tdisc/uniform_approx.hpp"

#include <string>
#include <string_view>

namespace tdisc {

/// {"points":[...],"weights":[...]}; numbers round-trip bit-exactly.
[[nodiscard]] std::string design_to_json(const Design& d);

/// Reads "points" and "weights" from a JSON object; other keys are ignored.
/// Throws ArgumentError on malformed input or an invalid design.
[[nodiscard]] Design design_from_json(std::string_view text);

/// Header "point,weight" then one row per support point, %.17g, LF.
[[nodiscard]] std::string design_to_csv(const Design& d);

/// Two-column CSV; a non-numeric first line is treated as a header.
[[nodiscard]] Design design_from_csv(std::string_view text);

[[nodiscard]] std::string approx_to_json(const BestApproxResult& r);

}  // namespace tdisc
