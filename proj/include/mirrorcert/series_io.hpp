#pragma once

#include "mirrorcert/series.hpp"

#include "json.hpp"

namespace mirrorcert {

// {"valuation": v, "order": n, "coefficients": ["num/den", ...]} listing the
// coefficients of t^v ... t^{n-1}. A zero series has valuation == order and
// no coefficients.
nlohmann::ordered_json to_json(const RationalSeries& s);
RationalSeries series_from_json(const nlohmann::json& j);

// Integer from a JSON integer (|x| < 2^53) or a decimal string.
Integer integer_from_json(const nlohmann::json& j, const std::string& what);

} // namespace mirrorcert
