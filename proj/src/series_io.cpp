#include "mirrorcert/series_io.hpp"

namespace mirrorcert {

nlohmann::ordered_json to_json(const RationalSeries& s)
{
    nlohmann::ordered_json j;
    const std::size_t v = s.valuation();
    j["valuation"] = v;
    j["order"] = s.order();
    auto coeffs = nlohmann::ordered_json::array();
    for (std::size_t i = v; i < s.order(); ++i) coeffs.push_back(to_string(s[i]));
    j["coefficients"] = std::move(coeffs);
    return j;
}

RationalSeries series_from_json(const nlohmann::json& j)
{
    try {
        const auto v = j.at("valuation").get<std::size_t>();
        const auto n = j.at("order").get<std::size_t>();
        const auto& coeffs = j.at("coefficients");
        if (v > n || coeffs.size() != n - v)
            throw ParseError("series_core.from_json", "coefficient count does not match order - valuation");
        std::vector<Rational> c(n);
        for (std::size_t i = 0; i < coeffs.size(); ++i) c[v + i] = parse_rational(coeffs[i].get<std::string>());
        return RationalSeries(std::move(c), n);
    } catch (const nlohmann::json::exception& e) {
        throw ParseError("series_core.from_json", e.what());
    }
}

Integer integer_from_json(const nlohmann::json& j, const std::string& what)
{
    constexpr std::int64_t limit = std::int64_t{1} << 53;
    if (j.is_number_integer()) {
        const auto x = j.get<std::int64_t>();
        if (j.is_number_unsigned() && j.get<std::uint64_t>() >= static_cast<std::uint64_t>(limit))
            throw ParseError("series_core.integer_from_json", what + ": integers >= 2^53 must be strings");
        if (x >= limit || x <= -limit)
            throw ParseError("series_core.integer_from_json", what + ": integers >= 2^53 must be strings");
        return Integer(std::to_string(x));
    }
    if (j.is_string()) {
        const Rational r = parse_rational(j.get<std::string>());
        if (r.get_den() != 1) throw ParseError("series_core.integer_from_json", what + ": not an integer");
        return r.get_num();
    }
    throw ParseError("series_core.integer_from_json", what + ": expected integer or decimal string");
}

} // namespace mirrorcert
