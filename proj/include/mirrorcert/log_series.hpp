#pragma once

#include "mirrorcert/series.hpp"

#include <vector>

namespace mirrorcert {

// sum_j f_j(t) L^j with L the formal symbol log t.
//
// Trailing zero parts are trimmed so the last part is nonzero (exact
// log-degree); the zero element keeps a single zero part carrying its order.
class LogSeries {
public:
    LogSeries() = default;
    explicit LogSeries(RationalSeries f0);
    explicit LogSeries(std::vector<RationalSeries> parts);

    // f * L^power.
    static LogSeries log_power(RationalSeries f, std::size_t power);

    std::size_t log_degree() const noexcept { return parts_.empty() ? 0 : parts_.size() - 1; }
    std::size_t order() const noexcept;
    bool is_zero() const noexcept;

    // Coefficient of L^j; a zero series when j exceeds the log-degree.
    RationalSeries part(std::size_t j) const;
    const std::vector<RationalSeries>& parts() const noexcept { return parts_; }

    friend bool operator==(const LogSeries&, const LogSeries&) = default;

private:
    std::vector<RationalSeries> parts_;
};

LogSeries add(const LogSeries& a, const LogSeries& b);
LogSeries scale(const LogSeries& a, const Rational& k);

// Multiplication by an L-free series.
LogSeries mul(const RationalSeries& f, const LogSeries& a);

// Leibniz rule with delta L = 1.
LogSeries delta_log(const LogSeries& a);

// Formal d/dL, the action of the monodromy logarithm.
LogSeries d_dlog(const LogSeries& a);

} // namespace mirrorcert
