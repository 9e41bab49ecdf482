#include "mirrorcert/log_series.hpp"

#include <limits>

namespace mirrorcert {

namespace {

void trim(std::vector<RationalSeries>& parts)
{
    while (parts.size() > 1 && parts.back().is_zero()) parts.pop_back();
}

} // namespace

LogSeries::LogSeries(RationalSeries f0) : parts_{std::move(f0)} {}

LogSeries::LogSeries(std::vector<RationalSeries> parts) : parts_(std::move(parts))
{
    trim(parts_);
}

LogSeries LogSeries::log_power(RationalSeries f, std::size_t power)
{
    std::vector<RationalSeries> parts(power + 1, RationalSeries(f.order()));
    parts[power] = std::move(f);
    return LogSeries(std::move(parts));
}

std::size_t LogSeries::order() const noexcept
{
    if (parts_.empty()) return 0;
    std::size_t n = std::numeric_limits<std::size_t>::max();
    for (const auto& p : parts_) n = std::min(n, p.order());
    return n;
}

bool LogSeries::is_zero() const noexcept
{
    for (const auto& p : parts_)
        if (!p.is_zero()) return false;
    return true;
}

RationalSeries LogSeries::part(std::size_t j) const
{
    if (j < parts_.size()) return parts_[j];
    return RationalSeries(order());
}

LogSeries add(const LogSeries& a, const LogSeries& b)
{
    const std::size_t d = std::max(a.parts().size(), b.parts().size());
    std::vector<RationalSeries> parts;
    parts.reserve(d);
    for (std::size_t j = 0; j < d; ++j) parts.push_back(add(a.part(j), b.part(j)));
    return LogSeries(std::move(parts));
}

LogSeries scale(const LogSeries& a, const Rational& k)
{
    std::vector<RationalSeries> parts;
    for (const auto& p : a.parts()) parts.push_back(scale(p, k));
    return LogSeries(std::move(parts));
}

LogSeries mul(const RationalSeries& f, const LogSeries& a)
{
    std::vector<RationalSeries> parts;
    for (const auto& p : a.parts()) parts.push_back(mul(f, p));
    return LogSeries(std::move(parts));
}

// delta(f_j L^j) = (delta f_j) L^j + j f_j L^{j-1}.
LogSeries delta_log(const LogSeries& a)
{
    const auto& in = a.parts();
    std::vector<RationalSeries> parts;
    for (std::size_t j = 0; j < in.size(); ++j) {
        RationalSeries p = delta(in[j]);
        if (j + 1 < in.size())
            p = add(p, scale(in[j + 1], Rational(static_cast<unsigned long>(j + 1))));
        parts.push_back(std::move(p));
    }
    return LogSeries(std::move(parts));
}

LogSeries d_dlog(const LogSeries& a)
{
    const auto& in = a.parts();
    if (in.size() <= 1) return LogSeries(RationalSeries(a.order()));
    std::vector<RationalSeries> parts;
    for (std::size_t j = 1; j < in.size(); ++j)
        parts.push_back(scale(in[j], Rational(static_cast<unsigned long>(j))));
    return LogSeries(std::move(parts));
}

} // namespace mirrorcert
