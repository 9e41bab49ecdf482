#pragma once

#include "mirrorcert/series.hpp"

#include <random>

namespace testutil {

using mirrorcert::Integer;
using mirrorcert::Rational;
using mirrorcert::RationalSeries;

inline Rational Q(const char* s)
{
    return mirrorcert::parse_rational(s);
}

inline Rational Q(int n, int d = 1)
{
    return mirrorcert::make_rational(Integer(long(n)), Integer(long(d)));
}

// Integer-coefficient series, e.g. S({1, 120, 113400}, 3).
inline RationalSeries S(std::initializer_list<long> c, std::size_t order)
{
    std::vector<Rational> v;
    for (long x : c) v.emplace_back(x);
    return RationalSeries(std::move(v), order);
}

inline RationalSeries S(std::vector<Rational> c, std::size_t order)
{
    return RationalSeries(std::move(c), order);
}

struct Gen {
    std::mt19937_64 rng;

    explicit Gen(std::uint64_t seed) : rng(seed) {}

    long uniform(long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(rng); }

    Rational rational(long max_num = 20, long max_den = 9)
    {
        return mirrorcert::make_rational(Integer(uniform(-max_num, max_num)), Integer(uniform(1, max_den)));
    }

    Rational integer(long max = 50) { return Rational(uniform(-max, max)); }

    RationalSeries series(std::size_t order, std::size_t valuation = 0)
    {
        std::vector<Rational> c(order);
        for (std::size_t i = valuation; i < order; ++i) c[i] = rational();
        return RationalSeries(std::move(c), order);
    }

    RationalSeries integral_series(std::size_t order, std::size_t valuation = 0, long max = 50)
    {
        std::vector<Rational> c(order);
        for (std::size_t i = valuation; i < order; ++i) c[i] = integer(max);
        return RationalSeries(std::move(c), order);
    }

    // Series with prescribed nonzero coefficient at `valuation`.
    RationalSeries series_with_lead(std::size_t order, std::size_t valuation, Rational lead)
    {
        RationalSeries s = series(order, valuation);
        std::vector<Rational> c(s.coefficients().begin(), s.coefficients().end());
        c[valuation] = std::move(lead);
        return RationalSeries(std::move(c), order);
    }

    Rational nonzero_rational()
    {
        Rational r;
        do r = rational(); while (r == 0);
        return r;
    }
};

} // namespace testutil
