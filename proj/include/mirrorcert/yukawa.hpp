#pragma once

#include "mirrorcert/picard_fuchs.hpp"

#include <span>

namespace mirrorcert {

struct YukawaData {
    RationalSeries W_t;
    RationalSeries Y_q;
    Rational n0;
};

// Solution of delta log W = -a_3 / (2 a_4) with W(0) = n0, for rank-4
// operators. Throws NotRankFour, NonIntegrableRHS.
RationalSeries yukawa_t(const PFOperator& op, const Rational& n0, std::size_t order);

// Y(q) = [W / y0^2](t(q)) * ((q / t(q)) dt/dq)^3, truncated at `order`.
RationalSeries yukawa_q(const RationalSeries& W_t, const RationalSeries& y0, const MirrorMap& mm,
                        std::size_t order);

// n0 + sum_{d>=1} n_d d^3 q^d / (1 - q^d).
RationalSeries lambert_expand(std::span<const Rational> n, std::size_t order);

struct InstantonSeries {
    std::vector<Rational> n; // n_0 .. n_{D_max}
    std::size_t source_order = 0;
};

// Inverts lambert_expand by Moebius inversion. Throws InsufficientOrder
// unless Y.order() > D_max.
InstantonSeries instanton_extract(const RationalSeries& Y, std::size_t D_max);

int moebius(unsigned long n);

} // namespace mirrorcert
