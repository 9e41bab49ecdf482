#include "mirrorcert/yukawa.hpp"

namespace mirrorcert {

RationalSeries yukawa_t(const PFOperator& op, const Rational& n0, std::size_t order)
{
    if (op.rank != 4)
        throw NotRankFour("yukawa_instanton.yukawa_t",
                          "operator has rank " + std::to_string(op.rank) + ", need 4");
    const RationalSeries rhs =
        scale(divide(op.coefficient_series(3, order), op.coefficient_series(4, order)), Rational(-1, 2));
    if (rhs.order() > 0 && rhs[0] != 0)
        throw NonIntegrableRHS("yukawa_instanton.yukawa_t",
                               "-a_3/(2 a_4) has nonzero constant term; operator is not self-dual in this gauge");
    return scale(exp_series(delta_integrate(rhs)), n0);
}

RationalSeries yukawa_q(const RationalSeries& W_t, const RationalSeries& y0, const MirrorMap& mm,
                        std::size_t order)
{
    const RationalSeries& t_of_q = mm.t_of_q;
    const RationalSeries coupling = divide(W_t, mul(y0, y0));
    // (q / t(q)) * dt/dq
    const RationalSeries jacobian = mul(invert(t_of_q.shifted_down(1)), derivative(t_of_q));
    const RationalSeries Y = mul(compose(coupling, t_of_q), pow(jacobian, 3));
    return Y.truncated(order);
}

RationalSeries lambert_expand(std::span<const Rational> n, std::size_t order)
{
    std::vector<Rational> c(order);
    if (order == 0) return RationalSeries(std::move(c), 0);
    if (!n.empty()) c[0] = n[0];
    for (std::size_t d = 1; d < n.size(); ++d) {
        if (n[d] == 0) continue;
        const Rational weight = n[d] * Rational(static_cast<unsigned long>(d * d * d));
        for (std::size_t m = d; m < order; m += d) c[m] += weight;
    }
    return RationalSeries(std::move(c), order);
}

int moebius(unsigned long n)
{
    if (n == 0) return 0;
    int sign = 1;
    for (unsigned long p = 2; p * p <= n; ++p) {
        if (n % p != 0) continue;
        n /= p;
        if (n % p == 0) return 0;
        sign = -sign;
    }
    if (n > 1) sign = -sign;
    return sign;
}

// n_m m^3 = sum_{d | m} mu(m/d) c_d.
InstantonSeries instanton_extract(const RationalSeries& Y, std::size_t D_max)
{
    if (Y.order() <= D_max)
        throw InsufficientOrder("yukawa_instanton.instanton_extract",
                                "need Y to order > " + std::to_string(D_max) + ", have " +
                                    std::to_string(Y.order()));
    InstantonSeries out;
    out.source_order = Y.order();
    out.n.resize(D_max + 1);
    if (Y.order() > 0) out.n[0] = Y[0];
    for (std::size_t m = 1; m <= D_max; ++m) {
        Rational s;
        for (std::size_t d = 1; d <= m; ++d)
            if (m % d == 0) {
                const int mu = moebius(m / d);
                if (mu != 0 && Y[d] != 0) s += mu * Y[d];
            }
        out.n[m] = s / Rational(static_cast<unsigned long>(m * m * m));
    }
    return out;
}

} // namespace mirrorcert
