#include "mirrorcert/series.hpp"

namespace mirrorcert {

namespace detail {

namespace {

// Scale the first n coefficients to integers over their common denominator.
Integer clear_denominators(std::span<const Rational> a, std::size_t n, std::vector<Integer>& out)
{
    n = std::min(n, a.size());
    Integer den = 1;
    for (std::size_t i = 0; i < n; ++i)
        if (a[i].get_den() != 1) mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), a[i].get_den_mpz_t());
    out.resize(n);
    for (std::size_t i = 0; i < n; ++i) {
        if (a[i] == 0) {
            out[i] = 0;
            continue;
        }
        Integer q;
        mpz_divexact(q.get_mpz_t(), den.get_mpz_t(), a[i].get_den_mpz_t());
        out[i] = a[i].get_num() * q;
    }
    return den;
}

} // namespace

std::vector<Integer> convolve(std::span<const Integer> a, std::span<const Integer> b,
                              std::size_t n)
{
    std::vector<Integer> c(n);
    const std::size_t na = std::min(a.size(), n);
    for (std::size_t i = 0; i < na; ++i) {
        if (a[i] == 0) continue;
        const std::size_t nb = std::min(b.size(), n - i);
        for (std::size_t j = 0; j < nb; ++j) {
            if (b[j] == 0) continue;
            mpz_addmul(c[i + j].get_mpz_t(), a[i].get_mpz_t(), b[j].get_mpz_t());
        }
    }
    return c;
}

// Integer convolution over common denominators, one canonicalization per
// output coefficient.
std::vector<Rational> convolve(std::span<const Rational> a, std::span<const Rational> b,
                               std::size_t n)
{
    std::vector<Integer> ia, ib;
    const Integer da = clear_denominators(a, n, ia);
    const Integer db = clear_denominators(b, n, ib);
    const std::vector<Integer> ic = convolve(std::span<const Integer>(ia),
                                             std::span<const Integer>(ib), n);
    const Integer den = da * db;
    std::vector<Rational> c(n);
    for (std::size_t k = 0; k < n; ++k) {
        if (ic[k] == 0) continue;
        c[k] = Rational(ic[k], den);
        c[k].canonicalize();
    }
    return c;
}

} // namespace detail

RationalSeries invert(const RationalSeries& a)
{
    if (a.order() == 0) return a;
    if (a[0] == 0)
        throw ZeroLeadingCoefficient("series_core.invert", "constant term is zero");
    const std::size_t n = a.order();
    const Rational inv0 = 1 / a[0];
    std::vector<Rational> b(n);
    b[0] = inv0;
    for (std::size_t k = 1; k < n; ++k) {
        Rational s;
        for (std::size_t i = 1; i <= k; ++i)
            if (a[i] != 0 && b[k - i] != 0) s += a[i] * b[k - i];
        b[k] = -s * inv0;
    }
    return RationalSeries(std::move(b), n);
}

RationalSeries divide(const RationalSeries& a, const RationalSeries& b)
{
    return mul(a, invert(b));
}

// E = exp(f) satisfies delta E = (delta f) E, i.e. m e_m = sum_k k f_k e_{m-k}.
RationalSeries exp_series(const RationalSeries& f)
{
    const std::size_t n = f.order();
    if (n == 0) return f;
    if (f[0] != 0)
        throw ExpConstantTerm("series_core.exp_series", "argument has nonzero constant term");
    std::vector<Rational> e(n);
    e[0] = 1;
    for (std::size_t m = 1; m < n; ++m) {
        Rational s;
        for (std::size_t k = 1; k <= m; ++k)
            if (f[k] != 0 && e[m - k] != 0) s += Rational(static_cast<unsigned long>(k)) * f[k] * e[m - k];
        e[m] = s / Rational(static_cast<unsigned long>(m));
    }
    return RationalSeries(std::move(e), n);
}

// l = log u satisfies delta u = u delta l, i.e.
// m l_m = m u_m - sum_{k=1}^{m-1} k l_k u_{m-k}.
RationalSeries log_series(const RationalSeries& u)
{
    const std::size_t n = u.order();
    if (n == 0) return u;
    if (u[0] != 1) throw LogConstantTerm("series_core.log_series", "constant term is not 1");
    std::vector<Rational> l(n);
    for (std::size_t m = 1; m < n; ++m) {
        Rational s = Rational(static_cast<unsigned long>(m)) * u[m];
        for (std::size_t k = 1; k < m; ++k)
            if (l[k] != 0 && u[m - k] != 0) s -= Rational(static_cast<unsigned long>(k)) * l[k] * u[m - k];
        l[m] = s / Rational(static_cast<unsigned long>(m));
    }
    return RationalSeries(std::move(l), n);
}

// [t^m] g = (1/m) [w^{m-1}] (w / f(w))^m.
RationalSeries reversion(const RationalSeries& f)
{
    if (f.valuation() != 1)
        throw ReversionValuation("series_core.reversion",
                                 "valuation is " + std::to_string(f.valuation()) + ", need 1");
    const std::size_t n = f.order();
    const RationalSeries h = invert(f.shifted_down(1));
    std::vector<Rational> g(n);
    RationalSeries power = RationalSeries::constant(Rational(1), h.order());
    for (std::size_t m = 1; m < n; ++m) {
        power = mul(power, h);
        g[m] = power[m - 1] / Rational(static_cast<unsigned long>(m));
    }
    return RationalSeries(std::move(g), n);
}

RationalSeries delta_integrate(const RationalSeries& f)
{
    if (f.order() > 0 && f[0] != 0)
        throw NonIntegrableRHS("series_core.delta_integrate", "constant term is nonzero");
    std::vector<Rational> c(f.order());
    for (std::size_t m = 1; m < f.order(); ++m) c[m] = f[m] / Rational(static_cast<unsigned long>(m));
    return RationalSeries(std::move(c), f.order());
}

} // namespace mirrorcert
