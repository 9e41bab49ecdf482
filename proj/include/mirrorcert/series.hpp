#pragma once

#include "mirrorcert/errors.hpp"
#include "mirrorcert/rational.hpp"

#include <algorithm>
#include <cstddef>
#include <initializer_list>
#include <span>
#include <utility>
#include <vector>

namespace mirrorcert {

// Truncated power series c_0 + c_1 t + ... + c_{order-1} t^{order-1} + O(t^order).
//
// `order` is the guaranteed precision: every stored coefficient is exact and
// nothing at or beyond `order` is known. Coefficients are stored densely from
// index 0; the valuation is the first nonzero index (== order for a series
// that vanishes to its full precision). Values are immutable once built.
template <typename Scalar>
class Series {
public:
    Series() = default;

    explicit Series(std::size_t order) : coeffs_(order) {}

    // Missing trailing coefficients up to `order` are zero; extra ones are
    // dropped.
    Series(std::vector<Scalar> coeffs, std::size_t order) : coeffs_(std::move(coeffs))
    {
        coeffs_.resize(order);
    }

    Series(std::initializer_list<Scalar> coeffs, std::size_t order)
        : Series(std::vector<Scalar>(coeffs), order)
    {
    }

    static Series constant(Scalar c, std::size_t order)
    {
        return monomial(std::move(c), 0, order);
    }

    // c * t^exponent + O(t^order).
    static Series monomial(Scalar c, std::size_t exponent, std::size_t order)
    {
        Series s(order);
        if (exponent < order) s.coeffs_[exponent] = std::move(c);
        return s;
    }

    std::size_t order() const noexcept { return coeffs_.size(); }

    std::size_t valuation() const noexcept
    {
        for (std::size_t i = 0; i < coeffs_.size(); ++i)
            if (coeffs_[i] != 0) return i;
        return coeffs_.size();
    }

    bool is_zero() const noexcept { return valuation() == order(); }

    // Requires i < order().
    const Scalar& operator[](std::size_t i) const { return coeffs_[i]; }

    std::span<const Scalar> coefficients() const noexcept { return coeffs_; }

    Series truncated(std::size_t order) const
    {
        return Series(std::vector<Scalar>(coeffs_.begin(),
                                          coeffs_.begin() + std::min(order, this->order())),
                      std::min(order, this->order()));
    }

    // Multiply by t^k; precision grows by k.
    Series shifted_up(std::size_t k) const
    {
        std::vector<Scalar> c(k);
        c.insert(c.end(), coeffs_.begin(), coeffs_.end());
        return Series(std::move(c), order() + k);
    }

    // Divide by t^k; requires valuation() >= k.
    Series shifted_down(std::size_t k) const
    {
        if (valuation() < k)
            throw Error("series_core.shift", "cannot divide by t^" + std::to_string(k) +
                                                 " a series of valuation " +
                                                 std::to_string(valuation()));
        return Series(std::vector<Scalar>(coeffs_.begin() + k, coeffs_.end()), order() - k);
    }

    friend bool operator==(const Series&, const Series&) = default;

private:
    std::vector<Scalar> coeffs_;
};

using RationalSeries = Series<Rational>;
using IntegerSeries = Series<Integer>;

namespace detail {

// Truncated product of raw coefficient vectors, n output coefficients.
std::vector<Rational> convolve(std::span<const Rational> a, std::span<const Rational> b,
                               std::size_t n);
std::vector<Integer> convolve(std::span<const Integer> a, std::span<const Integer> b,
                              std::size_t n);

} // namespace detail

template <typename Scalar>
Series<Scalar> add(const Series<Scalar>& a, const Series<Scalar>& b)
{
    const std::size_t n = std::min(a.order(), b.order());
    std::vector<Scalar> c(n);
    for (std::size_t i = 0; i < n; ++i) c[i] = a[i] + b[i];
    return Series<Scalar>(std::move(c), n);
}

template <typename Scalar>
Series<Scalar> sub(const Series<Scalar>& a, const Series<Scalar>& b)
{
    const std::size_t n = std::min(a.order(), b.order());
    std::vector<Scalar> c(n);
    for (std::size_t i = 0; i < n; ++i) c[i] = a[i] - b[i];
    return Series<Scalar>(std::move(c), n);
}

template <typename Scalar>
Series<Scalar> scale(const Series<Scalar>& a, const Scalar& k)
{
    std::vector<Scalar> c(a.order());
    for (std::size_t i = 0; i < a.order(); ++i) c[i] = a[i] * k;
    return Series<Scalar>(std::move(c), a.order());
}

// Guaranteed order of a product: an unknown tail O(t^order_a) of `a` is
// multiplied by something of valuation val(b), and symmetrically.
template <typename Scalar>
std::size_t product_order(const Series<Scalar>& a, const Series<Scalar>& b)
{
    return std::min(a.order() + b.valuation(), b.order() + a.valuation());
}

template <typename Scalar>
Series<Scalar> mul(const Series<Scalar>& a, const Series<Scalar>& b)
{
    const std::size_t n = product_order(a, b);
    return Series<Scalar>(detail::convolve(a.coefficients(), b.coefficients(), n), n);
}

template <typename Scalar>
Series<Scalar> pow(const Series<Scalar>& a, unsigned e)
{
    Series<Scalar> result = Series<Scalar>::constant(Scalar(1), a.order());
    for (unsigned i = 0; i < e; ++i) result = mul(result, a);
    return result;
}

// delta = t d/dt: multiplies the t^m coefficient by m.
template <typename Scalar>
Series<Scalar> delta(const Series<Scalar>& a)
{
    std::vector<Scalar> c(a.order());
    for (std::size_t i = 1; i < a.order(); ++i) c[i] = a[i] * Scalar(static_cast<unsigned long>(i));
    return Series<Scalar>(std::move(c), a.order());
}

// Ordinary d/dt; precision drops by one.
template <typename Scalar>
Series<Scalar> derivative(const Series<Scalar>& a)
{
    if (a.order() == 0) return a;
    std::vector<Scalar> c(a.order() - 1);
    for (std::size_t i = 1; i < a.order(); ++i)
        c[i - 1] = a[i] * Scalar(static_cast<unsigned long>(i));
    return Series<Scalar>(std::move(c), a.order() - 1);
}

// f(t^k). Known modulo t^{k(order-1)+1}, further capped at `cap`.
template <typename Scalar>
Series<Scalar> substitute_power(const Series<Scalar>& f, std::size_t k, std::size_t cap)
{
    if (k == 0) throw Error("series_core.substitute_power", "exponent must be positive");
    const std::size_t natural = f.order() == 0 ? 0 : k * (f.order() - 1) + 1;
    const std::size_t n = std::min(natural, cap);
    std::vector<Scalar> c(n);
    for (std::size_t i = 0; i * k < n; ++i) c[i * k] = f[i];
    return Series<Scalar>(std::move(c), n);
}

// outer(inner(t)). inner must have positive valuation. An O(t^order_outer)
// tail becomes O(t^{order_outer * val(inner)}); an error of order_inner in
// inner is damped by outer'(inner), of valuation >= (val(outer)-1)val(inner).
template <typename Scalar>
Series<Scalar> compose(const Series<Scalar>& outer, const Series<Scalar>& inner)
{
    const std::size_t vi = inner.valuation();
    if (vi == 0)
        throw CompositionValuation("series_core.compose",
                                   "inner series has nonzero constant term");
    const std::size_t vo = outer.valuation();
    const std::size_t damp = vo >= 1 ? (vo - 1) * vi : 0;
    const std::size_t n = std::min(outer.order() * vi, inner.order() + damp);

    // Horner over the outer coefficients that can reach below t^n.
    const std::size_t top = std::min(outer.order(), (n + vi - 1) / vi);
    std::vector<Scalar> acc(n);
    const auto in = inner.coefficients().first(std::min(inner.order(), n));
    for (std::size_t k = top; k-- > 0;) {
        acc = detail::convolve(std::span<const Scalar>(acc), in, n);
        if (n > 0) acc[0] += outer[k];
    }
    return Series<Scalar>(std::move(acc), n);
}

template <typename Scalar>
Series<Scalar> operator+(const Series<Scalar>& a, const Series<Scalar>& b) { return add(a, b); }
template <typename Scalar>
Series<Scalar> operator-(const Series<Scalar>& a, const Series<Scalar>& b) { return sub(a, b); }
template <typename Scalar>
Series<Scalar> operator-(const Series<Scalar>& a) { return scale(a, Scalar(-1)); }
template <typename Scalar>
Series<Scalar> operator*(const Series<Scalar>& a, const Series<Scalar>& b) { return mul(a, b); }
template <typename Scalar>
Series<Scalar> operator*(const Series<Scalar>& a, const Scalar& k) { return scale(a, k); }
template <typename Scalar>
Series<Scalar> operator*(const Scalar& k, const Series<Scalar>& a) { return scale(a, k); }

// Operations below need division and exist over the rationals only.

// Multiplicative inverse of a unit series (constant term nonzero).
RationalSeries invert(const RationalSeries& a);

// a / b for b a unit.
RationalSeries divide(const RationalSeries& a, const RationalSeries& b);

// exp(f) for val(f) >= 1.
RationalSeries exp_series(const RationalSeries& f);

// log(u) for u(0) == 1.
RationalSeries log_series(const RationalSeries& u);

// Compositional inverse of f with val(f) == 1 (Lagrange inversion).
RationalSeries reversion(const RationalSeries& f);

// Antiderivative for delta with zero constant: divides the t^m coefficient by
// m. The constant term of f must vanish.
RationalSeries delta_integrate(const RationalSeries& f);

} // namespace mirrorcert
