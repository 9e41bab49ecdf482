#include "mirrorcert/padic.hpp"

namespace mirrorcert::padic {

std::string Valuation::to_string() const
{
    return value ? std::to_string(*value) : std::string("inf");
}

void require_prime(long p, const char* where)
{
    if (!is_prime(p)) throw NotPrime(where, std::to_string(p) + " is not prime");
}

Valuation valuation(const Rational& x, long p)
{
    require_prime(p, "padic_core.valuation");
    if (x == 0) return {p, std::nullopt};
    const Integer prime(p);
    return {p, multiplicity(x.get_num(), prime) - multiplicity(x.get_den(), prime)};
}

bool is_integral(const Rational& x, long p)
{
    return x == 0 || !mpz_divisible_ui_p(x.get_den_mpz_t(), static_cast<unsigned long>(p));
}

RationalSeries frobenius_substitute(const RationalSeries& f, long p, std::size_t cap)
{
    require_prime(p, "padic_core.frobenius_substitute");
    return substitute_power(f, static_cast<std::size_t>(p), cap);
}

Integer PadicSeries::modulus() const
{
    Integer m;
    mpz_ui_pow_ui(m.get_mpz_t(), static_cast<unsigned long>(prime), precision);
    return m;
}

namespace {

Integer modulus_of(long p, unsigned k)
{
    Integer m;
    mpz_ui_pow_ui(m.get_mpz_t(), static_cast<unsigned long>(p), k);
    return m;
}

IntegerSeries reduce_all(const IntegerSeries& s, const Integer& m)
{
    std::vector<Integer> c(s.order());
    for (std::size_t i = 0; i < s.order(); ++i) mpz_mod(c[i].get_mpz_t(), s[i].get_mpz_t(), m.get_mpz_t());
    return IntegerSeries(std::move(c), s.order());
}

void require_same_prime(const PadicSeries& a, const PadicSeries& b)
{
    if (a.prime != b.prime) throw Error("padic_core.arithmetic", "mixed primes");
}

template <typename Op>
PadicSeries combine(const PadicSeries& a, const PadicSeries& b, Op op)
{
    require_same_prime(a, b);
    const unsigned k = std::min(a.precision, b.precision);
    return {a.prime, k, reduce_all(op(a.residues, b.residues), modulus_of(a.prime, k)),
            a.exact_lift && b.exact_lift};
}

} // namespace

Integer residue(const Rational& x, long p, unsigned k)
{
    if (!is_integral(x, p)) throw NegativeValuation("padic_core.residue", 0, *valuation(x, p).value);
    const Integer m = modulus_of(p, k);
    Integer inv;
    mpz_invert(inv.get_mpz_t(), x.get_den_mpz_t(), m.get_mpz_t());
    Integer r = x.get_num() * inv;
    mpz_mod(r.get_mpz_t(), r.get_mpz_t(), m.get_mpz_t());
    return r;
}

PadicSeries reduce_series(const RationalSeries& f, long p, unsigned k)
{
    require_prime(p, "padic_core.reduce_series");
    if (k == 0) throw Error("padic_core.reduce_series", "precision exponent must be positive");
    std::vector<Integer> c(f.order());
    for (std::size_t i = 0; i < f.order(); ++i) {
        if (!is_integral(f[i], p))
            throw NegativeValuation("padic_core.reduce_series", i, *valuation(f[i], p).value);
        c[i] = residue(f[i], p, k);
    }
    return {p, k, IntegerSeries(std::move(c), f.order()), true};
}

PadicSeries add(const PadicSeries& a, const PadicSeries& b)
{
    return combine(a, b, [](const IntegerSeries& x, const IntegerSeries& y) { return add(x, y); });
}

PadicSeries sub(const PadicSeries& a, const PadicSeries& b)
{
    return combine(a, b, [](const IntegerSeries& x, const IntegerSeries& y) { return sub(x, y); });
}

PadicSeries mul(const PadicSeries& a, const PadicSeries& b)
{
    return combine(a, b, [](const IntegerSeries& x, const IntegerSeries& y) { return mul(x, y); });
}

PadicSeries delta(const PadicSeries& a)
{
    return {a.prime, a.precision, reduce_all(mirrorcert::delta(a.residues), a.modulus()), a.exact_lift};
}

PadicSeries frobenius_substitute(const PadicSeries& a, std::size_t cap)
{
    return {a.prime, a.precision,
            substitute_power(a.residues, static_cast<std::size_t>(a.prime), cap), a.exact_lift};
}

} // namespace mirrorcert::padic
