#include "mirrorcert/rational.hpp"

#include "mirrorcert/errors.hpp"

#include <cctype>

namespace mirrorcert {

Rational make_rational(const Integer& num, const Integer& den)
{
    if (den == 0) throw ParseError("series_core.rational", "zero denominator");
    Rational r(num, den);
    r.canonicalize();
    return r;
}

std::string to_string(const Rational& x)
{
    return x.get_num().get_str() + "/" + x.get_den().get_str();
}

namespace {

Integer parse_integer(std::string_view s, std::string_view whole)
{
    std::size_t i = 0;
    if (!s.empty() && (s[0] == '-' || s[0] == '+')) i = 1;
    if (i == s.size()) throw ParseError("series_core.rational", "bad rational '" + std::string(whole) + "'");
    for (std::size_t j = i; j < s.size(); ++j)
        if (!std::isdigit(static_cast<unsigned char>(s[j])))
            throw ParseError("series_core.rational", "bad rational '" + std::string(whole) + "'");
    return Integer(std::string(s[0] == '+' ? s.substr(1) : s), 10);
}

} // namespace

Rational parse_rational(std::string_view text)
{
    const auto slash = text.find('/');
    if (slash == std::string_view::npos) return Rational(parse_integer(text, text));
    return make_rational(parse_integer(text.substr(0, slash), text),
                         parse_integer(text.substr(slash + 1), text));
}

long multiplicity(const Integer& n, const Integer& p)
{
    if (n == 0) return 0;
    Integer tmp;
    // mpz_remove returns the number of factors removed.
    return static_cast<long>(mpz_remove(tmp.get_mpz_t(), n.get_mpz_t(), p.get_mpz_t()));
}

bool is_prime(long n)
{
    if (n < 2) return false;
    for (long d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

std::vector<unsigned long> prime_support(Integer n)
{
    if (n < 0) n = -n;
    std::vector<unsigned long> out;
    if (n == 0) return out;
    for (unsigned long d = 2; d <= 1000000 && n > 1; ++d) {
        if (Integer(d) * d > n) break;
        if (mpz_divisible_ui_p(n.get_mpz_t(), d)) {
            out.push_back(d);
            while (mpz_divisible_ui_p(n.get_mpz_t(), d)) mpz_divexact_ui(n.get_mpz_t(), n.get_mpz_t(), d);
        }
    }
    if (n > 1) {
        if (!n.fits_ulong_p() || mpz_probab_prime_p(n.get_mpz_t(), 30) == 0)
            throw Error("series_core.prime_support", "cannot factor cofactor " + n.get_str());
        out.push_back(n.get_ui());
    }
    return out;
}

} // namespace mirrorcert
