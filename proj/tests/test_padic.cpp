#include "doctest.h"

#include "mirrorcert/padic.hpp"
#include "test_util.hpp"

using namespace mirrorcert;
using namespace testutil;

namespace {

// Naive valuation oracle: repeated division on num and den.
long naive_valuation(const Rational& x, long p)
{
    long v = 0;
    Integer n = abs(x.get_num()), d = x.get_den();
    while (n % p == 0) {
        n /= p;
        ++v;
    }
    while (d % p == 0) {
        d /= p;
        --v;
    }
    return v;
}

Rational p_rich_rational(Gen& g, long p)
{
    Integer num = g.uniform(-30, 30), den = g.uniform(1, 30);
    for (long k = g.uniform(0, 3); k > 0; --k) num *= p;
    for (long k = g.uniform(0, 3); k > 0; --k) den *= p;
    return make_rational(num, den);
}

} // namespace

TEST_CASE("valuation examples")
{
    CHECK(*padic::valuation(Q(9, 7), 3).value == 2);
    CHECK(*padic::valuation(Q(1, 5), 5).value == -1);
    CHECK(padic::valuation(Q(0), 11).is_infinite());
    CHECK(padic::valuation(Q(0), 11).to_string() == "inf");
    CHECK_THROWS_AS(padic::valuation(Q(3), 4), NotPrime);
    CHECK_THROWS_AS(padic::valuation(Q(3), 1), NotPrime);
}

TEST_CASE("property: valuation axioms")
{
    for (long p : {2L, 3L, 5L, 7L, 11L, 13L}) {
        Gen g(static_cast<std::uint64_t>(p) * 977);
        for (int i = 0; i < 1000; ++i) {
            const Rational a = p_rich_rational(g, p), b = p_rich_rational(g, p);
            const auto va = padic::valuation(a, p), vb = padic::valuation(b, p);
            if (a != 0) REQUIRE(*va.value == naive_valuation(a, p));
            const auto vab = padic::valuation(a * b, p);
            if (a == 0 || b == 0) REQUIRE(vab.is_infinite());
            else REQUIRE(*vab.value == *va.value + *vb.value);
            const auto vsum = padic::valuation(a + b, p);
            if (a != 0 && b != 0) REQUIRE(vsum.at_least(std::min(*va.value, *vb.value)));
        }
    }
}

TEST_CASE("frobenius_substitute")
{
    CHECK(padic::frobenius_substitute(S({0, 1}, 2), 5) == S({0, 0, 0, 0, 0, 1}, 6));
    CHECK(padic::frobenius_substitute(S({1, 1, 1}, 3), 2) == S({1, 0, 1, 0, 1}, 5));
    const auto geom = invert(S({1, -1}, 3));
    const auto f = padic::frobenius_substitute(geom, 3);
    CHECK(f.order() == 7);
    CHECK(f == S({1, 0, 0, 1, 0, 0, 1}, 7));
    CHECK(padic::frobenius_substitute(geom, 3, 5).order() == 5);
    CHECK_THROWS_AS(padic::frobenius_substitute(geom, 6), NotPrime);
}

TEST_CASE("property: Frobenius substitution is a ring homomorphism")
{
    Gen g(2001);
    for (int i = 0; i < 1000; ++i) {
        const long p = std::vector<long>{2, 3, 5, 7}[static_cast<std::size_t>(g.uniform(0, 3))];
        const std::size_t n = static_cast<std::size_t>(g.uniform(1, 6));
        const auto a = g.series(n), b = g.series(n);
        const auto F = [p](const RationalSeries& s) { return padic::frobenius_substitute(s, p); };
        REQUIRE(F(add(a, b)) == add(F(a), F(b)));
        const auto lhs = F(mul(a, b)), rhs = mul(F(a), F(b));
        const std::size_t m = std::min(lhs.order(), rhs.order());
        REQUIRE(lhs.truncated(m) == rhs.truncated(m));
    }
}

TEST_CASE("reduce_series")
{
    const auto r = padic::reduce_series(S({1, 7}, 2), 7, 2);
    CHECK(r.residues == IntegerSeries({Integer(1), Integer(7)}, 2));
    CHECK(r.exact_lift);
    CHECK(r.modulus() == 49);

    try {
        padic::reduce_series(S({Q(1), Q(1, 7)}, 2), 7, 2);
        FAIL("expected NegativeValuation");
    } catch (const NegativeValuation& e) {
        CHECK(e.index() == 1);
        CHECK(e.valuation() == -1);
    }

    CHECK(padic::reduce_series(S({Q(1), Q(1, 3)}, 2), 7, 1).residues == IntegerSeries({Integer(1), Integer(5)}, 2));
    CHECK(padic::residue(Q(1, 3), 7, 1) == 5);
    CHECK(padic::residue(Q(-1), 5, 2) == 24);
}

TEST_CASE("property: reduction commutes with arithmetic")
{
    Gen g(2002);
    for (int i = 0; i < 1000; ++i) {
        const long p = std::vector<long>{3, 5, 7, 11}[static_cast<std::size_t>(g.uniform(0, 3))];
        const unsigned k = static_cast<unsigned>(g.uniform(1, 6));
        const std::size_t n = static_cast<std::size_t>(g.uniform(1, 6));
        // p-integral: denominators coprime to p.
        auto integral = [&] {
            std::vector<Rational> c(n);
            for (auto& x : c) {
                Integer d;
                do d = g.uniform(1, 12); while (d % p == 0);
                x = make_rational(Integer(g.uniform(-1000, 1000)), d);
            }
            return RationalSeries(std::move(c), n);
        };
        const auto a = integral(), b = integral();
        const auto R = [&](const RationalSeries& s) { return padic::reduce_series(s, p, k); };
        REQUIRE(R(add(a, b)).residues == padic::add(R(a), R(b)).residues);
        // A coefficient vanishing mod p^k can raise the residue valuation and
        // with it the (still sound) product order; compare on the common part.
        const auto exact = R(mul(a, b)).residues;
        const auto modular = padic::mul(R(a), R(b)).residues;
        REQUIRE(modular.order() >= exact.order());
        REQUIRE(modular.truncated(exact.order()) == exact);
        REQUIRE(R(delta(a)).residues == padic::delta(R(a)).residues);
        REQUIRE(R(padic::frobenius_substitute(a, p)).residues == padic::frobenius_substitute(R(a)).residues);
    }
}

TEST_CASE("padic arithmetic keeps the smaller precision")
{
    const auto a = padic::reduce_series(S({1, 2}, 2), 5, 3);
    const auto b = padic::reduce_series(S({124, 1}, 2), 5, 2);
    const auto c = padic::add(a, b);
    CHECK(c.precision == 2);
    CHECK(c.residues == IntegerSeries({Integer(0), Integer(3)}, 2));
    const auto other = padic::reduce_series(S({1}, 2), 7, 2);
    CHECK_THROWS_AS(padic::add(a, other), Error);
}
