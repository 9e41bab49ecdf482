#include "doctest.h"

#include "mirrorcert/certify.hpp"
#include "mirrorcert/fixtures.hpp"
#include "mirrorcert/report.hpp"
#include "test_util.hpp"

using namespace mirrorcert;
using namespace testutil;

namespace {

RationalSeries t_times(const RationalSeries& u)
{
    return u.shifted_up(1);
}

// q/(1-q) to the given order.
RationalSeries geometric_q(std::size_t order)
{
    std::vector<Rational> c(order, Rational(1));
    c[0] = 0;
    return RationalSeries(std::move(c), order);
}

const std::vector<long> kPrimes{3, 5, 7, 11, 13};

long pick_prime(Gen& g)
{
    return kPrimes[static_cast<std::size_t>(g.uniform(0, static_cast<long>(kPrimes.size()) - 1))];
}

} // namespace

TEST_CASE("dwork_certify examples")
{
    const auto q = RationalSeries::monomial(Rational(1), 1, 11);
    for (long p : {2L, 3L, 5L}) {
        const auto c = dwork_certify(q, p, 10);
        CHECK(c.verdict == Verdict::pass);
        CHECK(c.witness.is_zero());
        CHECK(verify_witness(c, q));
    }

    const auto q2 = t_times(S({1, 1}, 10));
    const auto c2 = dwork_certify(q2, 2, 10);
    CHECK(c2.verdict == Verdict::pass);
    CHECK_FALSE(c2.failure.has_value());
    CHECK(verify_witness(c2, q2));

    const auto q3 = t_times(exp_series(S({0, 1}, 3)));
    const auto c3 = dwork_certify(q3, 2, 3);
    CHECK(c3.verdict == Verdict::fail);
    REQUIRE(c3.failure.has_value());
    CHECK(c3.failure->index == 2);
    CHECK(c3.failure->valuation == 0);
    CHECK(verify_witness(c3, q3));

    CHECK_THROWS_AS(dwork_certify(q2, 4, 10), NotPrime);
}

TEST_CASE("dwork_certify normalizes the unit constant")
{
    const auto q = t_times(S({3, 3}, 8));
    const auto c = dwork_certify(q, 5, 8);
    CHECK(c.unit_constant == 3);
    CHECK(c.verdict == Verdict::pass);
    CHECK(verify_witness(c, q));
}

TEST_CASE("ksv_certify examples")
{
    const auto c1 = ksv_certify(S({5}, 20), 7, 20);
    CHECK(c1.verdict == Verdict::pass);
    CHECK(c1.witness.is_zero());

    for (long p : {2L, 3L, 5L, 7L}) {
        const auto Y = geometric_q(20);
        const auto c = ksv_certify(Y, p, 20);
        CHECK(c.verdict == Verdict::pass);
        for (std::size_t m = 1; m < 20; ++m) {
            const Rational expected = m % static_cast<std::size_t>(p) == 0
                                          ? Rational(0)
                                          : Rational(Rational(1) / Rational(static_cast<unsigned long>(m * m * m)));
            CHECK(c.witness[m] == expected);
        }
        CHECK(verify_witness(c, Y));
    }

    for (long p : {2L, 3L, 5L}) {
        const auto Y = RationalSeries::monomial(Rational(1), static_cast<std::size_t>(p), 30);
        const auto c = ksv_certify(Y, p, 30);
        CHECK(c.verdict == Verdict::fail);
        REQUIRE(c.failure.has_value());
        CHECK(c.failure->index == static_cast<std::size_t>(p));
        CHECK(c.failure->valuation == -3);
        // Moebius inversion agrees: n_p = 1/p^3.
        CHECK(instanton_extract(Y, static_cast<std::size_t>(p)).n[static_cast<std::size_t>(p)] ==
              Rational(1, static_cast<unsigned long>(p * p * p)));
    }
    CHECK_THROWS_AS(ksv_certify(S({1}, 5), 7, 6), InsufficientOrder);
}

TEST_CASE("gauge_certify examples")
{
    const auto c0 = gauge_certify(S({5}, 10), 7, 10);
    CHECK(c0.verdict == Verdict::pass);
    CHECK(c0.m13.series.is_zero());
    CHECK(c0.m23.series.is_zero());
    CHECK(c0.m14.series.is_zero());

    const auto Y = geometric_q(30);
    const auto c = gauge_certify(Y, 7, 30);
    CHECK(c.verdict == Verdict::pass);
    for (std::size_t m = 1; m < 30; ++m)
        CHECK(c.m23.series[m] == (m % 7 == 0 ? Rational(0) : Rational(1, static_cast<unsigned long>(m))));
    CHECK(verify_witness(c, Y));

    const auto bad = gauge_certify(RationalSeries::monomial(Rational(1), 7, 20), 7, 20);
    CHECK(bad.verdict == Verdict::fail);
    CHECK(bad.m23.verdict == Verdict::fail);
    CHECK(bad.m23.failure->index == 7);
}

TEST_CASE("certificate JSON fields")
{
    const auto c = ksv_certify(RationalSeries::monomial(Rational(1), 3, 10), 3, 10);
    const auto j = to_json(c);
    CHECK(j["kind"] == "ksv");
    CHECK(j["prime"] == 3);
    CHECK(j["order"] == 10);
    CHECK(j["verdict"] == "fail");
    CHECK(j["failure"]["index"] == 3);
    CHECK(j["failure"]["valuation"] == -3);
    CHECK(j["witness"]["valuation"] == 3);
    const auto ok = to_json(dwork_certify(RationalSeries::monomial(Rational(1), 1, 6), 5, 5));
    CHECK(ok["failure"].is_null());
    CHECK(to_json(gauge_certify(S({1}, 5), 5, 5))["witness"].contains("m14"));
}

TEST_CASE("property: Dwork soundness on planted units")
{
    Gen g(4001);
    for (int i = 0; i < 1000; ++i) {
        const long p = pick_prime(g);
        const std::size_t n = static_cast<std::size_t>(g.uniform(2, 12));
        // u in 1 + tZ[[t]]
        auto u = g.integral_series(n, 0, 40);
        std::vector<Rational> c(u.coefficients().begin(), u.coefficients().end());
        c[0] = 1;
        const auto good = t_times(RationalSeries(c, n));
        const auto cg = dwork_certify(good, p, n);
        REQUIRE(cg.verdict == Verdict::pass);
        REQUIRE(verify_witness(cg, good));
        for (const auto& h : cg.witness.coefficients()) REQUIRE(padic::is_integral(h, p));

        // Plant a coefficient of negative valuation at an index prime to p.
        std::size_t m;
        do m = static_cast<std::size_t>(g.uniform(1, static_cast<long>(n) - 1));
        while (m % static_cast<std::size_t>(p) == 0);
        c[m] = make_rational(Integer(g.uniform(1, 20)) * 2 + 1, Integer(p));
        if (!padic::is_integral(c[m], p)) {
            const auto bad = t_times(RationalSeries(c, n));
            const auto cb = dwork_certify(bad, p, n);
            REQUIRE(cb.verdict == Verdict::fail);
            REQUIRE(cb.failure->index == m);
            REQUIRE(verify_witness(cb, bad));
        }
    }
}

TEST_CASE("property: KSV verdict matches p-integrality of instanton numbers")
{
    Gen g(4002);
    int failures_seen = 0;
    for (int i = 0; i < 1000; ++i) {
        const long p = pick_prime(g);
        const std::size_t order = static_cast<std::size_t>(g.uniform(2, 30));
        std::vector<Rational> n(order);
        for (auto& x : n) x = g.integer(1000);
        // Half the cases: plant a p-adically non-integral n_d.
        if (g.uniform(0, 1) == 1) {
            const std::size_t d = static_cast<std::size_t>(g.uniform(1, static_cast<long>(order) - 1));
            n[d] += make_rational(Integer(g.uniform(1, 5)), Integer(p) * g.uniform(1, 3));
        }
        const auto Y = lambert_expand(n, order);
        const auto c = ksv_certify(Y, p, order);
        const auto extracted = instanton_extract(Y, order - 1).n;
        const bool all_integral = std::all_of(extracted.begin() + 1, extracted.end(),
                                              [p](const Rational& x) { return padic::is_integral(x, p); });
        REQUIRE((c.verdict == Verdict::pass) == all_integral);
        REQUIRE(verify_witness(c, Y));
        if (c.verdict == Verdict::fail) ++failures_seen;
        if (c.verdict == Verdict::pass) REQUIRE(modular_crosscheck(c, Y));
    }
    CHECK(failures_seen > 100);
}

TEST_CASE("property: gauge witnesses agree with KSV witness and satisfy the relations")
{
    Gen g(4003);
    for (int i = 0; i < 1000; ++i) {
        const long p = pick_prime(g);
        const std::size_t order = static_cast<std::size_t>(g.uniform(1, 25));
        const auto Y = g.uniform(0, 3) == 0 ? g.series(order) : g.integral_series(order);
        const auto k = ksv_certify(Y, p, order);
        const auto gc = gauge_certify(Y, p, order);
        REQUIRE(k.witness == scale(gc.m14.series, Q(-1, 2)));
        REQUIRE(verify_witness(gc, Y));
        REQUIRE(add(scale(delta(delta(delta(gc.m14.series))), Q(1, 2)),
                    sub(Y, padic::frobenius_substitute(Y, p, order)))
                    .is_zero());
        if (gc.verdict == Verdict::pass) REQUIRE(k.verdict == Verdict::pass);
        REQUIRE((gc.m14.verdict == Verdict::pass) == (k.verdict == Verdict::pass));
    }
}

TEST_CASE("n_integrality_report: quintic")
{
    const auto out = run_pipeline(fixture("quintic"), 50, 16);
    const std::vector<long> primes{7, 11, 13};
    const auto r = n_integrality_report(out, primes);
    for (auto p : r.support) CHECK((p == 2 || p == 3 || p == 5));
    REQUIRE(r.certified.size() == 3);
    for (const auto& pc : r.certified) {
        CHECK(pc.passed());
        CHECK(pc.modular_crosscheck);
    }
    CHECK(r.consistent);
    CHECK(r.violations.empty());
    CHECK(r.N_observed == 1);

    const auto bounded = n_integrality_report(out, primes_up_to(14));
    CHECK(bounded.certified.size() == 3);
    CHECK(bounded.skipped.size() == 3); // 2, 3 <= rank; 5 | N
}

TEST_CASE("n_integrality_report: planted n_7 = 1/7 is flagged")
{
    auto out = run_pipeline(fixture("quintic"), 30, 10);
    std::vector<Rational> plant(8);
    plant[7] = Q(1, 7);
    out.yukawa.Y_q = add(out.yukawa.Y_q, lambert_expand(plant, 30));
    out.instantons = instanton_extract(out.yukawa.Y_q, 10);
    CHECK(out.instantons.n[7] == Rational(Integer("295091050570845659250")) + Q(1, 7));

    const std::vector<long> primes{7, 11};
    const auto r = n_integrality_report(out, primes);
    CHECK_FALSE(r.consistent);
    REQUIRE(r.certified.size() == 2);
    CHECK(r.certified[0].prime == 7);
    CHECK(r.certified[0].ksv.verdict == Verdict::fail);
    CHECK(r.certified[0].ksv.failure->index == 7);
    CHECK(r.certified[1].passed());
    CHECK(r.n_support == std::vector<unsigned long>{7});
    const bool mentions = std::any_of(r.violations.begin(), r.violations.end(), [](const std::string& v) {
        return v.find("ksv certificate fails at p = 7") != std::string::npos;
    });
    CHECK(mentions);
}

TEST_CASE("n_integrality_report: edge cases")
{
    const auto out = run_pipeline(fixture("quintic"), 20, 5);
    const auto empty = n_integrality_report(out, std::vector<long>{});
    CHECK(empty.certified.empty());
    CHECK(empty.consistent);
    CHECK(empty.support.empty());

    CHECK_THROWS_AS(n_integrality_report(out, std::vector<long>{9}), NotPrime);

    auto mismatched = out;
    mismatched.yukawa.Y_q = out.yukawa.Y_q.truncated(10);
    CHECK_THROWS_AS(n_integrality_report(mismatched, std::vector<long>{7}), OrderMismatch);
}
