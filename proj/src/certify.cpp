#include "mirrorcert/certify.hpp"

#include "mirrorcert/series_io.hpp"

namespace mirrorcert {

std::string to_string(Verdict v)
{
    return v == Verdict::pass ? "pass" : "fail";
}

namespace {

// First index in [1, order) whose coefficient has v_p below `floor(m)`.
template <typename Floor>
std::optional<Failure> first_failure(const RationalSeries& s, long p, Floor floor)
{
    for (std::size_t m = 1; m < s.order(); ++m) {
        const padic::Valuation v = padic::valuation(s[m], p);
        const long need = floor(m);
        if (!v.at_least(need)) return Failure{m, *v.value};
    }
    return std::nullopt;
}

// Y(q) - Y(q^p) at the given order.
RationalSeries frobenius_defect(const RationalSeries& Y, long p, std::size_t order)
{
    const RationalSeries Yt = Y.truncated(order);
    return sub(Yt, padic::frobenius_substitute(Yt, p, Yt.order()));
}

RationalSeries divide_by_powers(const RationalSeries& b, unsigned power, const Rational& factor)
{
    std::vector<Rational> c(b.order());
    for (std::size_t m = 1; m < b.order(); ++m) {
        if (b[m] == 0) continue;
        Integer mp;
        mpz_ui_pow_ui(mp.get_mpz_t(), m, power);
        c[m] = b[m] * factor / Rational(mp);
    }
    return RationalSeries(std::move(c), b.order());
}

GaugeCertificate::Entry make_entry(RationalSeries s, long p)
{
    GaugeCertificate::Entry e;
    e.failure = first_failure(s, p, [](std::size_t) { return 0L; });
    e.verdict = e.failure ? Verdict::fail : Verdict::pass;
    e.series = std::move(s);
    return e;
}

nlohmann::ordered_json failure_json(const std::optional<Failure>& f)
{
    if (!f) return nullptr;
    nlohmann::ordered_json j;
    j["index"] = f->index;
    j["valuation"] = f->valuation;
    return j;
}

} // namespace

DworkCertificate dwork_certify(const RationalSeries& q_of_t, long p, std::size_t order)
{
    padic::require_prime(p, "certify.dwork_certify");
    RationalSeries u = q_of_t.shifted_down(1).truncated(order);
    DworkCertificate c;
    c.prime = p;
    c.unit_constant = u.order() > 0 ? u[0] : Rational(1);
    if (c.unit_constant == 0)
        throw ZeroLeadingCoefficient("certify.dwork_certify", "q must have valuation exactly 1");
    u = scale(u, Rational(Rational(1) / c.unit_constant));
    c.order = u.order();

    const RationalSeries ratio = divide(padic::frobenius_substitute(u, p, u.order()),
                                        pow(u, static_cast<unsigned>(p)));
    const RationalSeries v = sub(ratio, RationalSeries::constant(Rational(1), ratio.order()));
    c.failure = first_failure(v, p, [](std::size_t) { return 1L; });
    c.verdict = c.failure ? Verdict::fail : Verdict::pass;
    c.witness = scale(log_series(ratio), Rational(1, p));
    return c;
}

DworkCertificate dwork_certify(const MirrorMap& mm, long p, std::size_t order)
{
    return dwork_certify(mm.q_of_t, p, order);
}

// b_m = [q^m](Y(q) - Y(q^p)); psi_m = b_m / m^3 must be p-integral.
KSVCertificate ksv_certify(const RationalSeries& Y, long p, std::size_t order)
{
    padic::require_prime(p, "certify.ksv_certify");
    if (Y.order() < order)
        throw InsufficientOrder("certify.ksv_certify", "Y is known only to order " + std::to_string(Y.order()));
    KSVCertificate c;
    c.prime = p;
    c.order = order;
    c.witness = divide_by_powers(frobenius_defect(Y, p, order), 3, Rational(1));
    c.failure = first_failure(c.witness, p, [](std::size_t) { return 0L; });
    c.verdict = c.failure ? Verdict::fail : Verdict::pass;
    return c;
}

GaugeCertificate gauge_certify(const RationalSeries& Y, long p, std::size_t order)
{
    padic::require_prime(p, "certify.gauge_certify");
    if (Y.order() < order)
        throw InsufficientOrder("certify.gauge_certify", "Y is known only to order " + std::to_string(Y.order()));
    const RationalSeries b = frobenius_defect(Y, p, order);
    GaugeCertificate c;
    c.prime = p;
    c.order = order;
    c.m23 = make_entry(divide_by_powers(b, 1, Rational(1)), p);
    c.m13 = make_entry(divide_by_powers(b, 2, Rational(-1)), p);
    c.m14 = make_entry(divide_by_powers(b, 3, Rational(-2)), p);
    const bool ok = c.m13.verdict == Verdict::pass && c.m23.verdict == Verdict::pass &&
                    c.m14.verdict == Verdict::pass;
    c.verdict = ok ? Verdict::pass : Verdict::fail;
    return c;
}

bool verify_witness(const DworkCertificate& c, const RationalSeries& q_of_t)
{
    RationalSeries u = q_of_t.shifted_down(1).truncated(c.order);
    u = scale(u, Rational(Rational(1) / c.unit_constant));
    const RationalSeries lhs = mul(exp_series(scale(c.witness, Rational(c.prime))),
                                   pow(u, static_cast<unsigned>(c.prime)));
    const RationalSeries rhs = padic::frobenius_substitute(u, c.prime, u.order());
    return sub(lhs, rhs).is_zero();
}

bool verify_witness(const KSVCertificate& c, const RationalSeries& Y)
{
    const RationalSeries d3 = delta(delta(delta(c.witness)));
    return add(d3, scale(frobenius_defect(Y, c.prime, c.order), Rational(-1))).is_zero();
}

bool verify_witness(const GaugeCertificate& c, const RationalSeries& Y)
{
    const RationalSeries b = frobenius_defect(Y, c.prime, c.order);
    const bool r1 = sub(delta(c.m23.series), b).is_zero();
    const bool r2 = add(c.m23.series, delta(c.m13.series)).is_zero();
    const bool r3 = sub(delta(c.m14.series), scale(c.m13.series, Rational(2))).is_zero();
    const RationalSeries half_d3 = scale(delta(delta(delta(c.m14.series))), Rational(1, 2));
    const bool r4 = add(half_d3, b).is_zero();
    return r1 && r2 && r3 && r4;
}

bool modular_crosscheck(const KSVCertificate& c, const RationalSeries& Y, unsigned k)
{
    const auto Yp = padic::reduce_series(Y.truncated(c.order), c.prime, k);
    const auto psi = padic::reduce_series(c.witness, c.prime, k);
    const auto lhs = padic::sub(Yp, padic::frobenius_substitute(Yp, Yp.residues.order()));
    const auto rhs = padic::delta(padic::delta(padic::delta(psi)));
    return lhs.residues == rhs.residues;
}

nlohmann::ordered_json to_json(const DworkCertificate& c)
{
    nlohmann::ordered_json j;
    j["kind"] = "dwork";
    j["prime"] = c.prime;
    j["order"] = c.order;
    j["verdict"] = to_string(c.verdict);
    j["witness"] = to_json(c.witness);
    j["failure"] = failure_json(c.failure);
    j["unit_constant"] = to_string(c.unit_constant);
    return j;
}

nlohmann::ordered_json to_json(const KSVCertificate& c)
{
    nlohmann::ordered_json j;
    j["kind"] = "ksv";
    j["prime"] = c.prime;
    j["order"] = c.order;
    j["verdict"] = to_string(c.verdict);
    j["witness"] = to_json(c.witness);
    j["failure"] = failure_json(c.failure);
    return j;
}

nlohmann::ordered_json to_json(const GaugeCertificate& c)
{
    nlohmann::ordered_json j;
    j["kind"] = "gauge";
    j["prime"] = c.prime;
    j["order"] = c.order;
    j["verdict"] = to_string(c.verdict);
    auto w = nlohmann::ordered_json::object();
    auto f = nlohmann::ordered_json::object();
    for (const auto& [name, e] : {std::pair<const char*, const GaugeCertificate::Entry*>{"m13", &c.m13},
                                  {"m23", &c.m23},
                                  {"m14", &c.m14}}) {
        w[name] = to_json(e->series);
        f[name] = failure_json(e->failure);
    }
    j["witness"] = std::move(w);
    // First failing entry in m13, m23, m14 order, or null.
    nlohmann::ordered_json first = nullptr;
    for (const auto* e : {&c.m13, &c.m23, &c.m14})
        if (e->failure) {
            first = failure_json(e->failure);
            break;
        }
    j["failure"] = std::move(first);
    j["entry_failures"] = std::move(f);
    return j;
}

} // namespace mirrorcert
