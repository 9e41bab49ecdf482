#include "mirrorcert/report.hpp"

#include "mirrorcert/series_io.hpp"

#include <algorithm>
#include <future>
#include <set>
#include <sstream>

namespace mirrorcert {

PipelineOutputs run_pipeline(const PFOperator& op, std::size_t order, std::size_t max_degree)
{
    if (!op.n0) throw MalformedSpec("yukawa_instanton.yukawa_t", "operator spec does not declare n0");
    PipelineOutputs out;
    out.op = op;
    out.order = order;
    out.max_degree = max_degree;
    out.basis = frobenius_solutions(op, order);
    out.mirror = mirror_map(out.basis);
    out.yukawa.n0 = *op.n0;
    out.yukawa.W_t = yukawa_t(op, *op.n0, order);
    out.yukawa.Y_q = yukawa_q(out.yukawa.W_t, out.basis.y0(), out.mirror, order);
    out.instantons = instanton_extract(out.yukawa.Y_q, max_degree);
    return out;
}

bool PrimeCertificates::passed() const
{
    return dwork.verdict == Verdict::pass && ksv.verdict == Verdict::pass &&
           gauge.verdict == Verdict::pass && witnesses_verified;
}

PrimeCertificates certify_prime(const PipelineOutputs& out, long p)
{
    PrimeCertificates pc;
    pc.prime = p;
    const RationalSeries& Y = out.yukawa.Y_q;
    pc.dwork = dwork_certify(out.mirror, p, out.order);
    pc.ksv = ksv_certify(Y, p, out.order);
    pc.gauge = gauge_certify(Y, p, out.order);
    pc.witnesses_verified = verify_witness(pc.dwork, out.mirror.q_of_t) && verify_witness(pc.ksv, Y) &&
                            verify_witness(pc.gauge, Y);
    const bool integral_Y =
        std::all_of(Y.coefficients().begin(), Y.coefficients().end(),
                    [p](const Rational& c) { return padic::is_integral(c, p); });
    if (pc.ksv.verdict == Verdict::pass && integral_Y) pc.modular_crosscheck = modular_crosscheck(pc.ksv, Y);
    return pc;
}

std::vector<long> primes_up_to(long bound)
{
    std::vector<long> out;
    for (long p = 2; p <= bound; ++p)
        if (is_prime(p)) out.push_back(p);
    return out;
}

std::string join_primes(const std::vector<unsigned long>& primes)
{
    std::string s;
    for (std::size_t i = 0; i < primes.size(); ++i) {
        if (i) s += ';';
        s += std::to_string(primes[i]);
    }
    return s;
}

namespace {

void add_denominator_primes(const Rational& x, std::set<unsigned long>& out)
{
    for (auto p : prime_support(x.get_den())) out.insert(p);
}

std::string describe(const char* kind, long p, const std::optional<Failure>& f)
{
    std::string s = std::string(kind) + " certificate fails at p = " + std::to_string(p);
    if (f) s += ", index " + std::to_string(f->index) + " (valuation " + std::to_string(f->valuation) + ")";
    return s;
}

} // namespace

IntegralityReport n_integrality_report(const PipelineOutputs& out, std::span<const long> candidates)
{
    const std::size_t M = out.order;
    if (out.basis.order != M || out.mirror.order != M || out.yukawa.Y_q.order() != M ||
        out.instantons.source_order != M)
        throw OrderMismatch("certify.n_integrality_report", "pipeline stages disagree on the working order " +
                                                                std::to_string(M));

    IntegralityReport r;
    r.operator_name = out.op.name;
    r.order = M;
    r.max_degree = out.max_degree;
    r.declared_N = out.op.declared_N;
    if (out.op.coordinate_scale) r.q_prime_zero = Rational(Rational(1) / *out.op.coordinate_scale);
    r.instantons = out.instantons.n;

    std::set<unsigned long> qs, ns;
    for (const auto& c : out.mirror.q_of_t.coefficients()) add_denominator_primes(c, qs);
    for (std::size_t d = 1; d < out.instantons.n.size(); ++d) add_denominator_primes(out.instantons.n[d], ns);
    r.q_support.assign(qs.begin(), qs.end());
    r.n_support.assign(ns.begin(), ns.end());
    std::set<unsigned long> all(qs);
    all.insert(ns.begin(), ns.end());
    r.support.assign(all.begin(), all.end());
    for (auto p : r.support) r.N_observed *= p;

    if (r.declared_N) {
        for (auto p : r.q_support)
            if (!mpz_divisible_ui_p(r.declared_N->get_mpz_t(), p))
                r.violations.push_back("q(t) has a denominator divisible by " + std::to_string(p) +
                                       ", outside declared N = " + r.declared_N->get_str());
        for (auto p : r.n_support)
            if (!mpz_divisible_ui_p(r.declared_N->get_mpz_t(), p))
                r.violations.push_back("instanton numbers have a denominator divisible by " + std::to_string(p) +
                                       ", outside declared N = " + r.declared_N->get_str());
    }

    std::vector<long> admissible;
    std::set<long> seen;
    for (long p : candidates) {
        padic::require_prime(p, "certify.n_integrality_report");
        if (!seen.insert(p).second) continue;
        if (p <= static_cast<long>(out.op.rank))
            r.skipped.push_back({p, "p <= rank"});
        else if (qs.count(static_cast<unsigned long>(p)))
            r.skipped.push_back({p, "divides a denominator of q(t)"});
        else if (r.declared_N && mpz_divisible_ui_p(r.declared_N->get_mpz_t(), static_cast<unsigned long>(p)))
            r.skipped.push_back({p, "divides declared N"});
        else
            admissible.push_back(p);
    }
    std::sort(admissible.begin(), admissible.end());
    std::sort(r.skipped.begin(), r.skipped.end(),
              [](const SkippedPrime& a, const SkippedPrime& b) { return a.prime < b.prime; });

    std::vector<std::future<PrimeCertificates>> tasks;
    for (long p : admissible) tasks.push_back(std::async(std::launch::async, certify_prime, std::cref(out), p));
    for (auto& t : tasks) r.certified.push_back(t.get());

    for (const auto& pc : r.certified) {
        if (pc.dwork.verdict == Verdict::fail) r.violations.push_back(describe("dwork", pc.prime, pc.dwork.failure));
        if (pc.ksv.verdict == Verdict::fail) r.violations.push_back(describe("ksv", pc.prime, pc.ksv.failure));
        if (pc.gauge.verdict == Verdict::fail) {
            std::optional<Failure> f;
            for (const auto* e : {&pc.gauge.m13, &pc.gauge.m23, &pc.gauge.m14})
                if (!f && e->failure) f = e->failure;
            r.violations.push_back(describe("gauge", pc.prime, f));
        }
        if (!pc.witnesses_verified)
            r.violations.push_back("witness identity check failed at p = " + std::to_string(pc.prime));
    }
    r.consistent = r.violations.empty();

    r.notes = {
        "q is normalized so that q'(0) = 1; the mu_(p-1) ambiguity of the p-adic canonical coordinate is "
        "therefore trivial and the small-monodromy order k equals 1 by construction.",
        "certificates at order " + std::to_string(M) + " establish p-integrality of n_d for d < " +
            std::to_string(M) + " only; the instanton table lists d <= " + std::to_string(out.max_degree) + ".",
        "gauge witnesses use the branch where Frobenius acts on W_0 as +Id; the other branch flips their "
        "signs without changing verdicts.",
    };
    return r;
}

nlohmann::ordered_json to_json(const IntegralityReport& r)
{
    nlohmann::ordered_json j;
    j["operator"] = r.operator_name;
    j["order"] = r.order;
    j["max_degree"] = r.max_degree;
    j["q_denominator_primes"] = r.q_support;
    j["instanton_denominator_primes"] = r.n_support;
    j["denominator_primes"] = r.support;
    j["N_observed"] = r.N_observed.get_str();
    j["N_declared"] = r.declared_N ? nlohmann::ordered_json(r.declared_N->get_str()) : nlohmann::ordered_json();
    if (r.q_prime_zero) j["q_prime_zero_preferred_coordinate"] = to_string(*r.q_prime_zero);
    auto inst = nlohmann::ordered_json::array();
    for (const auto& n : r.instantons) inst.push_back(to_string(n));
    j["instantons"] = std::move(inst);
    auto certs = nlohmann::ordered_json::array();
    for (const auto& pc : r.certified) {
        nlohmann::ordered_json c;
        c["prime"] = pc.prime;
        c["dwork"] = to_string(pc.dwork.verdict);
        c["ksv"] = to_string(pc.ksv.verdict);
        c["gauge"] = to_string(pc.gauge.verdict);
        c["witnesses_verified"] = pc.witnesses_verified;
        c["modular_crosscheck"] = pc.modular_crosscheck;
        certs.push_back(std::move(c));
    }
    j["certificates"] = std::move(certs);
    auto skipped = nlohmann::ordered_json::array();
    for (const auto& s : r.skipped) skipped.push_back({{"prime", s.prime}, {"reason", s.reason}});
    j["skipped_primes"] = std::move(skipped);
    j["consistent"] = r.consistent;
    j["violations"] = r.violations;
    j["notes"] = r.notes;
    return j;
}

std::string to_text(const IntegralityReport& r)
{
    std::ostringstream os;
    os << "operator            " << r.operator_name << '\n'
       << "order               " << r.order << '\n'
       << "max degree          " << r.max_degree << '\n'
       << "q denominators      {" << join_primes(r.q_support) << "}\n"
       << "n_d denominators    {" << join_primes(r.n_support) << "}\n"
       << "N_observed          " << r.N_observed.get_str() << '\n'
       << "N_declared          " << (r.declared_N ? r.declared_N->get_str() : std::string("-")) << '\n';
    if (r.q_prime_zero) os << "q'(0) preferred     " << to_string(*r.q_prime_zero) << '\n';
    os << '\n' << "  d  n_d\n";
    for (std::size_t d = 1; d < r.instantons.size(); ++d) os << "  " << d << "  " << to_string(r.instantons[d]) << '\n';
    os << '\n' << "prime  dwork  ksv   gauge  witnesses\n";
    for (const auto& pc : r.certified) {
        os << pc.prime << std::string(pc.prime < 10 ? 6 : pc.prime < 100 ? 5 : 4, ' ') << to_string(pc.dwork.verdict)
           << "   " << to_string(pc.ksv.verdict) << "  " << to_string(pc.gauge.verdict) << "   "
           << (pc.witnesses_verified ? "ok" : "FAILED") << '\n';
    }
    for (const auto& s : r.skipped) os << "skipped p = " << s.prime << ": " << s.reason << '\n';
    os << '\n' << "verdict             " << (r.consistent ? "CONSISTENT" : "VIOLATIONS") << '\n';
    for (const auto& v : r.violations) os << "  violation: " << v << '\n';
    for (const auto& n : r.notes) os << "  note: " << n << '\n';
    return os.str();
}

std::string to_csv(const IntegralityReport& r)
{
    std::ostringstream os;
    os << "prime,dwork,ksv,gauge,witnesses_verified\n";
    for (const auto& pc : r.certified)
        os << pc.prime << ',' << to_string(pc.dwork.verdict) << ',' << to_string(pc.ksv.verdict) << ','
           << to_string(pc.gauge.verdict) << ',' << (pc.witnesses_verified ? "true" : "false") << '\n';
    return os.str();
}

std::string instanton_csv(const InstantonSeries& inst)
{
    std::ostringstream os;
    os << "d,n_d,denominator_primes\n";
    for (std::size_t d = 1; d < inst.n.size(); ++d)
        os << d << ',' << to_string(inst.n[d]) << ',' << join_primes(prime_support(inst.n[d].get_den())) << '\n';
    return os.str();
}

nlohmann::ordered_json instanton_json(const InstantonSeries& inst)
{
    nlohmann::ordered_json j;
    j["source_order"] = inst.source_order;
    j["n0"] = inst.n.empty() ? std::string("0/1") : to_string(inst.n[0]);
    auto rows = nlohmann::ordered_json::array();
    for (std::size_t d = 1; d < inst.n.size(); ++d) {
        nlohmann::ordered_json row;
        row["d"] = d;
        row["n_d"] = to_string(inst.n[d]);
        row["denominator_primes"] = prime_support(inst.n[d].get_den());
        rows.push_back(std::move(row));
    }
    j["instantons"] = std::move(rows);
    return j;
}

} // namespace mirrorcert
