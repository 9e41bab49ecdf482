#include "mirrorcert/cli.hpp"

#include "mirrorcert/fixtures.hpp"
#include "mirrorcert/report.hpp"
#include "mirrorcert/series_io.hpp"

#include "CLI11.hpp"

#include <fstream>
#include <iostream>
#include <sstream>

namespace mirrorcert::cli {

namespace {

using ojson = nlohmann::ordered_json;

PFOperator load(const JobConfig& cfg)
{
    if (cfg.fixture) return fixture(*cfg.fixture);
    return load_operator_file(*cfg.operator_path);
}

void check_config(const JobConfig& cfg, const PFOperator& op)
{
    const bool uses_degree = cfg.command == "instantons" || cfg.command == "certify" || cfg.command == "report";
    if (uses_degree && cfg.order <= cfg.max_degree)
        throw ConfigError("cli.run", "--order must exceed --max-degree");
    if (cfg.primes.empty() && cfg.prime_bound < static_cast<long>(op.rank) + 2)
        throw ConfigError("cli.run", "--prime-bound must be at least rank + 2 = " + std::to_string(op.rank + 2));
}

std::vector<long> candidate_primes(const JobConfig& cfg)
{
    return cfg.primes.empty() ? primes_up_to(cfg.prime_bound) : cfg.primes;
}

// Coefficient table: one row per exponent, one column per series.
std::string series_table(const std::vector<std::pair<std::string, const RationalSeries*>>& cols, char sep)
{
    std::ostringstream os;
    std::size_t n = 0;
    os << 'n';
    for (const auto& [name, s] : cols) {
        os << sep << name;
        n = std::max(n, s->order());
    }
    os << '\n';
    for (std::size_t i = 0; i < n; ++i) {
        os << i;
        for (const auto& [name, s] : cols) os << sep << (i < s->order() ? to_string((*s)[i]) : std::string("?"));
        os << '\n';
    }
    return os.str();
}

std::string dump(const ojson& j)
{
    return j.dump(2) + "\n";
}

struct Output {
    std::string body;
    int status = 0;
};

Output cmd_solve(const JobConfig& cfg, const PFOperator& op)
{
    const SolutionBasis basis = frobenius_solutions(op, cfg.order);
    const MonodromyMatrix mono = monodromy_matrix(basis);
    bool residual_zero = true;
    for (const auto& y : basis.y) residual_zero = residual_zero && residual(op, y).is_zero();

    std::vector<std::pair<std::string, const RationalSeries*>> cols;
    for (std::size_t k = 0; k < basis.g.size(); ++k) cols.emplace_back("g" + std::to_string(k), &basis.g[k]);
    if (cfg.format == Format::csv) return {series_table(cols, ','), 0};

    if (cfg.format == Format::text) {
        std::ostringstream os;
        os << "operator " << op.name << ", rank " << op.rank << ", order " << cfg.order << '\n'
           << "residuals vanish: " << (residual_zero ? "yes" : "NO") << '\n'
           << "rank N^j:";
        for (auto r : mono.power_ranks) os << ' ' << r;
        os << "\n\n" << series_table(cols, ' ');
        return {os.str(), 0};
    }

    ojson j;
    j["operator"] = to_json(op);
    j["order"] = cfg.order;
    auto g = ojson::array();
    for (const auto& s : basis.g) g.push_back(to_json(s));
    j["g"] = std::move(g);
    auto rows = ojson::array();
    for (Eigen::Index r = 0; r < mono.N.rows(); ++r) {
        auto row = ojson::array();
        for (Eigen::Index c = 0; c < mono.N.cols(); ++c) row.push_back(to_string(mono.N(r, c)));
        rows.push_back(std::move(row));
    }
    j["monodromy"] = {{"N", std::move(rows)}, {"power_ranks", mono.power_ranks},
                      {"nilpotency_index", mono.nilpotency_index}};
    j["residuals_vanish"] = residual_zero;
    return {dump(j), 0};
}

Output cmd_mirror_map(const JobConfig& cfg, const PFOperator& op)
{
    const MirrorMap mm = mirror_map(frobenius_solutions(op, cfg.order));
    if (cfg.format != Format::json)
        return {series_table({{"q_of_t", &mm.q_of_t}, {"t_of_q", &mm.t_of_q}}, cfg.format == Format::csv ? ',' : ' '),
                0};
    ojson j;
    j["operator"] = op.name;
    j["order"] = cfg.order;
    j["q_of_t"] = to_json(mm.q_of_t);
    j["t_of_q"] = to_json(mm.t_of_q);
    j["monodromy_order"] = mm.monodromy_order;
    if (op.coordinate_scale) j["q_prime_zero_preferred_coordinate"] = to_string(Rational(Rational(1) / *op.coordinate_scale));
    return {dump(j), 0};
}

Output cmd_yukawa(const JobConfig& cfg, const PFOperator& op)
{
    if (!op.n0) throw MalformedSpec("yukawa_instanton.yukawa_t", "operator spec does not declare n0");
    const SolutionBasis basis = frobenius_solutions(op, cfg.order);
    PipelineOutputs p;
    p.yukawa.n0 = *op.n0;
    p.yukawa.W_t = yukawa_t(op, *op.n0, cfg.order);
    p.yukawa.Y_q = yukawa_q(p.yukawa.W_t, basis.y0(), mirror_map(basis), cfg.order);
    if (cfg.format != Format::json)
        return {series_table({{"W_t", &p.yukawa.W_t}, {"Y_q", &p.yukawa.Y_q}}, cfg.format == Format::csv ? ',' : ' '),
                0};
    ojson j;
    j["operator"] = op.name;
    j["order"] = cfg.order;
    j["n0"] = to_string(p.yukawa.n0);
    j["W_t"] = to_json(p.yukawa.W_t);
    j["Y_q"] = to_json(p.yukawa.Y_q);
    return {dump(j), 0};
}

Output cmd_instantons(const JobConfig& cfg, const PFOperator& op)
{
    const PipelineOutputs p = run_pipeline(op, cfg.order, cfg.max_degree);
    if (cfg.format == Format::csv) return {instanton_csv(p.instantons), 0};
    if (cfg.format == Format::text) {
        std::ostringstream os;
        os << "d  n_d  denominator primes\n";
        for (std::size_t d = 1; d < p.instantons.n.size(); ++d)
            os << d << "  " << to_string(p.instantons.n[d]) << "  {"
               << join_primes(prime_support(p.instantons.n[d].get_den())) << "}\n";
        return {os.str(), 0};
    }
    ojson j = instanton_json(p.instantons);
    j["operator"] = op.name;
    return {dump(j), 0};
}

Output cmd_certify(const JobConfig& cfg, const PFOperator& op)
{
    const PipelineOutputs p = run_pipeline(op, cfg.order, cfg.max_degree);
    const auto primes = candidate_primes(cfg);
    const IntegralityReport r = n_integrality_report(p, primes);
    bool all_pass = true;
    for (const auto& pc : r.certified) all_pass = all_pass && pc.passed();
    const int status = all_pass ? 0 : 1;

    if (cfg.format == Format::csv) return {to_csv(r), status};
    if (cfg.format == Format::text) {
        std::ostringstream os;
        for (const auto& pc : r.certified)
            os << "p = " << pc.prime << ": dwork " << to_string(pc.dwork.verdict) << ", ksv "
               << to_string(pc.ksv.verdict) << ", gauge " << to_string(pc.gauge.verdict) << ", witnesses "
               << (pc.witnesses_verified ? "verified" : "FAILED") << '\n';
        for (const auto& s : r.skipped) os << "p = " << s.prime << ": skipped (" << s.reason << ")\n";
        return {os.str(), status};
    }
    auto certs = ojson::array();
    for (const auto& pc : r.certified) {
        certs.push_back(to_json(pc.dwork));
        certs.push_back(to_json(pc.ksv));
        certs.push_back(to_json(pc.gauge));
    }
    return {dump(certs), status};
}

Output cmd_report(const JobConfig& cfg, const PFOperator& op)
{
    const PipelineOutputs p = run_pipeline(op, cfg.order, cfg.max_degree);
    const IntegralityReport r = n_integrality_report(p, candidate_primes(cfg));
    const int status = r.consistent ? 0 : 1;
    switch (cfg.format) {
    case Format::csv: return {to_csv(r), status};
    case Format::text: return {to_text(r), status};
    case Format::json: break;
    }
    return {dump(to_json(r)), status};
}

// Writes to --out or `out`. Throws IOError.
void emit(const JobConfig& cfg, const std::string& body, std::ostream& out)
{
    if (!cfg.out_path) {
        out << body;
        return;
    }
    std::ofstream f(*cfg.out_path, std::ios::binary);
    if (!f) throw IOError("cli.emit", "cannot open " + *cfg.out_path + " for writing");
    f << body;
    if (!f) throw IOError("cli.emit", "write to " + *cfg.out_path + " failed");
}

} // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err)
{
    CLI::App app{"Mirror maps, Yukawa couplings and p-adic integrality certificates"};
    app.require_subcommand(1);

    JobConfig cfg;
    std::string format = "json";
    const std::vector<std::pair<std::string, std::string>> commands = {
        {"solve", "Frobenius solution basis and monodromy"},
        {"mirror-map", "canonical coordinate q(t) and its inverse"},
        {"yukawa", "Yukawa coupling in t and in q"},
        {"instantons", "instanton numbers n_d"},
        {"certify", "Dwork, KSV and gauge certificates"},
        {"report", "full pipeline and integrality report"},
    };
    for (const auto& [name, help] : commands) {
        CLI::App* sub = app.add_subcommand(name, help);
        auto* op = sub->add_option("--operator", cfg.operator_path, "operator spec (JSON)");
        auto* fx = sub->add_option("--fixture", cfg.fixture, "built-in operator name");
        op->excludes(fx);
        sub->add_option("--order", cfg.order, "working order")->check(CLI::Range(2, 100000));
        sub->add_option("--max-degree", cfg.max_degree, "largest instanton degree");
        auto* pr = sub->add_option("--primes", cfg.primes, "comma-separated primes")->delimiter(',');
        auto* pb = sub->add_option("--prime-bound", cfg.prime_bound, "certify primes up to this bound");
        pr->excludes(pb);
        sub->add_option("--format", format, "json|csv|text")->check(CLI::IsMember({"json", "csv", "text"}));
        sub->add_option("--out", cfg.out_path, "output path (default stdout)");
        sub->callback([&cfg, name = name] { cfg.command = name; });
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        out << app.help();
        return 0;
    } catch (const CLI::ParseError& e) {
        err << "error [cli.run]: " << e.what() << '\n';
        return 2;
    }
    cfg.format = format == "csv" ? Format::csv : format == "text" ? Format::text : Format::json;

    try {
        if (!cfg.operator_path && !cfg.fixture)
            throw ConfigError("cli.run", "one of --operator or --fixture is required");
        const PFOperator op = load(cfg);
        check_config(cfg, op);
        Output result;
        if (cfg.command == "solve") result = cmd_solve(cfg, op);
        else if (cfg.command == "mirror-map") result = cmd_mirror_map(cfg, op);
        else if (cfg.command == "yukawa") result = cmd_yukawa(cfg, op);
        else if (cfg.command == "instantons") result = cmd_instantons(cfg, op);
        else if (cfg.command == "certify") result = cmd_certify(cfg, op);
        else result = cmd_report(cfg, op);
        emit(cfg, result.body, out);
        return result.status;
    } catch (const Error& e) {
        err << "error [" << e.where() << "]: " << e.what() << '\n';
        return 2;
    } catch (const std::exception& e) {
        err << "error [cli.run]: " << e.what() << '\n';
        return 2;
    }
}

} // namespace mirrorcert::cli
