#include "mirrorcert/picard_fuchs.hpp"

#include "mirrorcert/series_io.hpp"

#include <fstream>

namespace mirrorcert {

RationalSeries PFOperator::coefficient_series(std::size_t i, std::size_t order) const
{
    const auto& a = delta_coefficients.at(i);
    std::vector<Rational> c(order);
    for (std::size_t s = 0; s < std::min(order, a.size()); ++s) c[s] = Rational(a[s]);
    return RationalSeries(std::move(c), order);
}

std::size_t PFOperator::max_degree() const
{
    std::size_t d = 0;
    for (const auto& a : delta_coefficients)
        for (std::size_t s = a.size(); s-- > 0;)
            if (a[s] != 0) {
                d = std::max(d, s);
                break;
            }
    return d;
}

void validate(const PFOperator& op)
{
    if (op.rank < 2) throw MalformedSpec("picard_fuchs.load_operator", "rank must be at least 2");
    if (op.delta_coefficients.size() != op.rank + 1)
        throw MalformedSpec("picard_fuchs.load_operator",
                            "delta_coefficients must list a_0 .. a_" + std::to_string(op.rank));
    for (std::size_t i = 0; i <= op.rank; ++i) {
        const auto& a = op.delta_coefficients[i];
        const Integer c0 = a.empty() ? Integer(0) : a[0];
        const Integer expected = i == op.rank ? 1 : 0;
        if (c0 != expected)
            throw NotMUM("picard_fuchs.load_operator",
                         "indicial polynomial is not rho^" + std::to_string(op.rank) + ": a_" +
                             std::to_string(i) + "(0) = " + c0.get_str() + ", expected " +
                             expected.get_str());
    }
}

PFOperator load_operator(const nlohmann::json& doc)
{
    constexpr const char* where = "picard_fuchs.load_operator";
    PFOperator op;
    try {
        if (!doc.is_object()) throw MalformedSpec(where, "operator spec must be a JSON object");
        op.name = doc.value("name", std::string("unnamed"));
        if (!doc.contains("rank") || !doc["rank"].is_number_unsigned())
            throw MalformedSpec(where, "missing or invalid 'rank'");
        op.rank = doc["rank"].get<std::size_t>();
        if (!doc.contains("delta_coefficients") || !doc["delta_coefficients"].is_array())
            throw MalformedSpec(where, "missing or invalid 'delta_coefficients'");
        for (const auto& row : doc["delta_coefficients"]) {
            if (!row.is_array()) throw MalformedSpec(where, "each delta coefficient must be an array");
            std::vector<Integer> a;
            for (const auto& c : row) a.push_back(integer_from_json(c, "delta_coefficients"));
            op.delta_coefficients.push_back(std::move(a));
        }
        if (doc.contains("n0")) op.n0 = Rational(integer_from_json(doc["n0"], "n0"));
        if (doc.contains("N")) {
            op.declared_N = integer_from_json(doc["N"], "N");
            if (*op.declared_N <= 0) throw MalformedSpec(where, "'N' must be positive");
        }
        if (doc.contains("coordinate_scale")) {
            if (!doc["coordinate_scale"].is_string())
                throw MalformedSpec(where, "'coordinate_scale' must be a rational string");
            op.coordinate_scale = parse_rational(doc["coordinate_scale"].get<std::string>());
            if (*op.coordinate_scale == 0) throw MalformedSpec(where, "'coordinate_scale' must be nonzero");
        }
    } catch (const ParseError& e) {
        throw MalformedSpec(where, e.what());
    } catch (const nlohmann::json::exception& e) {
        throw MalformedSpec(where, e.what());
    }
    validate(op);
    return op;
}

PFOperator load_operator_file(const std::filesystem::path& path)
{
    std::ifstream in(path);
    if (!in) throw MalformedSpec("picard_fuchs.load_operator", "cannot open " + path.string());
    try {
        return load_operator(nlohmann::json::parse(in));
    } catch (const nlohmann::json::parse_error& e) {
        throw MalformedSpec("picard_fuchs.load_operator", path.string() + ": " + e.what());
    }
}

nlohmann::ordered_json to_json(const PFOperator& op)
{
    nlohmann::ordered_json j;
    j["name"] = op.name;
    j["rank"] = op.rank;
    auto rows = nlohmann::ordered_json::array();
    for (const auto& a : op.delta_coefficients) {
        auto row = nlohmann::ordered_json::array();
        for (const auto& c : a) {
            if (c.fits_slong_p() && abs(c) < (Integer(1) << 53)) row.push_back(c.get_si());
            else row.push_back(c.get_str());
        }
        rows.push_back(std::move(row));
    }
    j["delta_coefficients"] = std::move(rows);
    if (op.n0) j["n0"] = op.n0->get_num().get_str();
    if (op.declared_N) j["N"] = op.declared_N->get_str();
    if (op.coordinate_scale) j["coordinate_scale"] = to_string(*op.coordinate_scale);
    return j;
}

namespace {

// Polynomials in rho truncated mod rho^r.
using Jet = std::vector<Rational>;

Jet jet_mul(const Jet& a, const Jet& b)
{
    const std::size_t r = a.size();
    Jet c(r);
    for (std::size_t i = 0; i < r; ++i) {
        if (a[i] == 0) continue;
        for (std::size_t j = 0; i + j < r; ++j)
            if (b[j] != 0) c[i + j] += a[i] * b[j];
    }
    return c;
}

// P(c + rho) for P(x) = sum_i coeffs[i] x^i.
Jet jet_eval_shift(const std::vector<Integer>& coeffs, const Rational& c, std::size_t r)
{
    Jet result(r);
    Jet power(r);
    power[0] = 1;
    const Jet linear = [&] {
        Jet l(r);
        l[0] = c;
        if (r > 1) l[1] = 1;
        return l;
    }();
    for (std::size_t i = 0; i < coeffs.size(); ++i) {
        if (coeffs[i] != 0)
            for (std::size_t k = 0; k < r; ++k) result[k] += Rational(coeffs[i]) * power[k];
        if (i + 1 < coeffs.size()) power = jet_mul(power, linear);
    }
    return result;
}

// 1 / (m + rho)^r.
Jet jet_inverse_power(unsigned long m, std::size_t r)
{
    Jet inv(r);
    Rational term(1, m);
    for (std::size_t j = 0; j < r; ++j) {
        inv[j] = term;
        term /= -static_cast<long>(m);
    }
    Jet result(r);
    result[0] = 1;
    for (std::size_t k = 0; k < r; ++k) result = jet_mul(result, inv);
    return result;
}

} // namespace

// Frobenius ansatz y(rho, t) = sum_n A_n(rho) t^{n + rho}, A_0 = 1, with
// A_m(rho) (m + rho)^r = -sum_{s=1}^{m} A_{m-s}(rho) P_s(m - s + rho) and
// P_s(x) = sum_i a_{i,s} x^i. The rho^k component of A_n is [t^n] g_k.
SolutionBasis frobenius_solutions(const PFOperator& op, std::size_t order)
{
    validate(op);
    if (order < 2) throw Error("picard_fuchs.frobenius_solutions", "order must be at least 2");
    const std::size_t r = op.rank;
    const std::size_t deg = op.max_degree();

    // P_s as coefficient lists in x, s = 0..deg.
    std::vector<std::vector<Integer>> P(deg + 1, std::vector<Integer>(r + 1));
    for (std::size_t i = 0; i <= r; ++i)
        for (std::size_t s = 0; s < op.delta_coefficients[i].size(); ++s) P[s][i] = op.delta_coefficients[i][s];

    std::vector<Jet> A(order, Jet(r));
    A[0][0] = 1;
    for (std::size_t m = 1; m < order; ++m) {
        Jet rhs(r);
        for (std::size_t s = 1; s <= std::min(m, deg); ++s) {
            const Jet shifted = jet_eval_shift(P[s], Rational(static_cast<unsigned long>(m - s)), r);
            const Jet term = jet_mul(A[m - s], shifted);
            for (std::size_t k = 0; k < r; ++k) rhs[k] -= term[k];
        }
        A[m] = jet_mul(rhs, jet_inverse_power(m, r));
    }

    SolutionBasis basis;
    basis.op = op;
    basis.order = order;
    for (std::size_t k = 0; k < r; ++k) {
        std::vector<Rational> c(order);
        for (std::size_t n = 0; n < order; ++n) c[n] = A[n][k];
        basis.g.emplace_back(std::move(c), order);
    }
    for (std::size_t k = 0; k < r; ++k) {
        std::vector<RationalSeries> parts;
        Integer factorial = 1;
        for (std::size_t j = 0; j <= k; ++j) {
            if (j > 0) factorial *= static_cast<unsigned long>(j);
            parts.push_back(scale(basis.g[k - j], Rational(Integer(1), factorial)));
        }
        basis.y.emplace_back(std::move(parts));
    }
    return basis;
}

LogSeries residual(const PFOperator& op, const LogSeries& y)
{
    const std::size_t n = y.order();
    LogSeries result{RationalSeries(n)};
    LogSeries power = y;
    for (std::size_t i = 0; i <= op.rank; ++i) {
        if (i > 0) power = delta_log(power);
        result = add(result, mul(op.coefficient_series(i, n), power));
    }
    return result;
}

MonodromyMatrix monodromy_matrix(const SolutionBasis& basis)
{
    constexpr const char* where = "picard_fuchs.monodromy_matrix";
    const std::size_t r = basis.y.size();
    if (r < 2) throw RankCheckFailed(where, "basis has fewer than two solutions");
    MonodromyMatrix m;
    m.N = RationalMatrix::Zero(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(r));

    // Peel coordinates off from the top log power: y_j has L^j part g_0 / j!.
    for (std::size_t k = 0; k < r; ++k) {
        LogSeries rest = d_dlog(basis.y[k]);
        for (std::size_t j = r; j-- > 0;) {
            const RationalSeries top = rest.part(j);
            if (top.is_zero()) continue;
            const RationalSeries& lead = basis.y[j].parts().back();
            const Rational c = top[0] / lead[0];
            m.N(static_cast<Eigen::Index>(j), static_cast<Eigen::Index>(k)) = c;
            rest = add(rest, scale(basis.y[j], -c));
        }
        if (!rest.is_zero())
            throw RankCheckFailed(where, "d/dL y_" + std::to_string(k) + " is not in the span of the basis");
    }

    RationalMatrix power = RationalMatrix::Identity(m.N.rows(), m.N.cols());
    for (std::size_t j = 0; j <= r; ++j) {
        m.power_ranks.push_back(exact_rank(power));
        if (m.nilpotency_index == 0 && m.power_ranks.back() == 0) m.nilpotency_index = j;
        power = power * m.N;
    }
    if (m.power_ranks[r] != 0 || m.power_ranks[r - 1] != 1 || (r >= 2 && m.power_ranks[r - 2] != 2))
        throw RankCheckFailed(where, "monodromy is not maximally unipotent");
    return m;
}

MirrorMap mirror_map(const SolutionBasis& basis)
{
    if (basis.g.size() < 2) throw Error("picard_fuchs.mirror_map", "rank must be at least 2");
    const std::size_t n = basis.order;
    const RationalSeries t = RationalSeries::monomial(Rational(1), 1, n + 1);
    MirrorMap mm;
    mm.order = n;
    mm.q_of_t = mul(t, exp_series(divide(basis.g[1], basis.g[0])));
    mm.t_of_q = reversion(mm.q_of_t);
    mm.monodromy_order = mm.q_of_t.valuation();
    return mm;
}

} // namespace mirrorcert
