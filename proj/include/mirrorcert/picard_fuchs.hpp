#pragma once

#include "mirrorcert/log_series.hpp"
#include "mirrorcert/matrix.hpp"
#include "mirrorcert/series.hpp"

#include "json.hpp"

#include <filesystem>
#include <optional>
#include <string>
#include <vector>

namespace mirrorcert {

// L = sum_i a_i(t) delta^i with integer polynomial coefficients, normalized at
// a point of maximal unipotent monodromy t = 0: a_i(0) = 0 for i < rank and
// a_rank(0) = 1, so the indicial polynomial is rho^rank.
struct PFOperator {
    std::string name;
    std::size_t rank = 0;
    // delta_coefficients[i][s] = coefficient of t^s in a_i.
    std::vector<std::vector<Integer>> delta_coefficients;
    // Classical Yukawa constant (triple intersection number).
    std::optional<Rational> n0;
    // Declared denominator bound N.
    std::optional<Integer> declared_N;
    // Preferred coordinate t' = scale * t, if any.
    std::optional<Rational> coordinate_scale;

    // a_i as a series of the given order.
    RationalSeries coefficient_series(std::size_t i, std::size_t order) const;
    std::size_t max_degree() const;
};

// Throws NotMUM naming the first offending a_i(0), MalformedSpec on shape
// errors.
void validate(const PFOperator& op);

PFOperator load_operator(const nlohmann::json& doc);
PFOperator load_operator_file(const std::filesystem::path& path);
nlohmann::ordered_json to_json(const PFOperator& op);

// Frobenius basis at t = 0: y_k = sum_{j<=k} g_{k-j} L^j / j!.
struct SolutionBasis {
    PFOperator op;
    std::size_t order = 0;
    std::vector<RationalSeries> g;
    std::vector<LogSeries> y;

    const RationalSeries& y0() const { return g.front(); }
};

SolutionBasis frobenius_solutions(const PFOperator& op, std::size_t order);

// L applied to y.
LogSeries residual(const PFOperator& op, const LogSeries& y);

// The monodromy logarithm d/dL written in the basis y_0..y_{r-1}:
// column k holds the coordinates of d/dL y_k.
struct MonodromyMatrix {
    RationalMatrix N;
    // rank of N^j for j = 0..r.
    std::vector<std::size_t> power_ranks;
    std::size_t nilpotency_index = 0;
};

// Throws RankCheckFailed if d/dL leaves the span of the basis or the ranks
// of N^{r-1}, N^{r-2} are not 1, 2.
MonodromyMatrix monodromy_matrix(const SolutionBasis& basis);

// q(t) = t exp(g_1 / g_0) in the gauge q'(0) = 1, and its inverse t(q).
// Both carry precision order + 1; `monodromy_order` is ord_0 q.
struct MirrorMap {
    std::size_t order = 0;
    RationalSeries q_of_t;
    RationalSeries t_of_q;
    std::size_t monodromy_order = 1;
};

MirrorMap mirror_map(const SolutionBasis& basis);

} // namespace mirrorcert
