#include "mirrorcert/fixtures.hpp"

#include <algorithm>

namespace mirrorcert {

PFOperator hypergeometric_operator(std::string name, const std::vector<Rational>& a, const Integer& C,
                                   std::optional<Rational> n0, std::optional<Integer> N)
{
    constexpr const char* where = "cli.fixture";
    const std::size_t r = a.size();
    if (r < 2) throw MalformedSpec(where, "need at least two hypergeometric parameters");

    // prod_i (m_i delta + k_i) as coefficients in delta, then scaled.
    std::vector<Integer> prod{1};
    Integer denominator = 1;
    for (const auto& ai : a) {
        const Integer k = ai.get_num(), m = ai.get_den();
        std::vector<Integer> next(prod.size() + 1);
        for (std::size_t i = 0; i < prod.size(); ++i) {
            next[i] += prod[i] * k;
            next[i + 1] += prod[i] * m;
        }
        prod = std::move(next);
        denominator *= m;
    }
    if (C % denominator != 0)
        throw MalformedSpec(where, "C = " + C.get_str() + " is not divisible by " + denominator.get_str());
    const Integer factor = C / denominator;

    PFOperator op;
    op.name = std::move(name);
    op.rank = r;
    op.delta_coefficients.assign(r + 1, std::vector<Integer>(2));
    for (std::size_t i = 0; i <= r; ++i) op.delta_coefficients[i][1] = -factor * prod[i];
    op.delta_coefficients[r][0] = 1;
    op.n0 = std::move(n0);
    op.declared_N = std::move(N);
    validate(op);
    return op;
}

namespace {

PFOperator quintic()
{
    PFOperator op;
    op.name = "quintic";
    op.rank = 4;
    op.delta_coefficients = {{0, -120}, {0, -1250}, {0, -4375}, {0, -6250}, {1, -3125}};
    op.n0 = Rational(5);
    op.declared_N = Integer(30);
    return op;
}

struct FamilyRow {
    const char* name;
    std::vector<Rational> a;
    long C;
    long n0;
    long N;
};

// N collects 2, 3 and the primes of C.
const std::vector<FamilyRow>& families()
{
    static const std::vector<FamilyRow> rows = {
        {"sextic", {Rational(1, 6), Rational(1, 3), Rational(2, 3), Rational(5, 6)}, 11664, 3, 6},
        {"octic", {Rational(1, 8), Rational(3, 8), Rational(5, 8), Rational(7, 8)}, 65536, 2, 6},
        {"dectic", {Rational(1, 10), Rational(3, 10), Rational(7, 10), Rational(9, 10)}, 800000, 1, 30},
        {"intersection-33", {Rational(1, 3), Rational(1, 3), Rational(2, 3), Rational(2, 3)}, 729, 9, 6},
        {"intersection-2222", {Rational(1, 2), Rational(1, 2), Rational(1, 2), Rational(1, 2)}, 256, 16, 6},
    };
    return rows;
}

} // namespace

std::vector<std::string> fixture_names()
{
    std::vector<std::string> names{"quintic"};
    for (const auto& f : families()) names.emplace_back(f.name);
    return names;
}

PFOperator fixture(const std::string& name)
{
    if (name == "quintic") return quintic();
    for (const auto& f : families())
        if (name == f.name)
            return hypergeometric_operator(f.name, f.a, Integer(f.C), Rational(f.n0), Integer(f.N));
    throw MalformedSpec("cli.fixture", "unknown fixture '" + name + "'");
}

} // namespace mirrorcert
