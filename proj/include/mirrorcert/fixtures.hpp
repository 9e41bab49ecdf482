#pragma once

#include "mirrorcert/picard_fuchs.hpp"

#include <string>
#include <vector>

namespace mirrorcert {

// delta^r - C t prod_i (delta + a_i), cleared to integer coefficients:
// prod_i (delta + k_i/m_i) = prod_i (m_i delta + k_i) / prod_i m_i, so
// C / prod_i m_i must be an integer (MalformedSpec otherwise).
PFOperator hypergeometric_operator(std::string name, const std::vector<Rational>& a, const Integer& C,
                                   std::optional<Rational> n0 = std::nullopt,
                                   std::optional<Integer> N = std::nullopt);

// Built-in operators: "quintic" with explicit coefficients, and the
// hypergeometric one-parameter threefold families.
std::vector<std::string> fixture_names();

// Throws MalformedSpec for an unknown name.
PFOperator fixture(const std::string& name);

} // namespace mirrorcert
