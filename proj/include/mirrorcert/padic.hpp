#pragma once

#include "mirrorcert/series.hpp"

#include <limits>
#include <optional>
#include <string>

namespace mirrorcert::padic {

// v_p(x); nullopt stands for +infinity (x == 0).
struct Valuation {
    long prime = 2;
    std::optional<long> value;

    bool is_infinite() const noexcept { return !value.has_value(); }
    bool at_least(long k) const noexcept { return !value || *value >= k; }

    // Integer, or "inf".
    std::string to_string() const;

    friend bool operator==(const Valuation&, const Valuation&) = default;
};

// Throws NotPrime.
void require_prime(long p, const char* where);

Valuation valuation(const Rational& x, long p);

// v_p(x) >= 0.
bool is_integral(const Rational& x, long p);

// f(t^p), guaranteed to p(order-1)+1 and capped at `cap`.
RationalSeries frobenius_substitute(const RationalSeries& f, long p,
                                    std::size_t cap = std::numeric_limits<std::size_t>::max());

// Coefficients in Z/p^k. `exact_lift` records that the residues came from an
// exact p-integral rational series through operations that preserve it.
struct PadicSeries {
    long prime = 2;
    unsigned precision = 20;
    IntegerSeries residues;
    bool exact_lift = false;

    Integer modulus() const;

    friend bool operator==(const PadicSeries&, const PadicSeries&) = default;
};

inline constexpr unsigned default_precision = 20;

// x mod p^k for p-integral x. Throws NegativeValuation(index 0) otherwise.
Integer residue(const Rational& x, long p, unsigned k);

// Throws NegativeValuation naming the first coefficient with v_p < 0.
PadicSeries reduce_series(const RationalSeries& f, long p, unsigned k = default_precision);

// Arithmetic mod p^min(k_a, k_b); mixing primes is an error.
PadicSeries add(const PadicSeries& a, const PadicSeries& b);
PadicSeries sub(const PadicSeries& a, const PadicSeries& b);
PadicSeries mul(const PadicSeries& a, const PadicSeries& b);
PadicSeries delta(const PadicSeries& a);
PadicSeries frobenius_substitute(const PadicSeries& a,
                                 std::size_t cap = std::numeric_limits<std::size_t>::max());

} // namespace mirrorcert::padic
