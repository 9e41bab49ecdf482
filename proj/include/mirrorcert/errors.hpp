#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace mirrorcert {

// Base of every library error. `where()` names the module and operation that
// raised it, e.g. "series_core.invert"; the CLI prints it in diagnostics.
class Error : public std::runtime_error {
public:
    Error(std::string where, const std::string& what)
        : std::runtime_error(what), where_(std::move(where)) {}

    const std::string& where() const noexcept { return where_; }

private:
    std::string where_;
};

#define MIRRORCERT_DEFINE_ERROR(Name)                                   \
    class Name : public Error {                                          \
    public:                                                              \
        using Error::Error;                                              \
    }

// series_core
MIRRORCERT_DEFINE_ERROR(ZeroLeadingCoefficient);
MIRRORCERT_DEFINE_ERROR(CompositionValuation);
MIRRORCERT_DEFINE_ERROR(ReversionValuation);
MIRRORCERT_DEFINE_ERROR(ExpConstantTerm);
MIRRORCERT_DEFINE_ERROR(LogConstantTerm);
MIRRORCERT_DEFINE_ERROR(ParseError);

// padic_core
MIRRORCERT_DEFINE_ERROR(NotPrime);

// picard_fuchs
MIRRORCERT_DEFINE_ERROR(MalformedSpec);
MIRRORCERT_DEFINE_ERROR(NotMUM);
MIRRORCERT_DEFINE_ERROR(RankCheckFailed);

// yukawa_instanton
MIRRORCERT_DEFINE_ERROR(NotRankFour);
MIRRORCERT_DEFINE_ERROR(NonIntegrableRHS);
MIRRORCERT_DEFINE_ERROR(InsufficientOrder);

// certify / cli
MIRRORCERT_DEFINE_ERROR(OrderMismatch);
MIRRORCERT_DEFINE_ERROR(IOError);
MIRRORCERT_DEFINE_ERROR(ConfigError);

#undef MIRRORCERT_DEFINE_ERROR

// Raised by padic::reduce_series when a coefficient is not p-integral.
class NegativeValuation : public Error {
public:
    NegativeValuation(std::string where, std::size_t index, long valuation)
        : Error(std::move(where),
                "coefficient " + std::to_string(index) + " has negative valuation " +
                    std::to_string(valuation)),
          index_(index), valuation_(valuation) {}

    std::size_t index() const noexcept { return index_; }
    long valuation() const noexcept { return valuation_; }

private:
    std::size_t index_;
    long valuation_;
};

} // namespace mirrorcert
