#pragma once

#include "mirrorcert/padic.hpp"
#include "mirrorcert/picard_fuchs.hpp"

#include "json.hpp"

#include <optional>
#include <string>

namespace mirrorcert {

enum class Verdict { pass, fail };

std::string to_string(Verdict v);

// First coefficient of a witness (or defect) with too small a valuation.
struct Failure {
    std::size_t index = 0;
    long valuation = 0;

    friend bool operator==(const Failure&, const Failure&) = default;
};

// Dwork's lemma for q = t u: h = (1/p) log(u(t^p) / u(t)^p) lies in Z_p[[t]]
// iff every coefficient of u(t^p)/u(t)^p - 1 is divisible by p.
struct DworkCertificate {
    long prime = 0;
    std::size_t order = 0;
    RationalSeries witness; // h
    Verdict verdict = Verdict::fail;
    std::optional<Failure> failure;
    // u(0); u is normalized by it before the test.
    Rational unit_constant = 1;
};

// Y(q) - Y(q^p) = delta^3 psi with psi in Z_p[[q]].
struct KSVCertificate {
    long prime = 0;
    std::size_t order = 0;
    RationalSeries witness; // psi
    Verdict verdict = Verdict::fail;
    std::optional<Failure> failure;
};

// Frobenius matrix entries in the adapted basis:
// delta m23 = Y(q) - Y(q^p), m23 = -delta m13, delta m14 = 2 m13.
struct GaugeCertificate {
    struct Entry {
        RationalSeries series;
        Verdict verdict = Verdict::fail;
        std::optional<Failure> failure;
    };

    long prime = 0;
    std::size_t order = 0;
    Entry m13, m23, m14;
    Verdict verdict = Verdict::fail;
};

DworkCertificate dwork_certify(const RationalSeries& q_of_t, long p, std::size_t order);
DworkCertificate dwork_certify(const MirrorMap& mm, long p, std::size_t order);
KSVCertificate ksv_certify(const RationalSeries& Y, long p, std::size_t order);
GaugeCertificate gauge_certify(const RationalSeries& Y, long p, std::size_t order);

// Independent re-checks of the defining identities, exact up to the
// certificate's order:
//   exp(p h) u(t)^p - u(t^p) = 0,
//   delta^3 psi + Y(q^p) - Y(q) = 0,
//   the three gauge relations and (1/2) delta^3 m14 + Y(q) - Y(q^p) = 0.
bool verify_witness(const DworkCertificate& c, const RationalSeries& q_of_t);
bool verify_witness(const KSVCertificate& c, const RationalSeries& Y);
bool verify_witness(const GaugeCertificate& c, const RationalSeries& Y);

// The KSV identity recomputed in Z/p^k[[q]] from reduced Y and psi. Only
// meaningful for a passing certificate with p-integral Y.
bool modular_crosscheck(const KSVCertificate& c, const RationalSeries& Y,
                        unsigned k = padic::default_precision);

nlohmann::ordered_json to_json(const DworkCertificate& c);
nlohmann::ordered_json to_json(const KSVCertificate& c);
nlohmann::ordered_json to_json(const GaugeCertificate& c);

} // namespace mirrorcert
