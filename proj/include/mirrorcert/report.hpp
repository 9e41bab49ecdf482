#pragma once

#include "mirrorcert/certify.hpp"
#include "mirrorcert/yukawa.hpp"

#include "json.hpp"

#include <span>
#include <string>
#include <vector>

namespace mirrorcert {

// Everything computed from one operator at one working order.
struct PipelineOutputs {
    PFOperator op;
    std::size_t order = 0;
    std::size_t max_degree = 0;
    SolutionBasis basis;
    MirrorMap mirror;
    YukawaData yukawa;
    InstantonSeries instantons;
};

// Requires a rank-4 operator with n0 declared.
PipelineOutputs run_pipeline(const PFOperator& op, std::size_t order, std::size_t max_degree);

struct PrimeCertificates {
    long prime = 0;
    DworkCertificate dwork;
    KSVCertificate ksv;
    GaugeCertificate gauge;
    bool witnesses_verified = false;
    // Recomputation of the KSV identity mod p^20; false when not applicable.
    bool modular_crosscheck = false;

    bool passed() const;
};

// All three certificates for one prime, witnesses re-verified.
PrimeCertificates certify_prime(const PipelineOutputs& out, long p);

struct SkippedPrime {
    long prime = 0;
    std::string reason;
};

struct IntegralityReport {
    std::string operator_name;
    std::size_t order = 0;
    std::size_t max_degree = 0;
    std::vector<unsigned long> q_support;
    std::vector<unsigned long> n_support;
    std::vector<unsigned long> support; // union of the two
    Integer N_observed = 1;
    std::optional<Integer> declared_N;
    std::optional<Rational> q_prime_zero;
    std::vector<Rational> instantons;
    std::vector<PrimeCertificates> certified;
    std::vector<SkippedPrime> skipped;
    std::vector<std::string> violations;
    std::vector<std::string> notes;
    bool consistent = false;
};

std::vector<long> primes_up_to(long bound);

// Certifies every admissible candidate: p > rank, p not dividing a
// denominator of q(t), p not dividing the declared N. Candidates are
// processed concurrently and merged in ascending order. Throws OrderMismatch
// if the pipeline stages disagree on the working order.
IntegralityReport n_integrality_report(const PipelineOutputs& out, std::span<const long> candidates);

nlohmann::ordered_json to_json(const IntegralityReport& r);
std::string to_text(const IntegralityReport& r);
std::string to_csv(const IntegralityReport& r);

// d, n_d ("num/den"), denominator primes (';'-separated).
std::string instanton_csv(const InstantonSeries& inst);
nlohmann::ordered_json instanton_json(const InstantonSeries& inst);

// ';'-joined prime list, empty when none.
std::string join_primes(const std::vector<unsigned long>& primes);

} // namespace mirrorcert
