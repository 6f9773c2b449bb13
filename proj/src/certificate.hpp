#ifndef NEFCERT_CERTIFICATE_HPP
#define NEFCERT_CERTIFICATE_HPP

#include <optional>
#include <string>
#include <vector>

#include "ascent.hpp"
#include "cone.hpp"
#include "divisor.hpp"
#include "partition.hpp"

namespace nefcert {

enum class CertifyMode { StrictOnly, AllPartitions };

/* Identifiers of the deterministic choices baked into certificates, so
 * an auditor can re-derive reduction paths and witness order. */
inline constexpr const char* kReductionPolicy = "merge-largest-repeated-value";
inline constexpr const char* kEnumerationPolicy = "lex-decreasing";
inline constexpr const char* kToolName = "nefcert";
inline constexpr const char* kToolVersion = "0.1.0";

/* Complete dossier: one entry per partition of n (strict partitions only
 * in strict-only mode), in lexicographically decreasing partition order.
 * Lengths 1 and 2 are recorded as degenerate; every other entry carries
 * a weight certificate for its stratum pullback. */
struct NefCertificate {
    SymmetricDivisor divisor;
    CertifyMode mode;
    std::vector<PartitionCertificate> entries;
};

struct CertifyFailure {
    enum class Stage { Fnef, StrictBase };
    Stage stage;
    std::optional<FQuad> witness;     // F-nef stage: violating quad
    std::optional<Rat> value;         // its F-inequality value
    std::optional<Partition> lambda;  // strict-base stage: partition being certified
    std::optional<Partition> base;    // its infeasible strict base
};

struct CertifyOutcome {
    std::optional<NefCertificate> certificate;  // set iff failures empty
    std::vector<CertifyFailure> failures;       // deterministic enumeration order
};

/* Run the whole pipeline: F-nefness first (fail fast with the first
 * violating quad in enumeration order), then certify every partition in
 * scope. With exhaustive=true, collects every failure at the failing
 * stage instead of stopping at the first. */
CertifyOutcome certify(const SymmetricDivisor& L, CertifyMode mode, bool exhaustive = false);

struct VerifyOutcome {
    bool ok;
    std::string detail;                  // empty when ok
    std::optional<Partition> partition;  // offending entry, when entry-level
    std::size_t entries_checked = 0;
};

/* Independent audit: recomputes F-nefness, coverage, and every entry's
 * constraints from the embedded divisor alone. Trusts nothing but the
 * stored w values and merge paths, and re-derives the deterministic
 * reduction paths to check them. Reports the first discrepancy in entry
 * order. */
VerifyOutcome verify(const NefCertificate& cert);

/* Partitions in scope for a mode, in canonical (lex-decreasing) order. */
std::vector<Partition> coverage(int n, CertifyMode mode);

}  // namespace nefcert

#endif
