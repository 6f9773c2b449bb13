#ifndef NEFCERT_JSON_IO_HPP
#define NEFCERT_JSON_IO_HPP

#include <stdexcept>
#include <string>

#include "certificate.hpp"
#include "cone.hpp"
#include "divisor.hpp"

namespace nefcert {

/* Malformed or out-of-schema input (CLI exit code 2). */
class ParseError : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

/* Divisor files: {"schema":1,"n":int,"coeffs":{"2":"p/q",...}}; the
 * schema field is optional on input, missing coefficients default to 0,
 * unknown keys are rejected. */
SymmetricDivisor parse_divisor(const std::string& bytes);
std::string emit_divisor(const SymmetricDivisor& L);

/* Certificate files; emission is deterministic (sorted keys, canonical
 * rationals, canonical entry order), so equal certificates produce
 * byte-identical files. Unknown schema versions and unknown fields are
 * rejected. */
NefCertificate parse_certificate(const std::string& bytes);
std::string emit_certificate(const NefCertificate& cert);

std::string emit_fnef_report(int n, const FnefResult& result);
std::string emit_certify_failures(const std::vector<CertifyFailure>& failures);
std::string emit_verify_report(const VerifyOutcome& outcome);
std::string emit_rays(const ConeDescription& cone);
/* b-map keyed by canonical side ("1,4"); degenerate marker for strata
 * of length <= 2. */
std::string emit_pullback(const FFunction& f, const Partition& lambda);
std::string emit_bound(int k);

}  // namespace nefcert

#endif
