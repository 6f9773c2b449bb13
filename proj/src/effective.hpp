#ifndef NEFCERT_EFFECTIVE_HPP
#define NEFCERT_EFFECTIVE_HPP

#include <cstdint>
#include <map>
#include <optional>
#include <vector>

#include "divisor.hpp"

namespace nefcert {

/* Decide whether E = -sum b_{I,J} Delta_{I,J} is an effective boundary:
 * search for w with  cut_w(I) >= b_I on proper splits and equality on the
 * m non-proper ones. Exact decision; the returned w is a deterministic
 * function of E. nullopt means no such w exists. */
std::optional<WeightCertificate> find_certificate(const BoundaryExpression& E);

struct ConstraintViolation {
    std::uint64_t side_mask;
    bool equality;  // non-proper split
    Rat cut;        // attained cut value
    Rat bound;      // required b_{I,J}
};

struct CertificateReport {
    bool ok;
    std::vector<ConstraintViolation> violations;  // in split index order
};

/* Re-check every split constraint of E against w. Pure, exact. */
CertificateReport verify_certificate(const BoundaryExpression& E, const WeightCertificate& w);

/* The nonnegative combination sum c_{I,J} Delta_{I,J} equal to E's class,
 * read off a valid certificate: c_{I,J} = cut_w(I) - b_{I,J} on proper
 * splits. Throws if w does not verify. */
struct EffectiveCombination {
    int m;
    std::map<std::uint64_t, Rat> coeffs;  // canonical proper side -> coefficient >= 0
};

EffectiveCombination effective_combination(const BoundaryExpression& E,
                                           const WeightCertificate& w);

enum class Feasibility { Feasible, Infeasible };

/* Independent oracle: decide the same system by Gaussian substitution of
 * the equalities followed by Fourier-Motzkin elimination. Exponential in
 * the worst case, so guarded to m <= 6. */
Feasibility feasible_by_elimination(const BoundaryExpression& E);

}  // namespace nefcert

#endif
