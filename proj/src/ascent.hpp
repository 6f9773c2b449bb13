#ifndef NEFCERT_ASCENT_HPP
#define NEFCERT_ASCENT_HPP

#include <optional>
#include <stdexcept>
#include <vector>

#include "divisor.hpp"
#include "effective.hpp"
#include "partition.hpp"
#include "pullback.hpp"

namespace nefcert {

/* One merge lambda -> mu with its marker correspondence.
 *
 * The merged pair sits at 0-based positions (p, q) of lambda (the first
 * two positions carrying the merged value). mu is the sorted merge;
 * to_mu[i] is the mu-position of lambda-marker i for i != q, with
 * to_mu[p] the position of the merged part 2a. The placement is the
 * stable descending sort of lambda with position q deleted and position
 * p rewritten to 2a, so equal parts keep their relative order and the
 * correspondence is reproducible from (lambda, a) alone. */
struct MergeStep {
    Partition lambda;
    Partition mu;
    int merged_value;         // a
    int p, q;                 // 0-based positions of the merged pair in lambda
    std::vector<int> to_mu;   // lambda position -> mu position; entry at q unused (-1)
};

MergeStep make_merge_step(const Partition& lambda, int v);

/* Thrown when an F-inequality required by an ascent step fails, i.e. the
 * ambient divisor is not F-nef on a quad {A,B,a,a} the step needs. */
class AscentQuadError : public std::runtime_error {
  public:
    AscentQuadError(FQuad quad, Rat value);
    const FQuad quad;
    const Rat value;
};

/* Lift a weight certificate across one merge: given w~ certifying
 * b_mu^* L, produce w certifying b_lambda^* L by
 *
 *   w(i,j)  = w~(i',j')                 i, j both outside the pair,
 *   w(p,x) = w(q,x) = w~(merged,x')/2   x outside the pair,
 *   w(p,q) = f(a) - f(2a)/2.
 *
 * The F-inequalities f_inequality_value(f, {A,B,a,a}) >= 0 are re-checked
 * for every achievable complementary sum A before lifting; a failure
 * raises AscentQuadError. Validity of w~ itself is the caller's
 * precondition. */
WeightCertificate ascend(const FFunction& f, const MergeStep& step,
                         const WeightCertificate& w_mu);

enum class Provenance { Feasibility, AscentChain, Degenerate };

struct PartitionCertificate {
    Partition lambda;
    Provenance provenance;
    std::optional<WeightCertificate> w;  // absent iff degenerate
    std::vector<ReductionStep> path;     // nonempty iff ascent-chain
};

/* Thrown when the strict base of a reduction path has no certificate
 * (its pullback is not an effective boundary). */
class StrictBaseInfeasible : public std::runtime_error {
  public:
    explicit StrictBaseInfeasible(Partition base);
    const Partition base;
};

/* Certify one stratum: degenerate for length <= 2, LP feasibility for
 * strict lambda, otherwise reduce to the strict base and ascend the base
 * certificate back up the reversed path. */
PartitionCertificate certify_partition(const FFunction& f, const Partition& lambda);

/* Audit a stored certificate for lambda by inverting the construction:
 * walk the deterministic reduction path downward, checking at each step
 * that the two merged rows agree, that the internal pair value is
 * exactly f(a) - f(2a)/2, and that the step's F-inequalities hold, then
 * exhaustively verify the recovered base certificate against the
 * recomputed base pullback. Returns an error description, or nullopt
 * when the certificate is valid. Independent of how w was produced. */
std::optional<std::string> audit_ascent_certificate(const FFunction& f,
                                                    const Partition& lambda,
                                                    const std::vector<ReductionStep>& path,
                                                    const WeightCertificate& w);

}  // namespace nefcert

#endif
