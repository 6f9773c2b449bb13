#ifndef NEFCERT_PULLBACK_HPP
#define NEFCERT_PULLBACK_HPP

#include "divisor.hpp"
#include "partition.hpp"

namespace nefcert {

/* Stratum pullback: the expression of b_lambda^* L on m = length(lambda)
 * markers, b_I = f(sum of lambda_t over t in I). Marker t carries part t
 * of lambda in stored (weakly decreasing) order.
 *
 * Lengths 1 and 2 yield the formal degenerate expressions (no and one
 * split); strata of length <= 2 carry no moduli and the pipeline records
 * them as degenerate rather than certifying them. */
BoundaryExpression pullback(const FFunction& f, const Partition& lambda);

inline bool degenerate_stratum(const Partition& lambda) { return lambda.length() <= 2; }

}  // namespace nefcert

#endif
