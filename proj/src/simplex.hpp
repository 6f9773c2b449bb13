#ifndef NEFCERT_SIMPLEX_HPP
#define NEFCERT_SIMPLEX_HPP

#include <optional>
#include <vector>

#include "rational.hpp"

namespace nefcert {

/* One linear constraint a . x >= rhs or a . x == rhs on free variables. */
struct LinRow {
    std::vector<Rat> a;
    Rat rhs;
    bool equality = false;
};

/* Exact phase-1 simplex feasibility for a system of LinRows over free
 * (sign-unrestricted) variables.
 *
 * Free variables are split x = u - v, inequalities get a surplus
 * variable, every row gets an artificial, and the artificial sum is
 * minimized with Bland's smallest-index pivot rule, which guarantees
 * termination and makes the returned point a deterministic function of
 * the input. Returns a feasible x, or nullopt when the system is
 * infeasible (exact decision, no tolerances).
 */
std::optional<std::vector<Rat>> phase1_feasible_point(int num_vars,
                                                      const std::vector<LinRow>& rows);

}  // namespace nefcert

#endif
