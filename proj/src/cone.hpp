#ifndef NEFCERT_CONE_HPP
#define NEFCERT_CONE_HPP

#include <cstdint>
#include <stdexcept>
#include <vector>

#include "divisor.hpp"
#include "partition.hpp"
#include "rational.hpp"

namespace nefcert {

/* Linear form in (c_2, ..., c_{n/2}) from expanding one F-inequality;
 * quads lists every quad inducing this exact form. */
struct FacetForm {
    std::vector<Int> coeffs;
    std::vector<FQuad> quads;
};

/* H- (and optionally V-) description of the symmetric F-nef cone. */
struct ConeDescription {
    int n;
    int dim;                            // n/2 - 1
    std::vector<FacetForm> facets;      // deduplicated, lexicographic order
    std::vector<std::vector<Int>> rays; // primitive, lexicographic order; empty if not computed
};

/* Expand every quad of n into its facet form and deduplicate. n >= 4. */
ConeDescription facet_system(int n);

/* Facets plus the complete extremal ray list, by the double description
 * method over exact rationals. Guarded to dim <= 20. Throws if the facet
 * normals do not span (the cone would contain a line). */
ConeDescription extremal_rays(int n);

/* Thrown when enumeration exceeds an explicit ray budget. The ray count
 * of this cone grows steeply with n (10110 rays already at n = 24), so
 * batch consumers pass a budget instead of hanging. */
class RayBudgetExceeded : public std::runtime_error {
  public:
    RayBudgetExceeded(int n, std::size_t budget);
    const int n;
    const std::size_t budget;
};

/* As extremal_rays, but aborts with RayBudgetExceeded as soon as the
 * working ray list grows past max_rays. */
ConeDescription extremal_rays(int n, std::size_t max_rays);

Rat evaluate_form(const std::vector<Int>& form, const std::vector<Rat>& point);

/* Deterministic F-nef divisor: a seed-driven nonnegative integer
 * combination of the extremal rays (not all zero). */
SymmetricDivisor sample_fnef(int n, std::uint64_t seed);
SymmetricDivisor sample_fnef(const ConeDescription& cone, std::uint64_t seed);

/* Divisor with coordinates (c_2,...,c_{n/2}) given by an integer vector. */
SymmetricDivisor divisor_from_coordinates(int n, const std::vector<Int>& coords);

}  // namespace nefcert

#endif
