#pragma once

#include "evidfuse/mass_function.hpp"

namespace evidfuse {

// Surviving mass at or below this is treated as total conflict (K = 1).
inline constexpr double kTotalConflictEps = 1e-12;

// Conflict coefficient K: total product mass on empty intersections.
double conflict(const MassFunction& m1, const MassFunction& m2);

// Dempster's rule: conjunctive combination normalized by the surviving mass.
// Throws TotalConflictError when K = 1.
MassFunction dcr_pairwise(const MassFunction& m1, const MassFunction& m2);

// Sequential fold of dcr_pairwise; a single evidence is returned unchanged.
MassFunction dcr_nary(const EvidenceSet& evidence);

// Product of the masses all evidences put on the *same* focal element,
// normalized over the common support. Throws TotalConflictError when the
// supports share no focal element.
MassFunction same_focal_product(const EvidenceSet& evidence);

// Yager's rule, n-ary over the originals: conjunctive combination without
// normalization; all conflict mass is assigned to the full frame.
MassFunction yager_nary(const EvidenceSet& evidence);

}  // namespace evidfuse
