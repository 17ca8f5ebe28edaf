#pragma once

#include "evidfuse/mass_function.hpp"

namespace evidfuse {

// Weighted Deng entropy, in bits:
//   E_wd(m) = -sum_F (|F| * m(F) / |frame|) * log2(m(F) / (2^|F| - 1))
// Zero-mass focal sets contribute nothing (they are never stored).
double weighted_deng_entropy(const MassFunction& m);

}  // namespace evidfuse
