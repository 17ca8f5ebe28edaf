#include "evidfuse/entropy.hpp"

#include <cmath>

namespace evidfuse {

double weighted_deng_entropy(const MassFunction& m) {
    const double card = static_cast<double>(m.frame().cardinality());
    double e = 0.0;
    for (const auto& [set, mass] : m.support()) {
        const double states = std::ldexp(1.0, static_cast<int>(set.cardinality())) - 1.0;
        e -= (static_cast<double>(set.cardinality()) * mass / card) * std::log2(mass / states);
    }
    return e;
}

}  // namespace evidfuse
