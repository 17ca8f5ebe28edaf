#include "evidfuse/mass_function.hpp"

#include <algorithm>
#include <cmath>
#include <map>

namespace evidfuse {

double MassFunction::mass(const FocalSet& f) const {
    auto it = std::lower_bound(masses_.begin(), masses_.end(), f,
                               [](const auto& entry, const FocalSet& key) { return entry.first < key; });
    if (it != masses_.end() && it->first == f) return it->second;
    return 0.0;
}

MassFunction make_mass(const Frame& frame, std::vector<std::pair<FocalSet, double>> entries) {
    std::map<std::uint32_t, double> merged;
    for (const auto& [set, mass] : entries) {
        if (set.frame_cardinality() != frame.cardinality())
            throw ValidationError("focal set was built for a different frame");
        if (!std::isfinite(mass))
            throw ValidationError("mass values must be finite");
        if (mass < 0.0)
            throw ValidationError("negative mass on a focal set");
        if (set.is_empty() && mass > 0.0)
            throw ValidationError("positive mass on the empty set");
        merged[set.bits()] += mass;
    }

    double sum = 0.0;
    for (const auto& [bits, mass] : merged) sum += mass;
    if (std::abs(sum - 1.0) > kMassSumTolerance)
        throw ValidationError("masses sum to " + std::to_string(sum) + ", expected 1");

    std::vector<std::pair<FocalSet, double>> support;
    support.reserve(merged.size());
    for (const auto& [bits, mass] : merged)
        if (mass > 0.0) support.emplace_back(FocalSet(frame, bits), mass / sum);
    return MassFunction(frame, std::move(support));
}

MassFunction vacuous(const Frame& frame) {
    return make_mass(frame, {{FocalSet::full_set(frame), 1.0}});
}

Eigen::VectorXd as_vector(const MassFunction& m) {
    const auto n = m.frame().cardinality();
    Eigen::VectorXd coords = Eigen::VectorXd::Zero((1LL << n) - 1);
    for (const auto& [set, mass] : m.support())
        coords[set.bits() - 1] = mass;
    return coords;
}

MassFunction from_vector(const Frame& frame, const Eigen::VectorXd& coords) {
    const auto n = frame.cardinality();
    if (coords.size() != (1LL << n) - 1)
        throw ValidationError("coordinate vector length does not match the frame's power set");
    std::vector<std::pair<FocalSet, double>> entries;
    for (Eigen::Index i = 0; i < coords.size(); ++i)
        if (coords[i] != 0.0)
            entries.emplace_back(FocalSet(frame, static_cast<std::uint32_t>(i + 1)), coords[i]);
    return make_mass(frame, std::move(entries));
}

const Frame& common_frame(const EvidenceSet& evidence) {
    if (evidence.empty())
        throw ValidationError("evidence set is empty");
    const Frame& frame = evidence.front().frame();
    for (const auto& m : evidence)
        if (!(m.frame() == frame))
            throw ValidationError("evidences use different frames");
    return frame;
}

}  // namespace evidfuse
