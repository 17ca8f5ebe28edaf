#include "evidfuse/idcr.hpp"

#include <cmath>
#include <iostream>

namespace evidfuse {

MassFunction average_bpa(const EvidenceSet& evidence) {
    const Frame& frame = common_frame(evidence);
    Eigen::VectorXd sum = Eigen::VectorXd::Zero((1LL << frame.cardinality()) - 1);
    for (const auto& m : evidence) sum += as_vector(m);
    return from_vector(frame, sum / static_cast<double>(evidence.size()));
}

double distance_to_average(const MassFunction& m, const MassFunction& avg) {
    if (!(m.frame() == avg.frame()))
        throw ValidationError("distance needs both mass functions on one frame");
    return (as_vector(m) - as_vector(avg)).norm();
}

double similarity(double distance) {
    return distance >= 1.0 ? 0.0 : 1.0 - distance;
}

Eigen::VectorXd support_degrees(const Eigen::VectorXd& similarities) {
    if (similarities.size() == 0)
        throw ValidationError("no similarities to normalize");
    const double total = similarities.sum();
    if (total == 0.0) {
        std::cerr << "warning: all similarities are zero; using uniform support degrees\n";
        return Eigen::VectorXd::Constant(similarities.size(),
                                         1.0 / static_cast<double>(similarities.size()));
    }
    return similarities / total;
}

Eigen::VectorXd credibility_weights(const Eigen::VectorXd& supports,
                                    const Eigen::VectorXd& entropies) {
    if (supports.size() != entropies.size())
        throw ValidationError("supports and entropies differ in length");
    const Eigen::VectorXd scored = supports.cwiseProduct(entropies);
    const double total = scored.sum();
    if (total == 0.0) return supports;  // categorical evidence: entropy carries no signal
    return scored / total;
}

MassFunction modified_bpa(const EvidenceSet& evidence, const Eigen::VectorXd& weights) {
    const Frame& frame = common_frame(evidence);
    if (static_cast<std::size_t>(weights.size()) != evidence.size())
        throw ValidationError("one weight per evidence required");
    if (std::abs(weights.sum() - 1.0) > 1e-9)
        throw ValidationError("weights must sum to 1");
    Eigen::VectorXd coords = Eigen::VectorXd::Zero((1LL << frame.cardinality()) - 1);
    for (std::size_t i = 0; i < evidence.size(); ++i)
        coords += weights[static_cast<Eigen::Index>(i)] * as_vector(evidence[i]);
    return from_vector(frame, coords);
}

FusionReport idcr_fuse(const EvidenceSet& evidence, CombinationMode mode) {
    if (evidence.size() < 2)
        throw ValidationError("iDCR needs at least two evidences");
    const auto n = static_cast<Eigen::Index>(evidence.size());

    MassFunction average = average_bpa(evidence);
    Eigen::VectorXd distances(n), similarities_v(n), entropies(n);
    for (Eigen::Index i = 0; i < n; ++i) {
        distances[i] = distance_to_average(evidence[static_cast<std::size_t>(i)], average);
        similarities_v[i] = similarity(distances[i]);
        entropies[i] = weighted_deng_entropy(evidence[static_cast<std::size_t>(i)]);
    }
    Eigen::VectorXd supports = support_degrees(similarities_v);
    Eigen::VectorXd weights = credibility_weights(supports, entropies);
    MassFunction modified = modified_bpa(evidence, weights);

    EvidenceSet copies(evidence.size(), modified);
    MassFunction fused = mode == CombinationMode::same_focal ? same_focal_product(copies)
                                                             : dcr_nary(copies);
    return FusionReport{std::move(average), std::move(distances), std::move(similarities_v),
                        std::move(supports), std::move(entropies), std::move(weights),
                        std::move(modified), std::move(fused), mode};
}

}  // namespace evidfuse
