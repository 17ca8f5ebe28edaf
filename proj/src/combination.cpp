#include "evidfuse/combination.hpp"

#include <map>

namespace evidfuse {

namespace {

using GroundMasses = std::map<std::uint32_t, double>;  // keyed by bits, 0 = empty set

GroundMasses to_ground(const MassFunction& m) {
    GroundMasses g;
    for (const auto& [set, mass] : m.support()) g[set.bits()] = mass;
    return g;
}

// One unnormalized conjunctive step; the empty set stays a tracked key, which
// keeps the fold exactly equal to the n-ary combination.
GroundMasses conjunctive_step(const GroundMasses& a, const GroundMasses& b) {
    GroundMasses out;
    for (const auto& [ba, ma] : a)
        for (const auto& [bb, mb] : b)
            out[ba & bb] += ma * mb;
    return out;
}

MassFunction normalize_surviving(const Frame& frame, const GroundMasses& g) {
    double surviving = 0.0;
    for (const auto& [bits, mass] : g)
        if (bits != 0) surviving += mass;
    if (surviving <= kTotalConflictEps)
        throw TotalConflictError("fusion undefined (K=1)");
    std::vector<std::pair<FocalSet, double>> entries;
    for (const auto& [bits, mass] : g)
        if (bits != 0) entries.emplace_back(FocalSet(frame, bits), mass / surviving);
    return make_mass(frame, std::move(entries));
}

}  // namespace

double conflict(const MassFunction& m1, const MassFunction& m2) {
    if (!(m1.frame() == m2.frame()))
        throw ValidationError("cannot combine evidences over different frames");
    double k = 0.0;
    for (const auto& [f1, v1] : m1.support())
        for (const auto& [f2, v2] : m2.support())
            if (intersect(f1, f2).is_empty()) k += v1 * v2;
    return k;
}

MassFunction dcr_pairwise(const MassFunction& m1, const MassFunction& m2) {
    if (!(m1.frame() == m2.frame()))
        throw ValidationError("cannot combine evidences over different frames");
    return normalize_surviving(m1.frame(), conjunctive_step(to_ground(m1), to_ground(m2)));
}

MassFunction dcr_nary(const EvidenceSet& evidence) {
    const Frame& frame = common_frame(evidence);
    (void)frame;
    MassFunction out = evidence.front();
    for (std::size_t i = 1; i < evidence.size(); ++i)
        out = dcr_pairwise(out, evidence[i]);
    return out;
}

MassFunction same_focal_product(const EvidenceSet& evidence) {
    const Frame& frame = common_frame(evidence);
    if (evidence.size() == 1) return evidence.front();

    std::vector<std::pair<FocalSet, double>> entries;
    double total = 0.0;
    for (const auto& [set, mass] : evidence.front().support()) {
        double product = mass;
        for (std::size_t i = 1; i < evidence.size() && product > 0.0; ++i)
            product *= evidence[i].mass(set);
        if (product > 0.0) {
            entries.emplace_back(set, product);
            total += product;
        }
    }
    if (total <= kTotalConflictEps)
        throw TotalConflictError("fusion undefined (no common focal element)");
    for (auto& [set, mass] : entries) mass /= total;
    return make_mass(frame, std::move(entries));
}

MassFunction yager_nary(const EvidenceSet& evidence) {
    const Frame& frame = common_frame(evidence);
    if (evidence.size() < 2)
        throw ValidationError("Yager combination needs at least two evidences");

    GroundMasses g = to_ground(evidence.front());
    for (std::size_t i = 1; i < evidence.size(); ++i)
        g = conjunctive_step(g, to_ground(evidence[i]));

    // single final reassignment of all conflict mass to the full frame
    const std::uint32_t full = FocalSet::full_set(frame).bits();
    if (auto it = g.find(0); it != g.end()) {
        g[full] += it->second;
        g.erase(it);
    }
    std::vector<std::pair<FocalSet, double>> entries;
    for (const auto& [bits, mass] : g)
        if (mass > 0.0) entries.emplace_back(FocalSet(frame, bits), mass);
    return make_mass(frame, std::move(entries));
}

}  // namespace evidfuse
