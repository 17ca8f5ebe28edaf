#include "evidfuse/diagnosis.hpp"

#include <cmath>

namespace evidfuse {

namespace {
constexpr double kDistanceFloor = 1e-9;
}

void validate_library(const ReferenceLibrary& lib) {
    if (lib.rows.size() != lib.frame.cardinality())
        throw ValidationError("reference library needs one feature row per fault type");
    const auto width = lib.rows.front().size();
    if (width == 0)
        throw ValidationError("reference rows have no features");
    for (const auto& row : lib.rows) {
        if (row.size() != width)
            throw ValidationError("reference feature rows are not rectangular");
        if (!row.allFinite())
            throw ValidationError("reference features must be finite");
    }
}

double feature_distance(const FeatureVector& obs, const FeatureVector& ref) {
    if (obs.size() != ref.size())
        throw ValidationError("feature vectors differ in length");
    return std::sqrt((obs - ref).cwiseAbs().sum());
}

MassFunction bpa_from_features(const FeatureVector& obs, const ReferenceLibrary& lib) {
    validate_library(lib);
    if (obs.size() != lib.rows.front().size())
        throw ValidationError("observation has the wrong feature count");
    if (!obs.allFinite())
        throw ValidationError("observed features must be finite");

    std::vector<std::pair<FocalSet, double>> entries;
    double total = 0.0;
    for (std::size_t i = 0; i < lib.rows.size(); ++i) {
        const double d = std::max(feature_distance(obs, lib.rows[i]), kDistanceFloor);
        entries.emplace_back(FocalSet::singleton(lib.frame, i), 1.0 / d);
        total += 1.0 / d;
    }
    for (auto& [set, mass] : entries) mass /= total;
    return make_mass(lib.frame, std::move(entries));
}

Decision decide(const MassFunction& m, double xi1, double xi2) {
    if (!(xi1 > 0.0 && xi1 < 1.0 && xi2 > 0.0 && xi2 < 1.0))
        throw ValidationError("decision thresholds must lie in (0,1)");
    const Frame& frame = m.frame();
    const FocalSet full = FocalSet::full_set(frame);
    for (const auto& [set, mass] : m.support())
        if (set.cardinality() != 1 && !(set == full))
            throw ValidationError("decision needs masses on single faults (plus optional ignorance)");

    // top two singletons; earlier frame position wins ties
    std::size_t top = 0;
    double top_mass = m.mass(FocalSet::singleton(frame, 0));
    for (std::size_t i = 1; i < frame.cardinality(); ++i) {
        const double mi = m.mass(FocalSet::singleton(frame, i));
        if (mi > top_mass) { top = i; top_mass = mi; }
    }
    bool has_runner = frame.cardinality() > 1;
    std::size_t runner = 0;
    double runner_mass = 0.0;
    if (has_runner) {
        bool first = true;
        for (std::size_t i = 0; i < frame.cardinality(); ++i) {
            if (i == top) continue;
            const double mi = m.mass(FocalSet::singleton(frame, i));
            if (first || mi > runner_mass) { runner = i; runner_mass = mi; first = false; }
        }
    }

    const double ignorance = m.mass(full);
    const double margin = top_mass - runner_mass;
    const bool fault = margin > xi1 && ignorance < xi2 && top_mass > ignorance;
    return Decision{fault ? Decision::Outcome::fault : Decision::Outcome::undecided,
                    FocalSet::singleton(frame, top),
                    has_runner ? FocalSet::singleton(frame, runner) : FocalSet::empty_set(frame),
                    margin, ignorance};
}

DiagnosisReport diagnose(const std::vector<FeatureVector>& sensors, const ReferenceLibrary& lib,
                         double xi1, double xi2, CombinationMode mode) {
    if (sensors.size() < 2)
        throw ValidationError("diagnosis needs at least two sensors");
    std::vector<MassFunction> bpas;
    bpas.reserve(sensors.size());
    for (const auto& obs : sensors) bpas.push_back(bpa_from_features(obs, lib));
    FusionReport fusion = idcr_fuse(bpas, mode);
    Decision decision = decide(fusion.fused, xi1, xi2);
    return DiagnosisReport{std::move(bpas), std::move(fusion), std::move(decision)};
}

}  // namespace evidfuse
