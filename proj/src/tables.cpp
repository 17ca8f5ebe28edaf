#include "evidfuse/tables.hpp"

namespace evidfuse::tables {

namespace {

// singleton masses in frame-label order; zeros are dropped by make_mass
MassFunction singletons(const Frame& frame, const std::vector<double>& values) {
    std::vector<std::pair<FocalSet, double>> entries;
    for (std::size_t i = 0; i < values.size(); ++i)
        entries.emplace_back(FocalSet::singleton(frame, i), values[i]);
    return make_mass(frame, std::move(entries));
}

// full power-set coordinates in canonical (ascending bit value) order
MassFunction coords(const Frame& frame, std::vector<double> values) {
    Eigen::VectorXd v(static_cast<Eigen::Index>(values.size()));
    for (std::size_t i = 0; i < values.size(); ++i)
        v[static_cast<Eigen::Index>(i)] = values[i];
    return from_vector(frame, v);
}

FeatureVector features(std::initializer_list<double> values) {
    FeatureVector v(static_cast<Eigen::Index>(values.size()));
    Eigen::Index i = 0;
    for (double x : values) v[i++] = x;
    return v;
}

}  // namespace

EvidenceDocument example1() {
    Frame frame = make_frame({"F1", "F2", "F3"});
    return {frame,
            {{"m1", singletons(frame, {0.99, 0.01, 0.0})},
             {"m2", singletons(frame, {0.0, 0.01, 0.99})}}};
}

EvidenceDocument example2() {
    Frame frame = make_frame({"F1", "F2", "F3"});
    // order: {F1} {F2} {F1,F2} {F3} {F1,F3} {F2,F3} {F1,F2,F3}
    return {frame,
            {{"m1", coords(frame, {0.70, 0.05, 0.05, 0.05, 0.05, 0.05, 0.05})},
             {"m2", coords(frame, {0.05, 0.70, 0.05, 0.05, 0.05, 0.05, 0.05})},
             {"m3", coords(frame, {0.75, 0.05, 0.05, 0.0, 0.05, 0.05, 0.05})}}};
}

EvidenceDocument example3() {
    Frame frame = make_frame({"F1", "F2", "F3"});
    return {frame,
            {{"m1", singletons(frame, {0.70, 0.15, 0.15})},
             {"m2", singletons(frame, {0.40, 0.20, 0.40})},
             {"m3", singletons(frame, {0.65, 0.35, 0.0})},
             {"m4", singletons(frame, {0.75, 0.0, 0.25})},
             {"m5", singletons(frame, {0.0, 0.20, 0.80})}}};
}

DiagnosisDocument fault_diagnosis() {
    ReferenceLibrary lib{make_frame({"F1", "F2", "F3", "F4"}),
                         {features({43.5828, 30.8859, 10.6806, 53.7373}),
                          features({74.3605, 72.1393, 17.8107, 74.1857}),
                          features({63.9286, 58.6064, 21.7660, 67.5529}),
                          // F4/E3 is 14.4998; the 14.998 variant that circulates
                          // is inconsistent with the golden sensor BPAs (row 5
                          // lands 1e-2 off instead of 5e-5).
                          features({49.8858, 46.8183, 14.4998, 52.6699})}};
    return {std::move(lib),
            {"S1", "S2", "S3", "S4", "S5"},
            {features({66.2913, 57.3129, 22.8701, 65.0923}),
             features({62.3361, 55.3681, 22.8297, 66.1382}),
             features({73.4274, 69.8329, 16.5621, 72.5824}),
             features({65.8638, 61.5325, 24.2016, 69.2899}),
             features({51.4154, 48.3248, 15.4123, 50.3624})},
            0.1,
            0.1};
}

}  // namespace evidfuse::tables
