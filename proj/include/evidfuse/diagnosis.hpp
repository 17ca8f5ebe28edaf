#pragma once

#include "evidfuse/idcr.hpp"

namespace evidfuse {

using FeatureVector = Eigen::VectorXd;

// Reference feature rows, one per fault type (frame label).
struct ReferenceLibrary {
    Frame frame;
    std::vector<FeatureVector> rows;
};

void validate_library(const ReferenceLibrary& lib);

struct Decision {
    enum class Outcome { fault, undecided };
    Outcome outcome;
    FocalSet top;        // highest-mass singleton (canonical order wins ties)
    FocalSet runner_up;  // second highest; empty set on 1-element frames
    double margin;       // m(top) - m(runner_up)
    double ignorance;    // m(full frame)
};

// sqrt of the L1 feature difference.
double feature_distance(const FeatureVector& obs, const FeatureVector& ref);

// Reciprocal-distance BPA: mass on each fault proportional to 1/d, with d
// floored at 1e-9 so an exact reference match dominates instead of crashing.
MassFunction bpa_from_features(const FeatureVector& obs, const ReferenceLibrary& lib);

// Two-threshold rule: Fault(top) iff margin > xi1, m(frame) < xi2 and
// m(top) > m(frame); anything else is Undecided.
Decision decide(const MassFunction& m, double xi1, double xi2);

struct DiagnosisReport {
    std::vector<MassFunction> bpas;  // one per sensor
    FusionReport fusion;
    Decision decision;
};

DiagnosisReport diagnose(const std::vector<FeatureVector>& sensors,
                         const ReferenceLibrary& lib,
                         double xi1 = 0.1, double xi2 = 0.1,
                         CombinationMode mode = CombinationMode::same_focal);

}  // namespace evidfuse
