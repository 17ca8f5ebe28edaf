#pragma once

#include <Eigen/Dense>

#include "evidfuse/combination.hpp"
#include "evidfuse/entropy.hpp"

namespace evidfuse {

// How the modified BPA is self-combined in the final step. same_focal is the
// credibility-weighted rule's native reading; intersection runs a classical
// n-ary Dempster combination instead. The two agree on singleton-only BPAs.
enum class CombinationMode { same_focal, intersection };

// Every intermediate of the seven-step pipeline, kept for audit output.
struct FusionReport {
    MassFunction average;        // step 1
    Eigen::VectorXd distances;   // step 2, per evidence
    Eigen::VectorXd similarities;// step 3
    Eigen::VectorXd supports;    // step 4
    Eigen::VectorXd entropies;   // step 5
    Eigen::VectorXd weights;     // step 6 (credibility degrees)
    MassFunction modified;       // step 6 (weighted BPA)
    MassFunction fused;          // step 7
    CombinationMode mode;
};

MassFunction average_bpa(const EvidenceSet& evidence);

// Euclidean distance over full power-set coordinates (zeros included).
double distance_to_average(const MassFunction& m, const MassFunction& avg);

// max(0, 1 - distance); clamped because distances can exceed 1.
double similarity(double distance);

// Similarities normalized to sum 1; an all-zero vector degenerates to uniform.
Eigen::VectorXd support_degrees(const Eigen::VectorXd& similarities);

// w_i = sup_i * E_i / sum_k sup_k * E_k; falls back to the supports when all
// entropies vanish (categorical evidence).
Eigen::VectorXd credibility_weights(const Eigen::VectorXd& supports,
                                    const Eigen::VectorXd& entropies);

// m'(F) = sum_i w_i * m_i(F)
MassFunction modified_bpa(const EvidenceSet& evidence, const Eigen::VectorXd& weights);

// The full pipeline: the modified BPA is combined with itself n times
// (n = number of evidences) under the selected mode.
FusionReport idcr_fuse(const EvidenceSet& evidence,
                       CombinationMode mode = CombinationMode::same_focal);

}  // namespace evidfuse
