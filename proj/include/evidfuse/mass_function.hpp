#pragma once

#include <utility>
#include <vector>

#include <Eigen/Dense>

#include "evidfuse/frame.hpp"

namespace evidfuse {

// A mass sum within this distance of 1 is silently renormalized; anything
// further off is rejected (tables rounded to 4 decimals sum to 0.9999-1.0001).
inline constexpr double kMassSumTolerance = 1e-6;

// Basic probability assignment: positive masses on nonempty subsets of one
// frame, summing to 1. Stored sparse (support only), sorted by bit value.
class MassFunction {
public:
    const Frame& frame() const { return frame_; }
    const std::vector<std::pair<FocalSet, double>>& support() const { return masses_; }
    std::size_t size() const { return masses_.size(); }
    double mass(const FocalSet& f) const;  // 0 for absent focal sets

    friend MassFunction make_mass(const Frame& frame,
                                  std::vector<std::pair<FocalSet, double>> entries);

private:
    MassFunction(Frame frame, std::vector<std::pair<FocalSet, double>> masses)
        : frame_(std::move(frame)), masses_(std::move(masses)) {}

    Frame frame_;
    std::vector<std::pair<FocalSet, double>> masses_;
};

// The only way to build a MassFunction: validates, merges duplicates, drops
// zeros and renormalizes the sum to exactly 1.
MassFunction make_mass(const Frame& frame, std::vector<std::pair<FocalSet, double>> entries);

MassFunction vacuous(const Frame& frame);

// Dense coordinates over all 2^n - 1 nonempty subsets, ascending bit value.
Eigen::VectorXd as_vector(const MassFunction& m);
MassFunction from_vector(const Frame& frame, const Eigen::VectorXd& coords);

using EvidenceSet = std::vector<MassFunction>;

// Shared-frame check used by every n-ary operation.
const Frame& common_frame(const EvidenceSet& evidence);

}  // namespace evidfuse
