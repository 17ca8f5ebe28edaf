#pragma once

#include <bit>
#include <compare>
#include <cstdint>
#include <string>
#include <vector>

#include "evidfuse/errors.hpp"

namespace evidfuse {

// Power sets are enumerated exhaustively in a few places, so keep frames small.
inline constexpr std::size_t kMaxFrameSize = 20;

// Frame of discernment: an ordered list of distinct hypothesis labels.
class Frame {
public:
    explicit Frame(std::vector<std::string> labels);

    std::size_t cardinality() const { return labels_.size(); }
    const std::vector<std::string>& labels() const { return labels_; }
    const std::string& label(std::size_t index) const;
    std::size_t index_of(const std::string& label) const;

    bool operator==(const Frame& other) const { return labels_ == other.labels_; }

private:
    std::vector<std::string> labels_;
};

Frame make_frame(std::vector<std::string> labels);

// Subset of a frame, stored as a bit-set over element indices. Remembers the
// frame cardinality it was built for so mixed-frame use can be rejected.
class FocalSet {
public:
    FocalSet(const Frame& frame, std::uint32_t bits);

    static FocalSet empty_set(const Frame& frame) { return {frame, 0}; }
    static FocalSet full_set(const Frame& frame);
    static FocalSet singleton(const Frame& frame, std::size_t index);
    static FocalSet from_labels(const Frame& frame, const std::vector<std::string>& labels);

    std::uint32_t bits() const { return bits_; }
    std::size_t frame_cardinality() const { return frame_card_; }
    std::size_t cardinality() const { return static_cast<std::size_t>(std::popcount(bits_)); }
    bool is_empty() const { return bits_ == 0; }
    bool is_full() const { return cardinality() == frame_card_; }
    bool contains(std::size_t index) const { return (bits_ >> index) & 1u; }

    std::vector<std::string> labels(const Frame& frame) const;
    std::string to_string(const Frame& frame) const;  // e.g. "{F1,F3}"

    bool operator==(const FocalSet&) const = default;
    // canonical focal ordering: ascending bit value
    bool operator<(const FocalSet& other) const { return bits_ < other.bits_; }

    friend FocalSet intersect(const FocalSet& a, const FocalSet& b);

private:
    FocalSet(std::uint32_t bits, std::uint32_t frame_card)
        : bits_(bits), frame_card_(frame_card) {}

    std::uint32_t bits_;
    std::uint32_t frame_card_;
};

FocalSet intersect(const FocalSet& a, const FocalSet& b);

}  // namespace evidfuse
