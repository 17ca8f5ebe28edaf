#include "evidfuse/frame.hpp"

#include <algorithm>
#include <unordered_set>

namespace evidfuse {

namespace {

void check_label(const std::string& label) {
    if (label.empty())
        throw ValidationError("frame label must not be empty");
    if (label.find_first_of(",\"\n\r") != std::string::npos)
        throw ValidationError("frame label '" + label + "' contains a forbidden character");
}

}  // namespace

Frame::Frame(std::vector<std::string> labels) : labels_(std::move(labels)) {
    if (labels_.empty())
        throw ValidationError("frame needs at least one label");
    if (labels_.size() > kMaxFrameSize)
        throw ValidationError("frame cardinality over the supported maximum of 20");
    std::unordered_set<std::string> seen;
    for (const auto& label : labels_) {
        check_label(label);
        if (!seen.insert(label).second)
            throw ValidationError("duplicate frame label '" + label + "'");
    }
}

const std::string& Frame::label(std::size_t index) const {
    if (index >= labels_.size())
        throw ValidationError("frame element index out of range");
    return labels_[index];
}

std::size_t Frame::index_of(const std::string& label) const {
    auto it = std::find(labels_.begin(), labels_.end(), label);
    if (it == labels_.end())
        throw ValidationError("label '" + label + "' is not in the frame");
    return static_cast<std::size_t>(it - labels_.begin());
}

Frame make_frame(std::vector<std::string> labels) { return Frame(std::move(labels)); }

FocalSet::FocalSet(const Frame& frame, std::uint32_t bits)
    : bits_(bits), frame_card_(static_cast<std::uint32_t>(frame.cardinality())) {
    if (frame_card_ < 32 && bits >= (1u << frame_card_))
        throw ValidationError("focal set has members outside the frame");
}

FocalSet FocalSet::full_set(const Frame& frame) {
    return {frame, static_cast<std::uint32_t>((1u << frame.cardinality()) - 1u)};
}

FocalSet FocalSet::singleton(const Frame& frame, std::size_t index) {
    if (index >= frame.cardinality())
        throw ValidationError("frame element index out of range");
    return {frame, 1u << index};
}

FocalSet FocalSet::from_labels(const Frame& frame, const std::vector<std::string>& labels) {
    std::uint32_t bits = 0;
    for (const auto& label : labels)
        bits |= 1u << frame.index_of(label);
    return {frame, bits};
}

std::vector<std::string> FocalSet::labels(const Frame& frame) const {
    if (frame.cardinality() != frame_card_)
        throw ValidationError("focal set rendered against a different frame");
    std::vector<std::string> out;
    for (std::size_t i = 0; i < frame_card_; ++i)
        if (contains(i)) out.push_back(frame.label(i));
    return out;
}

std::string FocalSet::to_string(const Frame& frame) const {
    std::string out = "{";
    bool first = true;
    for (const auto& label : labels(frame)) {
        if (!first) out += ",";
        out += label;
        first = false;
    }
    return out + "}";
}

FocalSet intersect(const FocalSet& a, const FocalSet& b) {
    if (a.frame_cardinality() != b.frame_cardinality())
        throw ValidationError("cannot intersect focal sets from different frames");
    return {a.bits_ & b.bits_, a.frame_card_};
}

}  // namespace evidfuse
