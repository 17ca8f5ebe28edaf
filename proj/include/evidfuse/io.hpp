#pragma once

#include <string>
#include <utility>
#include <vector>

#include "evidfuse/diagnosis.hpp"

namespace evidfuse {

// Named BPAs over a shared frame; JSON on disk. save emits a canonical form,
// and loading a canonical file then saving it reproduces the bytes exactly.
struct EvidenceDocument {
    Frame frame;
    std::vector<std::pair<std::string, MassFunction>> evidences;

    EvidenceSet evidence_set() const;
};

EvidenceDocument parse_evidence_json(const std::string& text, const std::string& origin);
EvidenceDocument load_evidence(const std::string& path);
std::string to_json_string(const EvidenceDocument& doc);
void save_evidence(const EvidenceDocument& doc, const std::string& path);

// Reference rows, sensor rows and decision thresholds; CSV on disk.
struct DiagnosisDocument {
    ReferenceLibrary library;
    std::vector<std::string> sensor_names;
    std::vector<FeatureVector> sensors;
    double xi1 = 0.1;
    double xi2 = 0.1;
};

DiagnosisDocument parse_diagnosis_csv(const std::string& text, const std::string& origin);
DiagnosisDocument load_diagnosis(const std::string& path);
std::string to_csv_string(const DiagnosisDocument& doc);
void save_diagnosis(const DiagnosisDocument& doc, const std::string& path);

// Shortest decimal that round-trips the exact double.
std::string format_double(double v);

}  // namespace evidfuse
