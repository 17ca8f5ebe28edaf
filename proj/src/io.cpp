#include "evidfuse/io.hpp"

#include <charconv>
#include <fstream>
#include <sstream>
#include <system_error>

#include "json.hpp"

namespace evidfuse {

namespace {

using ordered_json = nlohmann::ordered_json;

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw ValidationError("cannot open '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

void write_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out)
        throw ValidationError("cannot write '" + path + "'");
    out << content;
}

std::vector<std::string> split(const std::string& line, char sep) {
    std::vector<std::string> fields;
    std::size_t start = 0;
    while (true) {
        const std::size_t pos = line.find(sep, start);
        fields.push_back(line.substr(start, pos - start));
        if (pos == std::string::npos) break;
        start = pos + 1;
    }
    return fields;
}

double parse_number(const std::string& field, const std::string& where) {
    double value = 0.0;
    const char* begin = field.data();
    const char* end = begin + field.size();
    auto [ptr, ec] = std::from_chars(begin, end, value);
    if (ec != std::errc{} || ptr != end)
        throw ValidationError(where + ": bad number '" + field + "'");
    return value;
}

}  // namespace

EvidenceSet EvidenceDocument::evidence_set() const {
    EvidenceSet out;
    out.reserve(evidences.size());
    for (const auto& [name, mass] : evidences) out.push_back(mass);
    return out;
}

EvidenceDocument parse_evidence_json(const std::string& text, const std::string& origin) {
    try {
        ordered_json j = ordered_json::parse(text);
        if (!j.is_object() || !j.contains("frame") || !j.contains("evidences"))
            throw ValidationError("document needs 'frame' and 'evidences' keys");

        Frame frame = make_frame(j.at("frame").get<std::vector<std::string>>());
        std::vector<std::pair<std::string, MassFunction>> evidences;
        for (const auto& ev : j.at("evidences")) {
            const std::string name = ev.at("name").get<std::string>();
            try {
                std::vector<std::pair<FocalSet, double>> entries;
                for (const auto& cell : ev.at("bpa")) {
                    if (!cell.is_array() || cell.size() != 2)
                        throw ValidationError("each bpa entry is [focal labels, mass]");
                    entries.emplace_back(
                        FocalSet::from_labels(frame, cell.at(0).get<std::vector<std::string>>()),
                        cell.at(1).get<double>());
                }
                evidences.emplace_back(name, make_mass(frame, std::move(entries)));
            } catch (const ValidationError& e) {
                throw ValidationError("evidence '" + name + "': " + e.what());
            }
        }
        if (evidences.empty())
            throw ValidationError("document has no evidences");
        return EvidenceDocument{std::move(frame), std::move(evidences)};
    } catch (const nlohmann::json::exception& e) {
        throw ValidationError(origin + ": " + e.what());
    } catch (const ValidationError& e) {
        throw ValidationError(origin + ": " + e.what());
    }
}

EvidenceDocument load_evidence(const std::string& path) {
    return parse_evidence_json(read_file(path), path);
}

std::string to_json_string(const EvidenceDocument& doc) {
    ordered_json j;
    j["frame"] = doc.frame.labels();
    j["evidences"] = ordered_json::array();
    for (const auto& [name, mass] : doc.evidences) {
        ordered_json ev;
        ev["name"] = name;
        ev["bpa"] = ordered_json::array();
        for (const auto& [set, value] : mass.support())
            ev["bpa"].push_back(ordered_json::array({set.labels(doc.frame), value}));
        j["evidences"].push_back(std::move(ev));
    }
    return j.dump(2) + "\n";
}

void save_evidence(const EvidenceDocument& doc, const std::string& path) {
    write_file(path, to_json_string(doc));
}

DiagnosisDocument parse_diagnosis_csv(const std::string& text, const std::string& origin) {
    std::vector<std::string> lines = split(text, '\n');
    while (!lines.empty() && lines.back().empty()) lines.pop_back();
    for (auto& line : lines)
        if (!line.empty() && line.back() == '\r') line.pop_back();
    if (lines.empty())
        throw ValidationError(origin + ": empty document");

    const auto header = split(lines.front(), ',');
    if (header.size() < 3 || header[0] != "kind" || header[1] != "label")
        throw ValidationError(origin + ": line 1: header must be kind,label,<feature columns>");
    const std::size_t width = header.size() - 2;

    std::vector<std::string> fault_labels;
    std::vector<FeatureVector> references;
    std::vector<std::string> sensor_names;
    std::vector<FeatureVector> sensors;
    double xi1 = 0.1, xi2 = 0.1;

    for (std::size_t n = 1; n < lines.size(); ++n) {
        const std::string where = origin + ": line " + std::to_string(n + 1);
        if (lines[n].empty()) continue;
        const auto fields = split(lines[n], ',');
        const std::string& kind = fields[0];
        if (kind == "reference" || kind == "sensor") {
            if (fields.size() != width + 2)
                throw ValidationError(where + ": expected " + std::to_string(width) +
                                      " feature values");
            FeatureVector row(width);
            for (std::size_t i = 0; i < width; ++i)
                row[static_cast<Eigen::Index>(i)] = parse_number(fields[i + 2], where);
            if (kind == "reference") {
                fault_labels.push_back(fields[1]);
                references.push_back(std::move(row));
            } else {
                sensor_names.push_back(fields[1]);
                sensors.push_back(std::move(row));
            }
        } else if (kind == "threshold") {
            if (fields.size() != 3)
                throw ValidationError(where + ": threshold rows are threshold,<xi1|xi2>,<value>");
            const double value = parse_number(fields[2], where);
            if (!(value > 0.0 && value < 1.0))
                throw ValidationError(where + ": thresholds must lie in (0,1)");
            if (fields[1] == "xi1") xi1 = value;
            else if (fields[1] == "xi2") xi2 = value;
            else throw ValidationError(where + ": unknown threshold '" + fields[1] + "'");
        } else {
            throw ValidationError(where + ": unknown kind '" + kind + "'");
        }
    }

    try {
        ReferenceLibrary lib{make_frame(std::move(fault_labels)), std::move(references)};
        validate_library(lib);
        return DiagnosisDocument{std::move(lib), std::move(sensor_names), std::move(sensors),
                                 xi1, xi2};
    } catch (const ValidationError& e) {
        throw ValidationError(origin + ": " + e.what());
    }
}

DiagnosisDocument load_diagnosis(const std::string& path) {
    return parse_diagnosis_csv(read_file(path), path);
}

std::string to_csv_string(const DiagnosisDocument& doc) {
    const std::size_t width = static_cast<std::size_t>(doc.library.rows.front().size());
    std::ostringstream out;
    out << "kind,label";
    for (std::size_t i = 0; i < width; ++i) out << ",E" << i + 1;
    out << "\n";
    for (std::size_t i = 0; i < doc.library.rows.size(); ++i) {
        out << "reference," << doc.library.frame.label(i);
        for (std::size_t k = 0; k < width; ++k)
            out << "," << format_double(doc.library.rows[i][static_cast<Eigen::Index>(k)]);
        out << "\n";
    }
    for (std::size_t i = 0; i < doc.sensors.size(); ++i) {
        out << "sensor," << doc.sensor_names[i];
        for (std::size_t k = 0; k < width; ++k)
            out << "," << format_double(doc.sensors[i][static_cast<Eigen::Index>(k)]);
        out << "\n";
    }
    out << "threshold,xi1," << format_double(doc.xi1) << "\n";
    out << "threshold,xi2," << format_double(doc.xi2) << "\n";
    return out.str();
}

void save_diagnosis(const DiagnosisDocument& doc, const std::string& path) {
    write_file(path, to_csv_string(doc));
}

std::string format_double(double v) {
    char buf[32];
    auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, v);
    return std::string(buf, ptr);
}

}  // namespace evidfuse
