#include <cstdio>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "evidfuse/diagnosis.hpp"
#include "evidfuse/io.hpp"
#include "evidfuse/reproduce.hpp"
#include "evidfuse/tables.hpp"

namespace {

using namespace evidfuse;

std::string four(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.4f", v);
    return buf;
}

std::string focal_text(const Frame& frame, const FocalSet& set) {
    return set.to_string(frame);
}

EvidenceSet take_prefix(const EvidenceDocument& doc, std::size_t k, std::size_t minimum) {
    EvidenceSet ev = doc.evidence_set();
    if (k == 0) k = ev.size();
    if (k > ev.size())
        throw ValidationError("--prefix " + std::to_string(k) + " exceeds the " +
                              std::to_string(ev.size()) + " evidences in the file");
    if (k < minimum)
        throw ValidationError("this rule needs at least " + std::to_string(minimum) +
                              " evidences");
    ev.resize(k, ev.front());
    return ev;
}

void print_mass_table(std::ostream& out, const MassFunction& m, const std::string& title) {
    out << title << "\n";
    for (const auto& [set, mass] : m.support())
        out << "  " << focal_text(m.frame(), set) << "  " << four(mass) << "\n";
}

nlohmann::ordered_json mass_to_json(const MassFunction& m) {
    nlohmann::ordered_json cells = nlohmann::ordered_json::array();
    for (const auto& [set, mass] : m.support())
        cells.push_back(nlohmann::ordered_json::array({set.labels(m.frame()), mass}));
    return cells;
}

nlohmann::ordered_json vector_to_json(const Eigen::VectorXd& v) {
    nlohmann::ordered_json a = nlohmann::ordered_json::array();
    for (Eigen::Index i = 0; i < v.size(); ++i) a.push_back(v[i]);
    return a;
}

int cmd_validate(const std::string& path) {
    const bool looks_csv = path.size() >= 4 && path.substr(path.size() - 4) == ".csv";
    if (looks_csv) {
        const DiagnosisDocument doc = load_diagnosis(path);
        std::cout << "ok: diagnosis document: " << doc.library.frame.cardinality()
                  << " fault types x " << doc.library.rows.front().size() << " features, "
                  << doc.sensors.size() << " sensors, xi1=" << format_double(doc.xi1)
                  << " xi2=" << format_double(doc.xi2) << "\n";
        return 0;
    }
    const EvidenceDocument doc = load_evidence(path);
    std::cout << "ok: evidence document: frame "
              << FocalSet::full_set(doc.frame).to_string(doc.frame) << ", "
              << doc.evidences.size() << " evidences (";
    for (std::size_t i = 0; i < doc.evidences.size(); ++i)
        std::cout << (i ? ", " : "") << doc.evidences[i].first;
    std::cout << ")\n";
    return 0;
}

int cmd_fuse(const std::string& path, const std::string& rule, const std::string& mode_name,
             std::size_t prefix, const std::string& format) {
    const EvidenceDocument doc = load_evidence(path);
    const CombinationMode mode = mode_name == "intersection" ? CombinationMode::intersection
                                                             : CombinationMode::same_focal;

    if (rule == "dcr" || rule == "yager") {
        const EvidenceSet ev = take_prefix(doc, prefix, rule == "yager" ? 2 : 1);
        const MassFunction fused = rule == "dcr" ? dcr_nary(ev) : yager_nary(ev);
        if (format == "json") {
            nlohmann::ordered_json j;
            j["rule"] = rule;
            j["evidences"] = ev.size();
            j["fused"] = mass_to_json(fused);
            std::cout << j.dump(2) << "\n";
        } else if (format == "csv") {
            std::cout << "focal,mass\n";
            for (const auto& [set, mass] : fused.support()) {
                std::string id;
                for (const auto& label : set.labels(doc.frame))
                    id += (id.empty() ? "" : "+") + label;
                std::cout << id << "," << format_double(mass) << "\n";
            }
        } else {
            print_mass_table(std::cout, fused,
                             rule + " fusion of " + std::to_string(ev.size()) + " evidences");
        }
        return 0;
    }

    const EvidenceSet ev = take_prefix(doc, prefix, 2);
    const FusionReport r = idcr_fuse(ev, mode);
    if (format == "json") {
        nlohmann::ordered_json j;
        j["rule"] = "idcr";
        j["mode"] = mode == CombinationMode::same_focal ? "same-focal" : "intersection";
        j["evidences"] = ev.size();
        j["average"] = mass_to_json(r.average);
        j["distances"] = vector_to_json(r.distances);
        j["similarities"] = vector_to_json(r.similarities);
        j["supports"] = vector_to_json(r.supports);
        j["entropies"] = vector_to_json(r.entropies);
        j["weights"] = vector_to_json(r.weights);
        j["modified"] = mass_to_json(r.modified);
        j["fused"] = mass_to_json(r.fused);
        std::cout << j.dump(2) << "\n";
    } else if (format == "csv") {
        std::cout << "focal,mass\n";
        for (const auto& [set, mass] : r.fused.support()) {
            std::string id;
            for (const auto& label : set.labels(doc.frame))
                id += (id.empty() ? "" : "+") + label;
            std::cout << id << "," << format_double(mass) << "\n";
        }
    } else {
        std::cout << "idcr fusion of " << ev.size() << " evidences ("
                  << (mode == CombinationMode::same_focal ? "same-focal" : "intersection")
                  << " mode)\n";
        print_mass_table(std::cout, r.average, "average");
        auto print_row = [&](const char* name, const Eigen::VectorXd& v) {
            std::cout << name;
            for (Eigen::Index i = 0; i < v.size(); ++i) std::cout << "  " << four(v[i]);
            std::cout << "\n";
        };
        print_row("distances   ", r.distances);
        print_row("similarities", r.similarities);
        print_row("supports    ", r.supports);
        print_row("entropies   ", r.entropies);
        print_row("weights     ", r.weights);
        print_mass_table(std::cout, r.modified, "modified");
        print_mass_table(std::cout, r.fused, "fused");
    }
    return 0;
}

int cmd_diagnose(const std::string& path, double xi1, double xi2, bool xi1_set, bool xi2_set,
                 std::size_t prefix) {
    const DiagnosisDocument doc = load_diagnosis(path);
    const Frame& frame = doc.library.frame;
    if (!xi1_set) xi1 = doc.xi1;
    if (!xi2_set) xi2 = doc.xi2;

    std::vector<FeatureVector> sensors = doc.sensors;
    std::vector<std::string> names = doc.sensor_names;
    if (prefix != 0) {
        if (prefix > sensors.size())
            throw ValidationError("--prefix " + std::to_string(prefix) + " exceeds the " +
                                  std::to_string(sensors.size()) + " sensors in the file");
        sensors.resize(prefix, sensors.front());
        names.resize(prefix);
    }

    const DiagnosisReport report = diagnose(sensors, doc.library, xi1, xi2);

    std::cout << "sensor BPAs\n        ";
    for (const auto& label : frame.labels()) std::cout << "  " << label << "    ";
    std::cout << "\n";
    for (std::size_t s = 0; s < report.bpas.size(); ++s) {
        std::cout << "  " << names[s];
        for (std::size_t i = 0; i < frame.cardinality(); ++i)
            std::cout << "  " << four(report.bpas[s].mass(FocalSet::singleton(frame, i)));
        std::cout << "\n";
    }

    std::cout << "fused (idcr)\n";
    for (std::size_t k = 2; k <= report.bpas.size(); ++k) {
        const EvidenceSet ev(report.bpas.begin(),
                             report.bpas.begin() + static_cast<std::ptrdiff_t>(k));
        const FusionReport r = idcr_fuse(ev);
        std::cout << "  m1.." << k;
        for (std::size_t i = 0; i < frame.cardinality(); ++i)
            std::cout << "  " << four(r.fused.mass(FocalSet::singleton(frame, i)));
        std::cout << "\n";
    }

    const Decision& dec = report.decision;
    if (dec.outcome == Decision::Outcome::fault) {
        std::cout << "decision: Fault(" << dec.top.labels(frame).front() << ")"
                  << "  margin " << four(dec.margin) << ", ignorance " << four(dec.ignorance)
                  << "\n";
        return 0;
    }
    std::cout << "decision: Undecided  margin " << four(dec.margin) << ", ignorance "
              << four(dec.ignorance) << "\n";
    return 3;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Dempster-Shafer evidence fusion with credibility-weighted combination"};
    app.require_subcommand(1);

    std::string validate_path;
    CLI::App* validate = app.add_subcommand("validate", "check an evidence or diagnosis file");
    validate->add_option("file", validate_path, "evidence .json or diagnosis .csv")->required();

    std::string fuse_path, rule, mode = "same-focal", format = "table";
    std::size_t fuse_prefix = 0;
    CLI::App* fuse = app.add_subcommand("fuse", "combine the evidences in a file");
    fuse->add_option("--rule", rule, "combination rule")
        ->required()
        ->check(CLI::IsMember({"dcr", "yager", "idcr"}));
    fuse->add_option("--mode", mode, "final self-combination mode (idcr)")
        ->check(CLI::IsMember({"same-focal", "intersection"}));
    fuse->add_option("--prefix", fuse_prefix, "use only the first k evidences");
    fuse->add_option("--format", format, "output format")
        ->check(CLI::IsMember({"table", "json", "csv"}));
    fuse->add_option("file", fuse_path, "evidence .json file")->required();

    std::string diag_path;
    double xi1 = 0.1, xi2 = 0.1;
    std::size_t diag_prefix = 0;
    CLI::App* diag = app.add_subcommand("diagnose", "run the fault-diagnosis pipeline");
    CLI::Option* xi1_opt = diag->add_option("--xi1", xi1, "decision margin threshold");
    CLI::Option* xi2_opt = diag->add_option("--xi2", xi2, "ignorance threshold");
    diag->add_option("--prefix", diag_prefix, "use only the first k sensors");
    diag->add_option("file", diag_path, "diagnosis .csv file")->required();

    std::string table_id;
    CLI::App* repro = app.add_subcommand("reproduce", "recompute an embedded golden table");
    repro->add_option("table", table_id, "one of ex1, table3, table5, table8, table9")
        ->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 1;
    }

    try {
        if (validate->parsed()) return cmd_validate(validate_path);
        if (fuse->parsed()) return cmd_fuse(fuse_path, rule, mode, fuse_prefix, format);
        if (diag->parsed())
            return cmd_diagnose(diag_path, xi1, xi2, xi1_opt->count() > 0,
                                xi2_opt->count() > 0, diag_prefix);
        if (repro->parsed()) return run_reproduce(table_id, std::cout);
    } catch (const TotalConflictError& e) {
        std::cerr << e.what() << "\n";
        return 2;
    } catch (const ValidationError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
