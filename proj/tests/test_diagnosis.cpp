#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "checks.hpp"

#include <cmath>
#include <limits>
#include <vector>

#include "evidfuse/diagnosis.hpp"
#include "evidfuse/tables.hpp"
#include "oracle.hpp"

using namespace evidfuse;

namespace {

FeatureVector fv(std::initializer_list<double> xs) {
    FeatureVector v(static_cast<Eigen::Index>(xs.size()));
    Eigen::Index i = 0;
    for (double x : xs) v(i++) = x;
    return v;
}

}  // namespace

TEST_CASE("feature distance") {
    DiagnosisDocument doc = tables::fault_diagnosis();
    for (int i = 0; i < 4; ++i)
        CHECK_NEAR(feature_distance(doc.sensors[0], doc.library.rows[static_cast<std::size_t>(i)]),
                   oracle::diag_dist_s1[i], 1e-12);

    CHECK(feature_distance(fv({1.0, 2.0}), fv({1.0, 2.0})) == 0.0);
    CHECK_NEAR(feature_distance(fv({0.0, 0.0}), fv({2.0, 2.0})), 2.0, 1e-15);
    CHECK_THROWS_AS(feature_distance(fv({1.0}), fv({1.0, 2.0})), ValidationError);
}

TEST_CASE("sensor BPAs from the reference library") {
    DiagnosisDocument doc = tables::fault_diagnosis();
    const ReferenceLibrary& lib = doc.library;
    REQUIRE(doc.sensors.size() == 5);

    for (std::size_t s = 0; s < 5; ++s) {
        MassFunction m = bpa_from_features(doc.sensors[s], lib);
        check_valid(m);
        for (std::size_t i = 0; i < 4; ++i)
            CHECK_NEAR(m.mass(FocalSet::singleton(lib.frame, i)), oracle::diag_bpas[s][i], 1e-12);
    }

    // observing a reference row exactly pins (nearly) all mass on that fault
    MassFunction exact = bpa_from_features(lib.rows[2], lib);
    CHECK(exact.mass(FocalSet::singleton(lib.frame, 2)) >= 1.0 - 1e-6);

    // moving the observation toward a row raises that fault's mass
    FeatureVector near_row = 0.9 * lib.rows[1] + 0.1 * lib.rows[0];
    FeatureVector far_row = 0.5 * lib.rows[1] + 0.5 * lib.rows[0];
    CHECK(bpa_from_features(near_row, lib).mass(FocalSet::singleton(lib.frame, 1)) >
          bpa_from_features(far_row, lib).mass(FocalSet::singleton(lib.frame, 1)));

    CHECK_THROWS_AS(bpa_from_features(fv({1.0, 2.0}), lib), ValidationError);
    FeatureVector bad = lib.rows[0];
    bad(0) = std::numeric_limits<double>::quiet_NaN();
    CHECK_THROWS_AS(bpa_from_features(bad, lib), ValidationError);
}

TEST_CASE("equidistant observation gives a uniform BPA") {
    ReferenceLibrary lib{make_frame({"A", "B"}), {fv({0.0}), fv({2.0})}};
    MassFunction m = bpa_from_features(fv({1.0}), lib);
    CHECK(m.mass(FocalSet::singleton(lib.frame, 0)) == 0.5);
    CHECK(m.mass(FocalSet::singleton(lib.frame, 1)) == 0.5);
}

TEST_CASE("library validation") {
    Frame f = make_frame({"A", "B", "C"});
    CHECK_NOTHROW(validate_library({f, {fv({1.0}), fv({2.0}), fv({3.0})}}));
    CHECK_THROWS_AS(validate_library({f, {fv({1.0}), fv({2.0})}}), ValidationError);
    CHECK_THROWS_AS(validate_library({f, {fv({1.0}), fv({2.0}), fv({3.0, 4.0})}}),
                    ValidationError);
    CHECK_THROWS_AS(validate_library({f, {fv({}), fv({}), fv({})}}), ValidationError);
    auto inf = std::numeric_limits<double>::infinity();
    CHECK_THROWS_AS(validate_library({f, {fv({1.0}), fv({inf}), fv({3.0})}}), ValidationError);
}

TEST_CASE("decision rule") {
    Frame f = make_frame({"F1", "F2", "F3"});
    auto s = [&](std::size_t i) { return FocalSet::singleton(f, i); };

    Decision clear = decide(make_mass(f, {{s(0), 0.8}, {s(1), 0.1}, {s(2), 0.1}}), 0.1, 0.1);
    CHECK(clear.outcome == Decision::Outcome::fault);
    CHECK(clear.top == s(0));
    CHECK(clear.runner_up == s(1));  // tie broken toward the earlier fault
    CHECK_NEAR(clear.margin, 0.7, 1e-15);
    CHECK(clear.ignorance == 0.0);

    // full ignorance: no singleton ever clears the bar
    Decision vac = decide(vacuous(f), 0.1, 0.1);
    CHECK(vac.outcome == Decision::Outcome::undecided);
    CHECK(vac.margin == 0.0);
    CHECK(vac.ignorance == 1.0);

    // dead heat
    Decision tie = decide(make_mass(f, {{s(0), 0.5}, {s(1), 0.5}}), 0.1, 0.1);
    CHECK(tie.outcome == Decision::Outcome::undecided);
    CHECK(tie.top == s(0));
    CHECK(tie.margin == 0.0);

    // margin must strictly exceed the threshold (0.625 - 0.375 = 0.25 exactly)
    Decision at_bar = decide(make_mass(f, {{s(0), 0.625}, {s(1), 0.375}}), 0.25, 0.1);
    CHECK(at_bar.outcome == Decision::Outcome::undecided);
    Decision over_bar = decide(make_mass(f, {{s(0), 0.625}, {s(1), 0.375}}), 0.2, 0.1);
    CHECK(over_bar.outcome == Decision::Outcome::fault);

    // too much ignorance
    MassFunction hazy = make_mass(f, {{s(0), 0.5}, {FocalSet::full_set(f), 0.5}});
    CHECK(decide(hazy, 0.1, 0.1).outcome == Decision::Outcome::undecided);
    CHECK(decide(hazy, 0.1, 0.6).outcome == Decision::Outcome::undecided);  // top == ignorance

    MassFunction leaning = make_mass(f, {{s(0), 0.6}, {FocalSet::full_set(f), 0.4}});
    CHECK(decide(leaning, 0.1, 0.5).outcome == Decision::Outcome::fault);
    CHECK(decide(leaning, 0.1, 0.3).outcome == Decision::Outcome::undecided);

    // thresholds live in the open unit interval
    MassFunction m = make_mass(f, {{s(0), 1.0}});
    CHECK_THROWS_AS(decide(m, 0.0, 0.1), ValidationError);
    CHECK_THROWS_AS(decide(m, 0.1, 1.0), ValidationError);
    CHECK_THROWS_AS(decide(m, -0.2, 0.1), ValidationError);

    // composite masses other than full ignorance are not decidable
    MassFunction comp = make_mass(f, {{s(0), 0.5}, {FocalSet(f, 0b011), 0.5}});
    CHECK_THROWS_AS(decide(comp, 0.1, 0.1), ValidationError);
}

TEST_CASE("decision on a one-fault frame") {
    Frame f = make_frame({"only"});
    MassFunction m = make_mass(f, {{FocalSet::singleton(f, 0), 1.0}});
    Decision d = decide(m, 0.1, 0.1);
    // the lone singleton *is* the full frame, so ignorance ties it and nothing is decided
    CHECK(d.outcome == Decision::Outcome::undecided);
    CHECK(d.runner_up.is_empty());
    CHECK(d.ignorance == 1.0);
}

TEST_CASE("end-to-end diagnosis of the golden sensor set") {
    DiagnosisDocument doc = tables::fault_diagnosis();
    const Frame& f = doc.library.frame;
    auto s = [&](std::size_t i) { return FocalSet::singleton(f, i); };

    DiagnosisReport report = diagnose(doc.sensors, doc.library, doc.xi1, doc.xi2);
    REQUIRE(report.bpas.size() == 5);
    for (std::size_t i = 0; i < 4; ++i)
        CHECK_NEAR(report.fusion.fused.mass(s(i)), oracle::diag_idcr[3][i], 1e-12);

    CHECK(report.decision.outcome == Decision::Outcome::fault);
    CHECK(report.decision.top == s(2));  // F3
    CHECK(report.decision.top.labels(f).front() == "F3");
    CHECK_NEAR(report.decision.margin, oracle::diag_margin_p5, 1e-12);

    // growing sensor prefixes, each fused from scratch
    double f3[4];
    for (std::size_t k = 2; k <= 5; ++k) {
        std::vector<FeatureVector> some(doc.sensors.begin(), doc.sensors.begin() + k);
        DiagnosisReport r = diagnose(some, doc.library, doc.xi1, doc.xi2);
        for (std::size_t i = 0; i < 4; ++i)
            CHECK_NEAR(r.fusion.fused.mass(s(i)), oracle::diag_idcr[k - 2][i], 1e-12);
        CHECK(r.decision.outcome == Decision::Outcome::fault);
        CHECK(r.decision.top == s(2));
        f3[k - 2] = r.fusion.fused.mass(s(2));
    }
    // the third sensor disagrees and dents the evidence; later sensors repair it
    CHECK(f3[1] < f3[0]);
    CHECK(f3[2] > f3[1]);

    CHECK_THROWS_AS(diagnose({doc.sensors[0]}, doc.library, 0.1, 0.1), ValidationError);
}
