#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "checks.hpp"

#include <random>

using namespace evidfuse;

TEST_CASE("make_frame basics") {
    Frame f = make_frame({"F1", "F2", "F3"});
    CHECK(f.cardinality() == 3);
    CHECK(f.index_of("F2") == 1);
    CHECK(f.label(2) == "F3");

    CHECK(make_frame({"F1"}).cardinality() == 1);
    CHECK_THROWS_AS(make_frame({"F1", "F1"}), ValidationError);
    CHECK_THROWS_AS(make_frame({}), ValidationError);
    CHECK_THROWS_AS(make_frame({""}), ValidationError);
    CHECK_THROWS_AS(make_frame({"a,b"}), ValidationError);
    CHECK_THROWS_AS(f.index_of("F9"), ValidationError);

    std::vector<std::string> too_many;
    for (int i = 0; i < 21; ++i) too_many.push_back("L" + std::to_string(i));
    CHECK_THROWS_AS(make_frame(too_many), ValidationError);
}

TEST_CASE("focal sets") {
    Frame f = make_frame({"F1", "F2", "F3"});
    FocalSet s = FocalSet::from_labels(f, {"F3", "F1"});
    CHECK(s.bits() == 0b101);
    CHECK(s.cardinality() == 2);
    CHECK(s.contains(0));
    CHECK(!s.contains(1));
    CHECK(s.to_string(f) == "{F1,F3}");
    CHECK(FocalSet::full_set(f).bits() == 0b111);
    CHECK(FocalSet::empty_set(f).is_empty());
    CHECK_THROWS_AS(FocalSet(f, 0b1000), ValidationError);
    CHECK_THROWS_AS(FocalSet::singleton(f, 3), ValidationError);

    FocalSet a = FocalSet::from_labels(f, {"F1", "F2"});
    FocalSet b = FocalSet::from_labels(f, {"F2", "F3"});
    CHECK(intersect(a, b) == FocalSet::singleton(f, 1));
    CHECK(intersect(FocalSet::singleton(f, 0), FocalSet::singleton(f, 2)).is_empty());
    CHECK(intersect(FocalSet::full_set(f), FocalSet::full_set(f)) == FocalSet::full_set(f));

    Frame g = make_frame({"A", "B"});
    CHECK_THROWS_AS(intersect(FocalSet::full_set(f), FocalSet::full_set(g)), ValidationError);
}

TEST_CASE("intersect is commutative, associative, idempotent (exhaustive, |frame| <= 4)") {
    for (std::size_t card = 1; card <= 4; ++card) {
        std::vector<std::string> labels;
        for (std::size_t i = 0; i < card; ++i) labels.push_back("L" + std::to_string(i));
        Frame f = make_frame(labels);
        const std::uint32_t n = 1u << card;
        for (std::uint32_t a = 0; a < n; ++a)
            for (std::uint32_t b = 0; b < n; ++b) {
                FocalSet fa(f, a), fb(f, b);
                CHECK(intersect(fa, fb) == intersect(fb, fa));
                CHECK(intersect(fa, fa) == fa);
                for (std::uint32_t c = 0; c < n; ++c) {
                    FocalSet fc(f, c);
                    CHECK(intersect(intersect(fa, fb), fc) == intersect(fa, intersect(fb, fc)));
                }
            }
    }
}

TEST_CASE("make_mass validation") {
    Frame f = make_frame({"F1", "F2", "F3"});
    auto s = [&](std::size_t i) { return FocalSet::singleton(f, i); };

    MassFunction m = make_mass(f, {{s(0), 0.99}, {s(1), 0.01}, {s(2), 0.0}});
    check_valid(m);
    CHECK(m.size() == 2);  // the zero entry is dropped
    CHECK(m.mass(s(0)) == 0.99);
    CHECK(m.mass(s(2)) == 0.0);

    CHECK(vacuous(f).mass(FocalSet::full_set(f)) == 1.0);

    CHECK_THROWS_AS(make_mass(f, {{s(0), 0.6}, {s(1), 0.6}}), ValidationError);
    CHECK_THROWS_AS(make_mass(f, {{s(0), 1.2}, {s(1), -0.2}}), ValidationError);
    CHECK_THROWS_AS(make_mass(f, {{FocalSet::empty_set(f), 0.5}, {s(0), 0.5}}), ValidationError);
    CHECK_THROWS_AS(make_mass(f, {}), ValidationError);

    Frame g = make_frame({"A", "B"});
    CHECK_THROWS_AS(make_mass(f, {{FocalSet::full_set(g), 1.0}}), ValidationError);

    // within 1e-6 of 1: renormalized to exactly 1, ratios kept
    MassFunction r = make_mass(f, {{s(0), 0.5000004}, {s(1), 0.4999999}});
    check_valid(r);
    double sum = 0.0;
    for (const auto& [set, mass] : r.support()) sum += mass;
    CHECK_NEAR(sum, 1.0, 1e-15);
    CHECK_NEAR(r.mass(s(0)) / r.mass(s(1)), 0.5000004 / 0.4999999, 1e-12);

    // just over the line: rejected
    CHECK_THROWS_AS(make_mass(f, {{s(0), 0.5001}, {s(1), 0.5002}}), ValidationError);

    // duplicates accumulate
    MassFunction dup = make_mass(f, {{s(0), 0.3}, {s(0), 0.2}, {s(1), 0.5}});
    CHECK_NEAR(dup.mass(s(0)), 0.5, 1e-15);
}

TEST_CASE("as_vector canonical coordinates") {
    Frame f = make_frame({"F1", "F2", "F3"});
    MassFunction m = make_mass(f, {{FocalSet::singleton(f, 0), 0.99},
                                   {FocalSet::singleton(f, 1), 0.01}});
    Eigen::VectorXd v = as_vector(m);
    REQUIRE(v.size() == 7);
    CHECK(v[0] == 0.99);  // {F1}
    CHECK(v[1] == 0.01);  // {F2}
    for (int i = 2; i < 7; ++i) CHECK(v[i] == 0.0);
    CHECK_NEAR(v.sum(), 1.0, 1e-15);

    Frame g = make_frame({"A", "B"});
    Eigen::VectorXd vac = as_vector(vacuous(g));
    REQUIRE(vac.size() == 3);
    CHECK(vac[0] == 0.0);
    CHECK(vac[1] == 0.0);
    CHECK(vac[2] == 1.0);
}

TEST_CASE("as_vector round-trips") {
    std::mt19937 rng(20240817);
    std::uniform_real_distribution<double> unit(0.05, 1.0);
    std::uniform_int_distribution<int> card_pick(2, 4);
    for (int iter = 0; iter < 1000; ++iter) {
        const int card = card_pick(rng);
        std::vector<std::string> labels;
        for (int i = 0; i < card; ++i) labels.push_back("L" + std::to_string(i));
        Frame f = make_frame(labels);
        const std::uint32_t n = (1u << card) - 1;
        std::vector<std::pair<FocalSet, double>> entries;
        double sum = 0.0;
        for (std::uint32_t bits = 1; bits <= n; ++bits) {
            if (rng() % 2) continue;
            const double v = unit(rng);
            entries.emplace_back(FocalSet(f, bits), v);
            sum += v;
        }
        if (entries.empty()) continue;
        for (auto& [set, mass] : entries) mass /= sum;
        MassFunction m = make_mass(f, entries);
        check_valid(m);
        MassFunction back = from_vector(f, as_vector(m));
        check_valid(back);
        REQUIRE(back.size() == m.size());
        for (std::size_t i = 0; i < m.size(); ++i) {
            CHECK(back.support()[i].first == m.support()[i].first);
            CHECK_NEAR(back.support()[i].second, m.support()[i].second, 1e-12);
        }
    }
}

TEST_CASE("common_frame") {
    Frame f = make_frame({"F1", "F2"});
    Frame g = make_frame({"F1", "X"});
    MassFunction a = vacuous(f), b = vacuous(g);
    CHECK(common_frame({a, a}) == f);
    CHECK_THROWS_AS(common_frame({a, b}), ValidationError);
    CHECK_THROWS_AS(common_frame({}), ValidationError);
}
