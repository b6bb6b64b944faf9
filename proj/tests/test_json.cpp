#include <doctest.h>

#include "modquot/json_io.hpp"

#include <random>

using namespace modquot;

TEST_CASE("divisor classes serialize to the documented shape and round trip") {
    SpaceId space{5, 3};
    FullDivisorClass x(space);
    x.lambda = Rational(13);
    x.irr = Rational(-2);
    x.add_psi(1, Rational(1, 2));
    x.add_boundary(0, subset_of({1, 2}), Rational(-3, 7));
    x.add_boundary(2, subset_of({3}), Rational(5));

    Json j = to_json(x);
    CHECK(j["g"] == 5);
    CHECK(j["n"] == 3);
    CHECK(j["lambda"] == "13");
    CHECK(j["psi"]["1"] == "1/2");
    CHECK(j["irr"] == "-2");
    bool found = false;
    for (const auto& entry : j["boundary"])
        if (entry["i"] == 0 && entry["S"] == Json::array({1, 2})) {
            CHECK(entry["c"] == "-3/7");
            found = true;
        }
    CHECK(found);
    CHECK(full_class_from_json(j) == x);

    std::mt19937 rng(61);
    std::uniform_int_distribution<int> d(-9, 9);
    for (int t = 0; t < 25; ++t) {
        FullDivisorClass r(space);
        r.lambda = Rational(d(rng), 4);
        r.irr = Rational(d(rng));
        for (int l = 1; l <= 3; ++l)
            if (d(rng) > 0) r.add_psi(l, Rational(d(rng), 3));
        for (const auto& b : all_boundary_indices(space))
            if (d(rng) > 3) r.add_boundary(b.i, b.set, Rational(d(rng), 5));
        CHECK(full_class_from_json(to_json(r)) == r);
    }
}

TEST_CASE("malformed class JSON is rejected") {
    CHECK_THROWS_AS(full_class_from_json(Json::parse(R"({"g":5,"n":2,"lambda":"x"})")), ParseError);
    CHECK_THROWS_AS(full_class_from_json(Json::parse(R"({"g":5,"n":2,"lambda":"1.5"})")), ParseError);
    CHECK_THROWS_AS(full_class_from_json(Json::parse(R"([1,2])")), ParseError);
    CHECK_THROWS_AS(full_class_from_json(Json::parse(R"({"g":1,"n":2})")), DomainError);
}

TEST_CASE("profile classes expose interval endpoints as strings") {
    ProfileDivisorClass p(SpaceId{5, 4}, BlockPartition::consecutive({2, 2}));
    p.lambda = CoefInterval::exact(Rational(-1, 72));
    p.add_profile(0, {1, 1}, CoefInterval::exact(Rational(-2)));
    p.add_profile(1, {0, 0}, CoefInterval::at_most(Rational(0)));
    Json j = to_json(p);
    CHECK(j["lambda"]["lo"] == "-1/72");
    REQUIRE(j["profiles"].size() == 2);
    CHECK(j["profiles"][0]["profile"]["i"] == 0);
    CHECK(j["profiles"][0]["profile"]["counts"] == Json::array({1, 1}));
    CHECK(j["profiles"][0]["lo"] == "-2");
    CHECK(j["profiles"][0]["hi"] == "-2");
    CHECK(j["profiles"][1]["lo"] == "-inf");
    CHECK(j["profiles"][1]["hi"] == "0");
}

TEST_CASE("certificate JSON carries the published fields") {
    auto cert = build_certificate(CertificateInput::closed(23, {2, 2}));
    Json j = to_json(cert);
    for (const char* key :
         {"input", "epsilon", "eta", "f", "multipliers", "remainder", "status", "verdict",
          "assumptions"})
        CHECK(j.contains(key));
    CHECK(j["epsilon"] == "5/6");
    CHECK(j["f"] == "467/36");
    CHECK(j["verdict"] == "general type");
    CHECK(j["multipliers"]["D"] == "2");
    CHECK(j["status"]["unproved"].empty());
    // deterministic byte-for-byte output
    CHECK(j.dump() == to_json(build_certificate(CertificateInput::closed(23, {2, 2}))).dump());
}

TEST_CASE("verdict JSON") {
    auto v = classify(12, 12, GroupSpec::full_symmetric(12));
    Json j = to_json(v);
    CHECK(j["classification"] == "intermediate Kodaira dimension");
    CHECK(j["kodaira"] == 33);
    CHECK(!j["justification"].empty());
}

TEST_CASE("catalog JSON declares bounds") {
    Json j = to_json(catalog_entry("F", 20, 8));
    CHECK(j["name"] == "F:8");
    CHECK(j["lambda"] == "103/27");
    CHECK(j["pair"] == "-37/9");
    CHECK(j["bounds"]["delta(i>=1,*)"] == "<= -2");
    Json w = to_json(weierstrass_entry(23, 2));
    CHECK(w["bounds"]["delta(0,s>=3)"] == "<= -s");
}
