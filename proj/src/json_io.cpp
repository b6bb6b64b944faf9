#include "modquot/json_io.hpp"

#include "modquot/errors.hpp"

namespace modquot {

Json to_json(const Rational& q) { return q.str(); }

Json to_json(const CoefInterval& c) {
    return Json{{"lo", c.lo().str()}, {"hi", c.hi().str()}};
}

Json to_json(const FullDivisorClass& x) {
    Json j;
    j["g"] = x.space.g;
    j["n"] = x.space.n;
    j["lambda"] = x.lambda.str();
    j["irr"] = x.irr.str();
    Json psi = Json::object();
    for (const auto& [label, c] : x.psi) psi[std::to_string(label)] = c.str();
    j["psi"] = psi;
    Json boundary = Json::array();
    for (const auto& [key, c] : x.boundary) {
        Json entry;
        entry["i"] = key.i;
        entry["S"] = subset_labels(key.set);
        entry["c"] = c.str();
        boundary.push_back(entry);
    }
    j["boundary"] = boundary;
    return j;
}

Json to_json(const ProfileDivisorClass& x) {
    Json j;
    j["g"] = x.space.g;
    j["n"] = x.space.n;
    j["blocks"] = x.partition.blocks;
    j["lambda"] = to_json(x.lambda);
    j["irr"] = to_json(x.irr);
    Json psi = Json::array();
    for (const auto& c : x.psi_block) psi.push_back(to_json(c));
    j["psi"] = psi;
    Json profiles = Json::array();
    for (const auto& [p, c] : x.profiles) {
        Json entry;
        entry["profile"] = Json{{"i", p.i}, {"counts", p.counts}};
        entry["lo"] = c.lo().str();
        entry["hi"] = c.hi().str();
        profiles.push_back(entry);
    }
    j["profiles"] = profiles;
    return j;
}

Json to_json(const SlopeEntry& s) {
    return Json{{"g", s.g}, {"slope", s.slope.str()}, {"provenance", provenance_name(s.provenance)}};
}

Json to_json(const CatalogEntry& e) {
    Json j;
    j["name"] = e.name();
    j["g"] = e.space.g;
    j["n"] = e.space.n;
    if (e.m > 0) j["m"] = e.m;
    j["lambda"] = e.a.str();
    j["psi"] = "1";
    j["irr"] = (-e.b_irr).str();
    if (e.b_pair) j["pair"] = (-*e.b_pair).str();
    if (e.kind == CatalogEntry::Kind::Weierstrass) {
        j["bounds"] = Json{{"delta(0,s>=3)", "<= -s"}, {"delta(i>=1,*)", "<= 0"}};
    } else {
        j["bounds"] = Json{{"delta(0,s>=3)", "<= -2"}, {"delta(i>=1,*)", "<= -2"}};
    }
    return j;
}

namespace {

const char* status_name(CoordStatus s) {
    switch (s) {
        case CoordStatus::ProvedExact: return "proved-exact";
        case CoordStatus::ProvedByBound: return "proved-by-bound";
        case CoordStatus::Unproved: return "unproved";
    }
    return "?";
}

const char* grade_name(Certificate::Grade gr) {
    switch (gr) {
        case Certificate::Grade::GeneralType: return "general type";
        case Certificate::Grade::NonNegativeKodaira: return "non-negative Kodaira dimension";
        case Certificate::Grade::Fail: return "fail";
    }
    return "?";
}

}  // namespace

Json to_json(const Certificate& c) {
    Json j;
    Json input;
    input["g"] = c.input.g;
    input["blocks"] = c.input.blocks;
    Json names = Json::array();
    for (const auto& e : c.input.entries) names.push_back(e.name());
    input["entries"] = names;
    j["input"] = input;
    j["slope"] = to_json(c.slope);
    j["epsilon"] = c.epsilon.str();
    j["eta"] = c.eta.str();
    j["f"] = c.f_value.str();
    j["multipliers"] =
        Json{{"D", c.mult_D.str()}, {"L", c.mult_L.str()}, {"W", c.mult_W.str()}, {"psi", c.eta.str()}};
    j["remainder"] = to_json(c.remainder);

    Json status;
    long exact = 0;
    Json by_bound = Json::array(), unproved = Json::array();
    for (const auto& r : c.coordinates) {
        if (r.status == CoordStatus::ProvedExact) {
            ++exact;
            continue;
        }
        Json entry;
        entry["coordinate"] = r.coordinate;
        entry["lo"] = r.remainder.lo().str();
        entry["hi"] = r.remainder.hi().str();
        entry["status"] = status_name(r.status);
        entry["assumptions"] = r.assumptions;
        (r.status == CoordStatus::ProvedByBound ? by_bound : unproved).push_back(entry);
    }
    status["proved_exact"] = exact;
    status["proved_by_bound"] = by_bound;
    status["unproved"] = unproved;
    j["status"] = status;
    j["verdict"] = grade_name(c.grade);
    j["assumptions"] = c.assumptions;
    return j;
}

Json to_json(const Verdict& v) {
    Json j;
    j["classification"] = classification_name(v.classification);
    if (v.classification == Verdict::Classification::IntermediateKodaira) j["kodaira"] = v.kodaira;
    j["justification"] = v.justification;
    if (v.certificate) j["certificate"] = to_json(*v.certificate);
    return j;
}

Rational rational_from_json(const Json& j) {
    if (!j.is_string()) throw ParseError("rational: expected a string \"p/q\"");
    auto q = Rational::parse(j.get<std::string>());
    if (!q) throw ParseError("rational: malformed \"" + j.get<std::string>() + "\"");
    return *q;
}

FullDivisorClass full_class_from_json(const Json& j) {
    if (!j.is_object()) throw ParseError("divisor class: expected an object");
    SpaceId space{j.at("g").get<int>(), j.at("n").get<int>()};
    FullDivisorClass x(space);
    if (j.contains("lambda")) x.lambda = rational_from_json(j.at("lambda"));
    if (j.contains("irr")) x.irr = rational_from_json(j.at("irr"));
    if (j.contains("psi")) {
        for (const auto& [key, value] : j.at("psi").items()) {
            int label = std::stoi(key);
            x.add_psi(label, rational_from_json(value));
        }
    }
    if (j.contains("boundary")) {
        for (const auto& entry : j.at("boundary")) {
            int i = entry.at("i").get<int>();
            Subset s = subset_of(entry.at("S").get<std::vector<int>>());
            x.add_boundary(i, s, rational_from_json(entry.at("c")));
        }
    }
    return x;
}

}  // namespace modquot
