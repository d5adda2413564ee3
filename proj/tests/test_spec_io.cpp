#include <catch2/catch_amalgamated.hpp>

#include "bergman/spec_io.hpp"

using namespace bergman;

namespace {

Json minimal_quartic() {
    return Json::parse(R"({
        "dimension": 1,
        "mode": "exact",
        "monomials": [
            {"alpha": [1], "beta": [1], "re": "1", "im": "0"},
            {"alpha": [2], "beta": [2], "re": "1/10", "im": "0"}
        ]
    })");
}

} // namespace

TEST_CASE("monomial spec parses and builds the potential") {
    const auto spec = parse_potential_spec(minimal_quartic());
    CHECK(spec.dimension == 1);
    CHECK(spec.mode == "exact");
    CHECK(spec.monomials.size() == 2);

    const auto p = build_potential<GaussianRational>(spec, 10);
    CHECK(p.phi.coeff({1, 1}) == GaussianRational(1));
    CHECK(p.phi.coeff({2, 2}) == GaussianRational::ratio(1, 10));
}

TEST_CASE("hermitian closure is auto-completed") {
    const auto j = Json::parse(R"({
        "dimension": 1,
        "monomials": [
            {"alpha": [1], "beta": [1], "re": "1", "im": "0"},
            {"alpha": [2], "beta": [1], "re": "1/3", "im": "1/5"}
        ]
    })");
    const auto spec = parse_potential_spec(j);
    // the (1,2) partner was added with the conjugate value
    const auto it = spec.monomials.find(std::vector<int>{1, 2});
    REQUIRE(it != spec.monomials.end());
    CHECK(it->second == GaussianRational::parse("1/3", "-1/5"));
}

TEST_CASE("hermitian conflicts are rejected with the offending pair") {
    const auto j = Json::parse(R"({
        "dimension": 1,
        "monomials": [
            {"alpha": [2], "beta": [1], "re": "1/3", "im": "0"},
            {"alpha": [1], "beta": [2], "re": "1/4", "im": "0"}
        ]
    })");
    try {
        parse_potential_spec(j);
        FAIL("expected SpecError");
    } catch (const SpecError& e) {
        CHECK(std::string(e.what()).find("alpha=") != std::string::npos);
    }
}

TEST_CASE("constant term and malformed fields are rejected") {
    auto j = minimal_quartic();
    j["monomials"].push_back({{"alpha", {0}}, {"beta", {0}}, {"re", "1"}, {"im", "0"}});
    CHECK_THROWS_AS(parse_potential_spec(j), SpecError);

    auto bad_mode = minimal_quartic();
    bad_mode["mode"] = "decimal";
    CHECK_THROWS_AS(parse_potential_spec(bad_mode), SpecError);

    auto float_literal = minimal_quartic();
    float_literal["monomials"][0]["re"] = 0.5; // lossy literal in exact mode
    CHECK_THROWS_AS(parse_potential_spec(float_literal), SpecError);

    auto both = minimal_quartic();
    both["builtin"] = "fock";
    CHECK_THROWS_AS(parse_potential_spec(both), SpecError);
}

TEST_CASE("builtin specs") {
    for (const char* name : {"fock", "fubini_study", "hyperbolic"}) {
        Json j;
        j["dimension"] = 1;
        j["builtin"] = name;
        const auto spec = parse_potential_spec(j);
        const auto p = build_potential<GaussianRational>(spec, 12);
        CHECK(p.input_order == 12);
    }
    Json r;
    r["dimension"] = 1;
    r["builtin"] = "radial";
    r["radial_coefficients"] = {"1", "1/10"};
    const auto spec = parse_potential_spec(r);
    CHECK(spec.radial_coeffs.size() == 2);

    Json bad;
    bad["dimension"] = 2;
    bad["builtin"] = "fubini_study";
    CHECK_THROWS_AS(parse_potential_spec(bad), SpecError);
}

TEST_CASE("canonical round-trip is byte-stable") {
    // unsorted, partially closed input
    const auto j = Json::parse(R"({
        "dimension": 1,
        "mode": "exact",
        "monomials": [
            {"alpha": [2], "beta": [1], "re": "2/4", "im": "1/2"},
            {"alpha": [1], "beta": [1], "re": "3/3", "im": "0"}
        ]
    })");
    const auto spec = parse_potential_spec(j);
    const auto canonical = potential_spec_to_json(spec);
    const auto spec2 = parse_potential_spec(canonical);
    const auto canonical2 = potential_spec_to_json(spec2);
    CHECK(canonical.dump() == canonical2.dump());
    CHECK(input_hash(canonical) == input_hash(canonical2));
    // rationals were reduced on the way through
    CHECK(canonical["monomials"][0]["re"].get<std::string>() == "1");
}

TEST_CASE("declared input order gates deep computations") {
    auto j = minimal_quartic();
    j["input_order"] = 12;
    const auto spec = parse_potential_spec(j);
    CHECK_NOTHROW(build_potential<GaussianRational>(spec, 12));
    CHECK_THROWS_AS(build_potential<GaussianRational>(spec, 13), InsufficientInputOrder);
}

TEST_CASE("jet serialization carries exact strings") {
    const auto b = ExactJet::from_terms(base_layout(1), 4,
                                        {{{1, 1}, GaussianRational::ratio(-3, 7)}});
    const auto j = jet_to_json(b);
    REQUIRE(j.size() == 1);
    CHECK(j[0]["re"].get<std::string>() == "-3/7");
    CHECK(j[0]["alpha"] == Json::array({1}));
}

TEST_CASE("fnv1a64 hashes are stable") {
    CHECK(fnv1a64("") == 14695981039346656037ULL);
    CHECK(fnv1a64("a") == 0xaf63dc4c8601ec8cULL);
}
