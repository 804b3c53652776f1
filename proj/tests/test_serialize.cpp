#include <doctest.h>

#include "seaweed/enumerate.hpp"
#include "seaweed/error.hpp"
#include "seaweed/serialize.hpp"

using namespace seaweed;

TEST_CASE("spec JSON schema and round trip") {
    const auto spec = parse_spec("gl 4|1 / 2|1|2");
    const Json j = to_json(spec);
    CHECK(j.dump() == R"({"family":"gl","top":[4,1],"bottom":[2,1,2],"n":5})");
    for (Family fam : {Family::GL, Family::A, Family::B, Family::C}) {
        for (const auto& s : all_specs(fam, 3)) CHECK(spec_from_json(Json::parse(to_json(s).dump())) == s);
    }
    CHECK_THROWS_AS(spec_from_json(Json::parse(R"({"family":"gl","top":[1]})")), Error);
    CHECK_THROWS_AS(spec_from_json(Json::parse(R"({"family":"gl","top":[1],"bottom":[2],"n":1})")), Error);
}

TEST_CASE("meander JSON") {
    const Json m = meander_json(parse_spec("gl 4|1 / 2|1|2"));
    CHECK(m["v"] == 5);
    CHECK(m["top"] == Json::parse("[[1,4],[2,3]]"));
    CHECK(m["bottom"] == Json::parse("[[1,2],[4,5]]"));
    CHECK(m["components"].size() == 1);
    const Json c = meander_json(parse_spec("C 3 / 2", 3));
    CHECK(c["tail_data"]["tail"] == Json::parse("[3]"));
    CHECK(c["full"]["v"] == 6);
}

TEST_CASE("functional JSON round trip") {
    for (const auto& spec : all_specs(Family::GL, 4)) {
        const auto f = construct(spec);
        CHECK(functional_from_json(Json::parse(to_json(f).dump())) == f);
    }
    Functional half;
    half.domain = parse_spec("gl 2 / 2");
    half.entries[{1, 2}] = Rational(-3, 4);
    const Json j = to_json(half);
    CHECK(j["entries"][0]["c"] == "-3/4");
    CHECK(functional_from_json(j) == half);
}

TEST_CASE("relations and core JSON") {
    const auto spec = make_spec(Family::GL, {2}, {2});
    const Json r = to_json(relations_matrix(spec, base_functional(BaseKind::F, 2)));
    CHECK(r["n"] == 2);
    CHECK(r["dim"] == 2);
    CHECK(r["cells"].size() == 2);
    for (const auto& row : r["cells"])
        for (const auto& cell : row)
            for (const auto& t : cell) {
                CHECK(t.contains("var"));
                CHECK(t.contains("coef"));
            }
    const Json core = to_json(core_and_peaks(parse_spec("gl 10|2|4 / 16")));
    CHECK(core["components"].size() == 2);
    CHECK(core["components"][1]["core_blocks"] == Json::parse("[[7,10],[1,4],[13,16]]"));
    const Json sig = signature_json(parse_spec("gl 17|3 / 10|4|6"));
    CHECK(sig["signature"] == "RPC(4)FBC(3)");
    CHECK(sig["homotopy"]["text"] == "H(4,3)");
    CHECK(sig["index"] == 7);
}
