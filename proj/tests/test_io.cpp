#include <doctest.h>

#include "negdef/generators.hpp"
#include "negdef/io.hpp"

using namespace negdef;
using io::json;

TEST_SUITE("rationals") {
    TEST_CASE("exact strings in, canonical strings out") {
        CHECK(io::rat_from_json(json("-6/4")) == make_rat(-3, 2));
        CHECK(io::rat_from_json(json(7)) == Rat(7));
        CHECK(io::to_json(make_rat(-3, 2)) == "-3/2");
        CHECK(io::to_json(Rat(4)) == "4");
    }

    TEST_CASE("floats and garbage are rejected") {
        CHECK_THROWS_AS(io::rat_from_json(json(0.5)), InvalidInput);
        CHECK_THROWS_AS(io::rat_from_json(json("1/0")), InvalidInput);
        CHECK_THROWS_AS(io::rat_from_json(json("6/-4")), InvalidInput);
        CHECK_THROWS_AS(io::rat_from_json(json("0.5")), InvalidInput);
        CHECK_THROWS_AS(io::rat_from_json(json::array()), InvalidInput);
        CHECK_THROWS_AS(io::parse("{\"a\": "), InvalidInput);
    }
}

TEST_SUITE("round trips") {
    TEST_CASE("divisors keep sorted identifiers and drop zeros") {
        RDivisor d;
        d.set("b", make_rat(1, 3));
        d.set("a", Rat(-2));
        d.set("c", Rat(0));
        const json j = io::to_json(d);
        CHECK(j.dump() == R"({"coeffs":{"a":"-2","b":"1/3"}})");
        CHECK(io::divisor_from_json(j) == d);
    }

    TEST_CASE("curve systems") {
        gen::Rng rng(11);
        for (int trial = 0; trial < 50; ++trial) {
            const CurveSystem sys = gen::random_curve_system(rng, 6);
            const CurveSystem back = io::curve_system_from_json(io::to_json(sys));
            CHECK(back.labels() == sys.labels());
            CHECK(back.matrix() == sys.matrix());
        }
    }

    TEST_CASE("stratified systems") {
        gen::Rng rng(12);
        for (int trial = 0; trial < 50; ++trial) {
            const StratifiedSystem ss = gen::random_stratified_system(rng);
            const json j = io::to_json(ss);
            CHECK(io::to_json(io::stratified_from_json(j)) == j);
        }
    }

    TEST_CASE("single-divisor cross block accepts a flat vector") {
        const json j = json::parse(R"({
            "dimension": 3,
            "strata": [{"e": 0, "system": {"matrix": [["-1"]]}},
                       {"e": 1, "system": {"matrix": [["-2"]]}}],
            "cross": [{"from_e": 1, "to_e": 0, "values": ["4"]}]})");
        const StratifiedSystem ss = io::stratified_from_json(j);
        CHECK(ss.pairing(1, 0, 0, 0) == Rat(4));
    }

    TEST_CASE("toric instances") {
        const json j = json::parse(R"({"n": 5, "q": 3, "divisor": {"v1": "-1/2"}, "e": {"v2": "1"}})");
        const io::ToricInstance inst = io::toric_from_json(j);
        CHECK(inst.fan.self_intersections() == std::vector<std::int64_t>{2, 3});
        CHECK(inst.divisor.d == RatVector{0, make_rat(-1, 2), 0, 0});
        REQUIRE(inst.e.has_value());
        CHECK(inst.e->d == RatVector{0, 0, 1, 0});
        CHECK(io::toric_divisor_from_json(inst.fan, io::toric_divisor_to_json(inst.divisor)) ==
              inst.divisor);
    }

    TEST_CASE("unknown ray labels are rejected") {
        const json j = json::parse(R"({"n": 5, "q": 3, "divisor": {"v7": "1"}})");
        CHECK_THROWS_AS(io::toric_from_json(j), InvalidInput);
    }
}
