#include "galdens/density.hpp"
#include "galdens/json_io.hpp"
#include "galdens/named_groups.hpp"
#include "galdens/character_table.hpp"

#include <doctest.h>

using namespace galdens;

TEST_CASE("rational round trip") {
    for (const Rational& r : {Rational(0), Rational(-17, 32), Rational(Rational(BigInt("123456789012345678901234567891")) / 7)}) {
        const auto j = to_json(r);
        CHECK(rational_from_json(j) == r);
        CHECK(rational_from_json(Json::parse(j.dump())) == r);
    }
    CHECK(to_json(Rational(17, 32))["num"] == "17");
    CHECK(to_json(Rational(17, 32))["den"] == "32");
}

TEST_CASE("cyclotomic round trip") {
    const auto z = CycValue::root_of_unity(12, 5) + CycValue::integer(3);
    CHECK(cyc_from_json(Json::parse(to_json(z).dump())) == z);
}

TEST_CASE("class function round trip") {
    const auto g = sl2_f3();
    for (const auto& chi : character_table_small(g)) CHECK(class_function_from_json(g, to_json(chi)) == chi);
}

TEST_CASE("plan serialization") {
    const auto plan = approximate_zero_density(Rational(10, 11), Rational(1, 10));
    const auto j = to_json(plan);
    CHECK(j["certified"] == true);
    CHECK(rational_from_json(j["predicted"]) == Rational(10, 11));
    CHECK(to_json(*plan.window)["primes"] == Json::array({11}));
}

TEST_CASE("run report round trip") {
    RunReport r;
    r.command = "density";
    r.config["seed"] = 5;
    r.results["value"] = to_json(Rational(3, 4));
    r.wall_seconds = 0.25;
    const auto back = RunReport::from_json(Json::parse(r.to_json().dump()));
    CHECK(back.command == "density");
    CHECK(back.config == r.config);
    CHECK(back.results == r.results);
    CHECK(back.wall_seconds == doctest::Approx(0.25));
}

TEST_CASE("huge rationals are summarized") {
    const Rational small(3, 7);
    CHECK(to_json_capped(small) == to_json(small));
    BigInt big;
    mpz_ui_pow_ui(big.get_mpz_t(), 10, 300);
    const Rational r(Rational(big + 1) / Rational(3 * big));
    const auto j = to_json_capped(r);
    REQUIRE(j.contains("approx"));
    CHECK(j["num_digits"] == 301);
    CHECK(j["den_digits"] == 301);
    CHECK(std::stod(j["approx"].get<std::string>()) == doctest::Approx(1.0 / 3));
    CHECK_THROWS(rational_from_json(j));
}
