#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "ordlat/powerproduct.hpp"

using namespace ordlat;

TEST_CASE("factorization of rationals") {
    PowerProduct p = PowerProduct::from_rational(make_rat(12, 25));
    auto& f = p.factors();
    REQUIRE(f.size() == 3);
    CHECK(f.at(2) == 2);
    CHECK(f.at(3) == 1);
    CHECK(f.at(5) == -2);
    CHECK(p.exact());
    CHECK(*p.as_rational() == make_rat(12, 25));
}

TEST_CASE("parse round trips") {
    PowerProduct p = PowerProduct::parse("2^3/2*3^-1/10");
    CHECK(p.exact());
    CHECK(p.factors().at(2) == make_rat(3, 2));
    CHECK(p.factors().at(3) == make_rat(-1, 10));
    CHECK(PowerProduct::parse(p.to_string()).equals(p));

    PowerProduct lit = PowerProduct::parse("3.52006");
    CHECK(!lit.exact());
    CHECK(lit.to_double() == doctest::Approx(3.52006));

    PowerProduct q = PowerProduct::parse("4/3");
    CHECK(*q.as_rational() == make_rat(4, 3));

    CHECK(PowerProduct::parse("2^(7/6)").equals(PowerProduct::parse("2^7/6")));
    CHECK_THROWS(PowerProduct::parse(""));
    CHECK_THROWS(PowerProduct::parse("0"));
    CHECK_THROWS(PowerProduct::parse("-2"));
}

TEST_CASE("multiplication and powering are exact and consistent") {
    PowerProduct a = PowerProduct::parse("2^7/6");
    PowerProduct b = PowerProduct::parse("2^1/3*3^1/2");
    PowerProduct ab = a * b;
    CHECK(ab.factors().at(2) == make_rat(3, 2));
    CHECK(ab.factors().at(3) == make_rat(1, 2));
    // (x*y)^n two ways
    PowerProduct lhs = ab.pow(make_rat(4, 1));
    PowerProduct rhs = a.pow(Rat(4)) * b.pow(Rat(4));
    CHECK(lhs.equals(rhs));
    CHECK(*lhs.as_rational() == Rat(64) * Rat(9));
    // Exponents cancel back to 1
    CHECK(a.pow(Rat(0)).is_one());
    CHECK((a * a.pow(Rat(-1))).is_one());
}

TEST_CASE("exact comparison by cross-powering") {
    PowerProduct a = PowerProduct::parse("2^7/6");   // ~2.2449
    PowerProduct b = PowerProduct::parse("2^3/2");   // ~2.8284
    CHECK(a.compare(b) < 0);
    CHECK(b.compare(a) > 0);
    CHECK(a.compare(a) == 0);
    // sqrt(2)^2 == 2
    CHECK(PowerProduct::parse("2^1/2").pow(Rat(2)).compare(PowerProduct::parse("2")) == 0);
    // 2^(1/2) vs 3^(1/3): 2^3 = 8 vs 3^2 = 9
    CHECK(PowerProduct::parse("2^1/2").compare(PowerProduct::parse("3^1/3")) < 0);
}

TEST_CASE("guarded decimal comparison with literals") {
    PowerProduct lit = PowerProduct::parse("3.52006");
    PowerProduct lo = PowerProduct::parse("3.5");
    PowerProduct hi = PowerProduct::parse("2");  // exact 2 < 3.52006
    CHECK(lit.compare(lo) > 0);
    CHECK(hi.compare(lit) < 0);
    CHECK(lit.compare(lit) == 0);
    // Exact vs literal with genuinely different values is unambiguous.
    CHECK(PowerProduct::parse("2^11/6").compare(PowerProduct::parse("3.57")) < 0);
    CHECK(PowerProduct::parse("2^11/6").compare(PowerProduct::parse("3.56")) > 0);
}

TEST_CASE("decimal evaluation") {
    CHECK(PowerProduct::parse("2^3/2").to_decimal(6) == "2.82843");
    CHECK(PowerProduct::parse("2^7/6").to_decimal(6) == "2.24492");
    CHECK(PowerProduct::parse("2^23/11*3^1/22").to_decimal(6) == "4.47831");
    CHECK(PowerProduct::parse("2*3^-1/2").to_decimal(6) == "1.1547");
}

TEST_CASE("json serialization") {
    PowerProduct p = PowerProduct::parse("2^3/2*3^-1/10");
    nlohmann::json j = p.to_json();
    CHECK(j["factors"]["2"] == "3/2");
    CHECK(j["factors"]["3"] == "-1/10");
    CHECK(j["literal"].is_null());
    CHECK(PowerProduct::from_json(j).equals(p));

    PowerProduct lit = PowerProduct::parse("3.52006") * PowerProduct::parse("2^1/2");
    nlohmann::json j2 = lit.to_json();
    CHECK(j2["literal"] == "3.52006");
    CHECK(j2["factors"]["2"] == "1/2");
    CHECK(PowerProduct::from_json(j2).equals(lit));
}
