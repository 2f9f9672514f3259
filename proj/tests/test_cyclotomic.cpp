#include "galdens/cyclotomic.hpp"

#include <doctest.h>

#include <cmath>

using namespace galdens;

TEST_CASE("cyclotomic polynomials") {
    CHECK(cyclotomic_polynomial(1) == std::vector<long>{-1, 1});
    CHECK(cyclotomic_polynomial(4) == std::vector<long>{1, 0, 1});
    CHECK(cyclotomic_polynomial(6) == std::vector<long>{1, -1, 1});
    CHECK(cyclotomic_polynomial(12) == std::vector<long>{1, 0, -1, 0, 1});
}

TEST_CASE("roots of unity reduce and sum to zero") {
    for (unsigned e : {2u, 3u, 4u, 5u, 6u, 8u, 12u}) {
        CycValue sum(e);
        for (unsigned k = 0; k < e; ++k) sum += CycValue::root_of_unity(e, k);
        CHECK(sum.is_zero());
        CHECK(CycValue::root_of_unity(e, e) == CycValue::integer(1, e));
        CHECK(CycValue::root_of_unity(e, 1) * CycValue::root_of_unity(e, e - 1) == CycValue::integer(1, e));
    }
}

TEST_CASE("values of different conductors compare after embedding") {
    // zeta_4^2 = -1 = zeta_2
    CHECK(CycValue::root_of_unity(4, 2) == CycValue::integer(-1));
    CHECK(CycValue::root_of_unity(6, 2) == CycValue::root_of_unity(3, 1));
    CHECK(CycValue::root_of_unity(12, 3) == CycValue::root_of_unity(4, 1));
    CHECK_FALSE(CycValue::root_of_unity(3, 1) == CycValue::root_of_unity(3, 2));
}

TEST_CASE("conjugation and complex embedding agree") {
    const CycValue z = CycValue::root_of_unity(5, 1) + CycValue::rational(Rational(1, 2), 5);
    const auto c = z.to_complex();
    const auto cc = z.conj().to_complex();
    CHECK(std::abs(c.real() - cc.real()) < 1e-12);
    CHECK(std::abs(c.imag() + cc.imag()) < 1e-12);
    const CycValue norm = z * z.conj();
    CHECK(norm.is_rational() == false);  // |zeta + 1/2|^2 = 5/4 + cos(2 pi/5), irrational
    CHECK(std::abs(norm.to_complex().real() - std::norm(c)) < 1e-12);
}

TEST_CASE("rational values") {
    const CycValue r = CycValue::rational(Rational(3, 7), 8);
    CHECK(r.is_rational());
    CHECK(r.to_rational() == Rational(3, 7));
    CHECK((r - r).is_zero());
    CHECK(r.scaled(Rational(7, 3)) == CycValue::integer(1));
}
