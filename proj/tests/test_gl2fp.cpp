#include "galdens/error.hpp"
#include "galdens/gl2fp.hpp"

#include <doctest.h>

using namespace galdens;

namespace {

/// Class kind from the characteristic polynomial and scalar test.
ClassKind brute_kind(const GL2Element& g) {
    const long p = g.p;
    const long a = g.m[0], b = g.m[1], c = g.m[2], d = g.m[3];
    if (b == 0 && c == 0 && a == d) return ClassKind::Central;
    const long t = (a + d) % p, n = ((a * d - b * c) % p + p) % p;
    const long disc = ((t * t - 4 * n) % p + p) % p;
    if (disc == 0) return ClassKind::NonSemisimple;
    for (long x = 1; x < p; ++x)
        if (x * x % p == disc) return ClassKind::SplitRegular;
    return ClassKind::NonsplitRegular;
}

std::uint64_t gl2_order(std::uint64_t p) { return (p * p - 1) * (p * p - p); }

}  // namespace

TEST_CASE("classify examples") {
    CHECK(classify(GL2Element::make(7, 3, 0, 0, 3)).kind == ClassKind::Central);
    CHECK(classify(GL2Element::make(7, 1, 1, 0, 1)).kind == ClassKind::NonSemisimple);
    CHECK(classify(GL2Element::make(7, 1, 0, 0, 2)).kind == ClassKind::SplitRegular);
    CHECK(classify(GL2Element::make(7, 0, -1, 1, 0)).kind == ClassKind::NonsplitRegular);
    CHECK(classify(GL2Element::make(5, 0, -1, 1, 0)).kind == ClassKind::SplitRegular);
    CHECK_THROWS_AS(GL2Element::make(7, 1, 1, 1, 1), Error);
}

TEST_CASE("classify agrees with the characteristic polynomial on all of GL2(F5) and GL2(F7)") {
    for (unsigned p : {5u, 7u}) {
        const auto g = gl2_group(p);
        REQUIRE(g.order() == gl2_order(p));
        for (Elem x = 0; x < g.order(); ++x) {
            const auto e = gl2_element(g, x);
            CHECK(classify(e).kind == brute_kind(e));
        }
    }
}

TEST_CASE("closed-form class fractions match enumeration") {
    for (unsigned p : {5u, 7u, 11u, 13u}) {
        const auto f = class_type_fractions(p);
        const auto n = class_type_counts_by_enumeration(p);
        const Rational order(BigInt(static_cast<unsigned long>(gl2_order(p))));
        CHECK(n.total() == gl2_order(p));
        CHECK(f.central == Rational(BigInt(static_cast<unsigned long>(n.central))) / order);
        CHECK(f.non_semisimple == Rational(BigInt(static_cast<unsigned long>(n.non_semisimple))) / order);
        CHECK(f.split_regular == Rational(BigInt(static_cast<unsigned long>(n.split_regular))) / order);
        CHECK(f.nonsplit_regular == Rational(BigInt(static_cast<unsigned long>(n.nonsplit_regular))) / order);
        CHECK(f.sum() == 1);
    }
}

TEST_CASE("class fractions for p = 11") {
    const auto f = class_type_fractions(11);
    CHECK(f.central == Rational(1, 1320));
    CHECK(f.non_semisimple == Rational(1, 11));
    CHECK(f.split_regular == Rational(9, 20));
    CHECK(f.nonsplit_regular == Rational(11, 24));
    CHECK(f[ClassKind::SplitRegular] == f.split_regular);
}

TEST_CASE("Steinberg character") {
    CHECK(steinberg_value(ClassKind::Central, 7) == 7);
    CHECK(steinberg_value(ClassKind::NonSemisimple, 7) == 0);
    CHECK(steinberg_value(ClassKind::SplitRegular, 7) == 1);
    CHECK(steinberg_value(ClassKind::NonsplitRegular, 7) == -1);
    for (unsigned p : {5u, 7u}) {
        const auto st = steinberg_character(p);
        CHECK(inner_product(st, st) == CycValue::integer(1));
        CHECK(st.degree() == CycValue::integer(p));
        CHECK(zero_fraction(st) == Rational(1, p));
    }
}

TEST_CASE("product of Steinberg characters") {
    const std::vector<Gl2Character> f{{5, steinberg_character(5)}, {7, steinberg_character(7)}};
    CHECK(product_zero_fraction(f) == Rational(11, 35));
    const auto chi = product_character(f);
    CHECK(chi.group().order() == gl2_order(5) * gl2_order(7));
    CHECK(zero_fraction(chi) == Rational(11, 35));
    const std::vector<Gl2Character> repeated{{5, steinberg_character(5)}, {5, steinberg_character(5)}};
    CHECK_THROWS_AS(product_character(repeated), Error);
}

TEST_CASE("argument checks") {
    CHECK_THROWS_AS(gl2_group(4), Error);
    CHECK_THROWS_AS(gl2_group(37), Error);
    CHECK_THROWS_AS(class_type_fractions(9), Error);
    CHECK(class_type_fractions(1000003).sum() == 1);
}
