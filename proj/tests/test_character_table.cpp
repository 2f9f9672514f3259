#include "galdens/character_table.hpp"
#include "galdens/error.hpp"
#include "galdens/gl2fp.hpp"
#include "galdens/named_groups.hpp"

#include <doctest.h>

#include <algorithm>

using namespace galdens;

namespace {

Rational degree_of(const ClassFunction& chi) { return chi.degree().to_rational(); }

void check_table(const FiniteGroup& g) {
    const auto table = character_table_small(g);
    REQUIRE(table.size() == g.classes().size());
    Rational sum_sq = 0;
    for (std::size_t i = 0; i < table.size(); ++i) {
        sum_sq += degree_of(table[i]) * degree_of(table[i]);
        for (std::size_t j = 0; j < table.size(); ++j)
            CHECK(inner_product(table[i], table[j]) == CycValue::integer(i == j ? 1 : 0));
    }
    CHECK(sum_sq == Rational(BigInt(static_cast<unsigned long>(g.order()))));
    // column orthogonality: sum_chi |chi(g)|^2 = |C_G(g)|
    for (std::size_t c = 0; c < g.classes().size(); ++c) {
        CycValue s;
        for (const auto& chi : table) s += chi.on_class(c) * chi.on_class(c).conj();
        CHECK(s == CycValue::integer(long(g.order() / g.classes().class_size(c))));
    }
    for (const auto& chi : table)
        for (Elem x = 0; x < g.order(); ++x)
            for (Elem y : g.generators()) CHECK(chi.at(x) == chi.at(g.conjugate(x, y)));
}

}  // namespace

TEST_CASE("trivial group") {
    const auto table = character_table_small(trivial_group());
    REQUIRE(table.size() == 1);
    CHECK(table[0].degree() == CycValue::integer(1));
}

TEST_CASE("orthogonality on the corpus") {
    for (const char* name : {"q8", "d4", "s3", "cyclic:6", "cyclic:7", "sl2f3", "heisenberg:3", "heisenberg:5"}) {
        INFO(name);
        check_table(named_group(name));
    }
}

TEST_CASE("Q8 has four linear characters and one of degree 2 vanishing off the center") {
    const auto g = quaternion_group();
    const auto table = character_table_small(g);
    int linear = 0, two = 0;
    for (const auto& chi : table) {
        if (chi.degree() == CycValue::integer(1)) ++linear;
        if (chi.degree() == CycValue::integer(2)) {
            ++two;
            const auto z = center(g);
            for (Elem x = 0; x < g.order(); ++x) {
                const bool central = std::find(z.begin(), z.end(), x) != z.end();
                CHECK(chi.at(x).is_zero() == !central);
            }
        }
    }
    CHECK(linear == 4);
    CHECK(two == 1);
}

TEST_CASE("S3 degrees and sorting") {
    const auto g = symmetric_group_s3();
    const auto table = character_table_small(g);
    REQUIRE(table.size() == 3);
    CHECK(degree_of(table[0]) == 1);
    CHECK(degree_of(table[1]) == 1);
    CHECK(degree_of(table[2]) == 2);
    const auto trivial = ClassFunction::constant(g, CycValue::integer(1));
    CHECK((table[0] == trivial || table[1] == trivial));
}

TEST_CASE("nonlinear characters of nilpotent groups vanish on at least half") {
    for (const char* name : {"q8", "d4", "heisenberg:3", "heisenberg:5"}) {
        const auto g = named_group(name);
        REQUIRE(is_nilpotent(g));
        for (const auto& chi : character_table_small(g))
            if (chi.degree() != CycValue::integer(1)) CHECK(zero_fraction(chi) >= Rational(1, 2));
    }
}

TEST_CASE("SL2(F3) has exactly one integer-valued 2-dimensional irreducible") {
    int count = 0;
    for (const auto& chi : character_table_small(sl2_f3())) {
        if (chi.degree() != CycValue::integer(2)) continue;
        bool integral = true;
        for (const auto& v : chi.values()) integral = integral && v.is_rational() && v.to_rational().get_den() == 1;
        count += integral;
    }
    CHECK(count == 1);
}

TEST_CASE("limits are enforced") {
    CHECK_THROWS_AS(character_table_small(gl2_group(7)), Error);  // 48 classes
    // least prime = 1 mod 4 above 2*ceil(sqrt(8)) = 6
    CHECK(character_table_prime(8, 4) == 13);
    CHECK(character_table_prime(24, 12) == 13);
}

TEST_CASE("Steinberg character of GL2(F5) is irreducible and appears in the table") {
    const auto g = gl2_group(5);  // 24 classes, order 480
    const auto st = steinberg_character(5);
    const auto table = character_table_small(g);
    bool found = false;
    for (const auto& chi : table) found = found || chi == st;
    CHECK(found);
    CHECK(inner_product(st, st) == CycValue::integer(1));
}
