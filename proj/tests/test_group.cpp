#include "galdens/class_function.hpp"
#include "galdens/error.hpp"
#include "galdens/group.hpp"
#include "galdens/named_groups.hpp"
#include "galdens/presets.hpp"

#include <doctest.h>

#include <algorithm>
#include <set>

using namespace galdens;

namespace {

/// Classes by conjugating with every element; sorted by minimal element.
std::vector<std::vector<Elem>> brute_classes(const FiniteGroup& g) {
    std::vector<int> seen(g.order(), 0);
    std::vector<std::vector<Elem>> out;
    for (Elem x = 0; x < g.order(); ++x) {
        if (seen[x]) continue;
        std::set<Elem> cls;
        for (Elem y = 0; y < g.order(); ++y) cls.insert(g.conjugate(x, y));
        for (Elem z : cls) seen[z] = 1;
        out.emplace_back(cls.begin(), cls.end());
    }
    return out;
}

std::vector<FiniteGroup> corpus() {
    return {trivial_group(),       cyclic_group(6), quaternion_group(), symmetric_group_s3(),
            dihedral_group_d4(),   sl2_f3(),        heisenberg_group(3), heisenberg_group(5)};
}

}  // namespace

TEST_CASE("named groups satisfy the axioms and have the expected orders") {
    CHECK(trivial_group().order() == 1);
    CHECK(cyclic_group(6).order() == 6);
    CHECK(quaternion_group().order() == 8);
    CHECK(symmetric_group_s3().order() == 6);
    CHECK(dihedral_group_d4().order() == 8);
    CHECK(sl2_f3().order() == 24);
    CHECK(heisenberg_group(3).order() == 27);
    for (const auto& g : corpus()) CHECK_NOTHROW(check_group_axioms(g));
    CHECK(named_group("gl2fp:5").order() == 480);
    CHECK_THROWS_AS(named_group("nonsense"), Error);
}

TEST_CASE("conjugacy classes agree with conjugation by every element") {
    for (const auto& g : corpus()) {
        const auto& cls = g.classes();
        const auto brute = brute_classes(g);
        REQUIRE(cls.size() == brute.size());
        for (std::size_t i = 0; i < brute.size(); ++i) {
            auto mine = cls.classes[i];
            std::sort(mine.begin(), mine.end());
            CHECK(mine == brute[i]);
            CHECK(cls.representatives[i] == brute[i].front());
            for (Elem x : brute[i]) CHECK(cls.class_of[x] == i);
        }
    }
}

TEST_CASE("class counts of the corpus") {
    CHECK(quaternion_group().classes().size() == 5);
    CHECK(symmetric_group_s3().classes().size() == 3);
    CHECK(dihedral_group_d4().classes().size() == 5);
    CHECK(sl2_f3().classes().size() == 7);
    CHECK(heisenberg_group(3).classes().size() == 11);
}

TEST_CASE("table_group rejects non-groups") {
    // not associative: a Latin square with identity 0 that is not a group table
    const std::vector<Elem> bad{0, 1, 2, 3, 4,  1, 0, 3, 4, 2,  2, 4, 0, 1, 3,  3, 2, 4, 0, 1,  4, 3, 1, 2, 0};
    CHECK_THROWS_AS(table_group("bad", 5, bad), Error);
    const std::vector<Elem> not_closed{0, 1, 1, 2};
    CHECK_THROWS_AS(table_group("bad", 2, not_closed), Error);
    const std::vector<Elem> z2{0, 1, 1, 0};
    CHECK(table_group("z2", 2, z2).order() == 2);
}

TEST_CASE("nilpotency and abelianness") {
    CHECK(is_abelian(cyclic_group(6)));
    CHECK(is_nilpotent(cyclic_group(6)));
    CHECK(is_nilpotent(quaternion_group()));
    CHECK(is_nilpotent(dihedral_group_d4()));
    CHECK(is_nilpotent(heisenberg_group(3)));
    CHECK_FALSE(is_nilpotent(symmetric_group_s3()));
    CHECK_FALSE(is_nilpotent(sl2_f3()));
    CHECK_FALSE(is_abelian(quaternion_group()));
}

TEST_CASE("center, derived subgroup and quotients of SL2(F3)") {
    const auto g = sl2_f3();
    CHECK(center(g).size() == 2);
    const auto d = derived_subgroup(g);
    CHECK(d.size() == 8);
    CHECK(is_normal(g, d));
    const auto q = quotient_map(g, d, "c3");
    CHECK(q.target.order() == 3);
    CHECK_NOTHROW(check_surjective_homomorphism(q));
    const auto a4 = quotient_map(g, center(g), "a4");
    CHECK(a4.target.order() == 12);
    CHECK(a4.target.classes().size() == 4);
}

TEST_CASE("direct products split and carry factor classes") {
    const auto g = direct_product(symmetric_group_s3(), cyclic_group(4));
    CHECK(g.order() == 24);
    CHECK(g.classes().size() == 12);
    CHECK_NOTHROW(check_group_axioms(g));
    const auto brute = brute_classes(g);
    CHECK(brute.size() == g.classes().size());
    for (Elem x = 0; x < g.order(); ++x) {
        const auto [a, b] = split_product_element(g, x);
        const auto [c, d] = split_product_element(g, g.inverse(x));
        CHECK(symmetric_group_s3().mul(a, c) == symmetric_group_s3().identity());
        CHECK(cyclic_group(4).mul(b, d) == cyclic_group(4).identity());
    }
    REQUIRE(product_factors(g).has_value());
}

TEST_CASE("fiber product order law") {
    const auto g = sl2_f3();
    for (const auto& kernel : {derived_subgroup(g), center(g), std::vector<Elem>{g.identity()}}) {
        const auto q = quotient_map(g, kernel);
        const auto f = fiber_product(q, q);
        CHECK(f.order() == g.order() * g.order() / q.target.order());
        CHECK_NOTHROW(check_group_axioms(f));
        for (Elem x = 0; x < f.order(); ++x) {
            const auto [a, b] = fiber_components(f, x);
            CHECK(q(a) == q(b));
        }
    }
    const auto qs3 = quotient_map(symmetric_group_s3(), derived_subgroup(symmetric_group_s3()));
    const auto qc4 = quotient_map(cyclic_group(4), std::vector<Elem>{0});
    CHECK_THROWS_AS(fiber_product(qs3, qc4), Error);
}

TEST_CASE("matching and zero fractions: class-wise equals element-wise") {
    for (const auto& g : corpus()) {
        const auto f = ClassFunction::from_elements(g, [&](Elem x) { return CycValue::integer(long(g.element_order(x) % 3)); });
        const auto h = ClassFunction::from_elements(g, [&](Elem x) { return CycValue::integer(long(g.element_order(x) % 2)); });
        CHECK(matching_fraction(f, h) == matching_fraction_elementwise(f, h));
        CHECK(matching_fraction(f, f) == 1);
        CHECK(matching_fraction(f, h) == matching_fraction(h, f));
        CHECK(matching_fraction(f, h) >= zero_fraction(f) + zero_fraction(h) - 1);
    }
}

TEST_CASE("tetrahedral pair reproduces 17/32 and a single integer-trace character") {
    const auto pair = tetrahedral_pair("c3");
    CHECK(pair.integer_trace_count == 1);
    CHECK(pair.fiber.order() == 192);
    CHECK(matching_fraction(pair.chi1, pair.chi2) == Rational(17, 32));
    CHECK(matching_fraction_elementwise(pair.chi1, pair.chi2) == Rational(17, 32));
    // the integer-trace character vanishes exactly on the six elements of order 4
    CHECK(zero_fraction(pair.chi) == Rational(1, 4));
    const auto over_a4 = tetrahedral_pair("a4");
    CHECK(over_a4.fiber.order() == 48);
    CHECK_THROWS_AS(tetrahedral_pair("c2"), Error);
}

TEST_CASE("Serre pairs realize 1 - 1/(2k^2)") {
    const auto p2 = serre_pair(2);
    CHECK(matching_fraction(p2.rho, p2.twisted) == Rational(7, 8));
    const auto p3 = serre_pair(3);
    CHECK(matching_fraction(p3.rho, p3.twisted) == Rational(17, 18));
    CHECK_THROWS_AS(serre_pair(4), Error);
}
