#include "galdens/density.hpp"
#include "galdens/error.hpp"
#include "galdens/gl2fp.hpp"

#include <doctest.h>

#include <cstdlib>

using namespace galdens;

namespace {

BigInt balanced_product(const std::vector<std::uint64_t>& v, std::size_t lo, std::size_t hi, std::uint64_t shift) {
    if (hi - lo == 1) return BigInt(static_cast<unsigned long>(v[lo] - shift));
    const std::size_t mid = lo + (hi - lo) / 2;
    return balanced_product(v, lo, mid, shift) * balanced_product(v, mid, hi, shift);
}

/// prod (p-1) / prod p, reduced once at the end.
Rational brute_w(const std::vector<std::uint64_t>& primes) {
    Rational w(balanced_product(primes, 0, primes.size(), 1), balanced_product(primes, 0, primes.size(), 0));
    w.canonicalize();
    return w;
}

Rational distance(const Rational& a, const Rational& b) { return abs(Rational(a - b)); }

}  // namespace

TEST_CASE("w density of small windows") {
    CHECK(w_density(PrimeWindow::from_primes({11})) == Rational(10, 11));
    CHECK(w_density(PrimeWindow::from_primes({11, 13})) == Rational(120, 143));
    const auto win = PrimeWindow::consecutive(11, 200);
    CHECK(win.primes().size() == 200);
    CHECK(w_density(win) == brute_w(win.primes()));
    CHECK(zero_density(win) == 1 - brute_w(win.primes()));
    const auto big = PrimeWindow::consecutive(101, 5000);
    CHECK(w_density(big) == brute_w(big.primes()));
}

TEST_CASE("zero density matches the product character") {
    const std::vector<std::uint64_t> ps{5, 7};
    const std::vector<Gl2Character> f{{5, steinberg_character(5)}, {7, steinberg_character(7)}};
    CHECK(zero_density(ps) == Rational(11, 35));
    CHECK(zero_density(ps) == product_zero_fraction(f));
}

TEST_CASE("prime windows") {
    const auto w = PrimeWindow::consecutive(11, 3);
    CHECK(w.primes() == std::vector<std::uint64_t>{11, 13, 17});
    CHECK(w.k() == 5);  // 11 is the fifth prime
    CHECK(w.m() == 2);
    CHECK(PrimeWindow::consecutive(12, 1).primes().front() == 13);
    CHECK_THROWS_AS(PrimeWindow::from_primes({7}), Error);
    CHECK_THROWS_AS(PrimeWindow::from_primes({11, 15}), Error);
    CHECK_THROWS_AS(PrimeWindow::from_primes({11, 11}), Error);
    CHECK_THROWS_AS(PrimeWindow::from_primes({}), Error);
}

TEST_CASE("twist density") {
    CHECK(twist_density(Rational(3, 4), 2) == Rational(7, 8));
    CHECK(twist_density(Rational(8, 9), 2) == Rational(17, 18));
    CHECK(twist_density(Rational(0), 2) == Rational(1, 2));
    CHECK(twist_density(Rational(1, 3), 1) == 1);
    Rational prev = 2;
    for (std::uint64_t d = 1; d < 40; ++d) {
        const auto t = twist_density(Rational(2, 7), d);
        CHECK(t < prev);
        CHECK(t >= Rational(2, 7));
        prev = t;
    }
    CHECK_THROWS_AS(twist_density(Rational(1, 2), 0), Error);
    CHECK_THROWS_AS(twist_density(Rational(3, 2), 2), Error);
}

TEST_CASE("zero-density planner") {
    const auto plan = approximate_zero_density(Rational(10, 11), Rational(1, 10));
    REQUIRE(plan.window);
    CHECK(plan.window->primes() == std::vector<std::uint64_t>{11});
    CHECK(plan.certified());

    const Rational c(1, 2), eps(1, 100);
    const auto half = approximate_zero_density(c, eps);
    REQUIRE(half.window);
    const auto& ps = half.window->primes();
    CHECK(ps.front() > 100);
    CHECK(distance(brute_w(ps), c) <= eps);
    // consecutive: every prime between the ends is present
    CHECK(PrimeWindow::consecutive(ps.front(), ps.size()).primes() == ps);
    CHECK(half.trace.gap_bound_held);

    CHECK_THROWS_AS(approximate_zero_density(Rational(0), Rational(1, 20)), Error);
    CHECK_THROWS_AS(approximate_zero_density(Rational(3, 2), Rational(1, 10)), Error);
    CHECK_THROWS_AS(approximate_zero_density(Rational(1, 2), Rational(-1, 10)), Error);
}

TEST_CASE("zero-density planner reports BoundExceeded for unreachable targets") {
    try {
        approximate_zero_density(Rational(0), Rational(1, 20));
        FAIL("expected an error");
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::BoundExceeded);
    }
}

TEST_CASE("matching-density planner") {
    for (auto conv : {BaseConvention::NonzeroProportion, BaseConvention::ZeroFraction}) {
        for (const Rational& c : {Rational(1), Rational(9, 10), Rational(3, 4), Rational(3, 5)}) {
            const Rational eps(1, 10);
            const auto plan = approximate_matching_density(c, eps, conv);
            CHECK(plan.certified());
            REQUIRE(plan.window);
            Rational b = brute_w(plan.window->primes());
            if (conv == BaseConvention::ZeroFraction) b = 1 - b;
            const auto d = plan.twist_order.value_or(1);
            CHECK(distance(twist_density(b, d), c) <= eps);
        }
    }
}

TEST_CASE("exact targets use group presets") {
    const auto t = approximate_matching_density(Rational(17, 32), Rational(0));
    CHECK(t.preset == "tetrahedral-17-32");
    CHECK(t.predicted_density() == Rational(17, 32));
    const auto s = approximate_matching_density(Rational(17, 18), Rational(0));
    CHECK(s.preset == "serre-k:3");
    CHECK(s.predicted_density() == Rational(17, 18));
    CHECK(preset_density("steinberg:7") == Rational(1, 7));
    CHECK_THROWS_AS(preset_density("nope"), Error);
}

TEST_CASE("exact zero-density target found by search") {
    const auto plan = approximate_zero_density(Rational(120, 143), Rational(0));
    REQUIRE(plan.window);
    CHECK(plan.window->primes() == std::vector<std::uint64_t>{11, 13});
    CHECK_THROWS_AS(approximate_zero_density(Rational(1, 3), Rational(0)), Error);
}

TEST_CASE("work bound from the environment") {
    ::setenv("GALDENS_WORK_BOUND", "5000", 1);
    CHECK(PlannerConfig::from_environment().max_prime == 5000);
    ::setenv("GALDENS_WORK_BOUND", "junk", 1);
    CHECK(PlannerConfig::from_environment().max_prime == PlannerConfig{}.max_prime);
    ::unsetenv("GALDENS_WORK_BOUND");
    PlannerConfig small;
    small.max_prime = 1000;
    CHECK_THROWS_AS(approximate_zero_density(Rational(1, 10), Rational(1, 100), small), Error);
}
