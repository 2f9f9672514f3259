#include "galdens/dirichlet.hpp"
#include "galdens/error.hpp"
#include "galdens/primes.hpp"

#include <doctest.h>

#include <cmath>
#include <numeric>

using namespace galdens;

namespace {

Rational brute_matching(const DirichletChar& x, const DirichletChar& y) {
    const std::uint64_t M = std::lcm(x.modulus(), y.modulus());
    std::uint64_t units = 0, same = 0;
    for (std::uint64_t a = 1; a <= M; ++a) {
        if (std::gcd(a, M) != 1) continue;
        ++units;
        // e^(2 pi i ex/ox) = e^(2 pi i ey/oy)  <=>  ox oy divides ex oy - ey ox
        const auto ox = static_cast<std::int64_t>(x.order()), oy = static_cast<std::int64_t>(y.order());
        if ((x.exponent(a) * oy - y.exponent(a) * ox) % (ox * oy) == 0) ++same;
    }
    Rational r(BigInt(static_cast<unsigned long>(same)), BigInt(static_cast<unsigned long>(units)));
    r.canonicalize();
    return r;
}

}  // namespace

TEST_CASE("unit generators") {
    const auto g5 = unit_generators(5);
    REQUIRE(g5.size() == 1);
    CHECK(g5[0].g == 2);
    CHECK(g5[0].order == 4);
    const auto g8 = unit_generators(8);
    REQUIRE(g8.size() == 2);
    CHECK(g8[0].g == 7);
    CHECK(g8[1].g == 5);
    for (std::uint64_t N : {5u, 8u, 12u, 13u, 49u, 60u, 120u}) {
        std::uint64_t prod = 1;
        for (const auto& u : unit_generators(N)) {
            prod *= u.order;
            CHECK(powmod(u.g, u.order, N) == 1 % N);
        }
        CHECK(prod == euler_phi(N));
        CHECK(DirichletChar::count(N) == euler_phi(N));
    }
}

TEST_CASE("characters are homomorphisms") {
    for (std::uint64_t N = 1; N <= 40; ++N) {
        for (std::uint64_t i = 0; i < DirichletChar::count(N); ++i) {
            const auto chi = DirichletChar::from_index(N, i);
            CHECK(chi.is_homomorphism());
            // brute check on all pairs
            for (std::uint64_t a = 1; a < N; ++a)
                for (std::uint64_t b = 1; b < N; ++b) {
                    if (!chi.is_unit(a) || !chi.is_unit(b)) continue;
                    const auto o = static_cast<std::int64_t>(chi.order());
                    CHECK(((chi.exponent(a) + chi.exponent(b)) % o) == chi.exponent(a * b % N));
                }
        }
    }
    CHECK_THROWS_AS(DirichletChar::from_index(5, 4), Error);
    CHECK_THROWS_AS(DirichletChar::from_index(kMaxCharacterModulus + 1, 0), Error);
}

TEST_CASE("exact matching densities") {
    const auto triv = DirichletChar::from_index(5, 0);
    const auto quart = DirichletChar::from_index(5, 1);
    const auto cube = DirichletChar::from_index(5, 3);
    CHECK(quart.order() == 4);
    CHECK(exact_matching_density_dirichlet(quart, quart) == 1);
    CHECK(exact_matching_density_dirichlet(quart, triv) == Rational(1, 4));
    CHECK(exact_matching_density_dirichlet(quart, cube) == Rational(1, 2));
    for (std::uint64_t N : {7u, 8u, 12u, 15u}) {
        for (std::uint64_t i = 0; i < DirichletChar::count(N); ++i)
            for (std::uint64_t j = 0; j < DirichletChar::count(N); ++j) {
                const auto x = DirichletChar::from_index(N, i), y = DirichletChar::from_index(N, j);
                const auto d = exact_matching_density_dirichlet(x, y);
                CHECK(d == brute_matching(x, y));
                CHECK(euler_phi(N) % d.get_den().get_ui() == 0);
            }
    }
    // different moduli are compared on the lcm
    const auto m4 = DirichletChar::from_index(4, 1);
    CHECK(exact_matching_density_dirichlet(m4, quart) == brute_matching(m4, quart));
}

TEST_CASE("induce and ratio") {
    const auto chi = DirichletChar::from_index(5, 1);
    const auto up = chi.induce(15);
    CHECK(up.modulus() == 15);
    CHECK_FALSE(up.is_unit(3));
    CHECK(up.exponent(7) == chi.exponent(2));
    CHECK_THROWS_AS(chi.induce(12), Error);
    const auto r = chi.ratio(chi);
    for (std::uint64_t a = 1; a < 5; ++a) CHECK(r.exponent(a) == 0);
    CHECK(chi.squared_distance(chi, 2) == doctest::Approx(0.0));
    CHECK(chi.squared_distance(DirichletChar::from_index(5, 0), 2) == doctest::Approx(2.0));
}

TEST_CASE("density estimates") {
    const auto chi = DirichletChar::from_index(4, 1);
    const auto triv = DirichletChar::from_index(4, 0);
    const auto s = matching_series(chi, triv, 100000);
    for (auto q : s.primes) CHECK(q != 2);
    const auto nat = natural_density_estimate(s);
    CHECK(std::abs(nat.estimate - 0.5) < 3 * nat.standard_error + 0.01);
    const auto dir = dirichlet_density_estimate(s);
    CHECK(dir.size() == kDefaultSchedule.size());
    for (double v : dir) {
        CHECK(v > 0.0);
        CHECK(v < 1.0);
    }
    CHECK_THROWS_AS(dirichlet_density_estimate(s, {1.2, 1.5}), Error);
    CHECK_THROWS_AS(dirichlet_density_estimate(s, {2.5}), Error);
    CHECK_THROWS_AS(natural_density_estimate(matching_series(chi, triv, 50)), Error);
}

TEST_CASE("weighted diagnostic") {
    const auto x = DirichletChar::from_index(7, 1), y = DirichletChar::from_index(7, 2);
    const auto d = difference_series(x, y, 20000);
    const auto r = rs_diagnostic(d, 1, 1.1);
    CHECK(r.bound == 4.0);
    CHECK(r.holds);
    CHECK(r.weighted_sum / r.bound <= r.marked_sum);
    CHECK(r.marked_sum <= r.total_sum);
    PrimeIndicatorSeries bad;
    bad.primes = {3, 5};
    bad.marked = {1, 1};
    bad.weights = {1.0, 5.0};
    CHECK_THROWS_AS(rs_diagnostic(bad, 1, 1.1), Error);
    CHECK_THROWS_AS(rs_diagnostic(d, 1, 2.0), Error);
    CHECK_THROWS_AS(rs_diagnostic(matching_series(x, y, 1000), 1, 1.1), Error);
}
