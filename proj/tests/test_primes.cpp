#include "galdens/error.hpp"
#include "galdens/primes.hpp"

#include <doctest.h>

using namespace galdens;

namespace {

bool trial_prime(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

}  // namespace

TEST_CASE("sieve and Miller-Rabin agree with trial division") {
    const auto ps = primes_up_to(5000);
    std::size_t idx = 0;
    for (std::uint64_t n = 0; n <= 5000; ++n) {
        const bool expected = trial_prime(n);
        CHECK(is_prime_u64(n) == expected);
        if (expected) CHECK(ps[idx++] == n);
    }
    CHECK(idx == ps.size());
}

TEST_CASE("Miller-Rabin on strong pseudoprimes and large primes") {
    CHECK_FALSE(is_prime_u64(3215031751ull));            // spsp to bases 2, 3, 5, 7
    CHECK_FALSE(is_prime_u64(3825123056546413051ull));   // spsp to bases up to 23
    CHECK(is_prime_u64(18446744073709551557ull));        // largest 64-bit prime
    CHECK(is_probable_prime(BigInt("170141183460469231731687303715884105727")));  // 2^127 - 1
    CHECK_FALSE(is_probable_prime(BigInt("170141183460469231731687303715884105729")));
}

TEST_CASE("next_prime") {
    CHECK(next_prime(0) == 2);
    CHECK(next_prime(7) == 11);
    CHECK(next_prime(1000000) == 1000003);
    // trial division oracle
    std::uint64_t n = 1000001;
    while (!trial_prime(n)) ++n;
    CHECK(next_prime(1000000) == n);
}

TEST_CASE("legendre symbol by Euler's criterion matches squares") {
    for (std::uint64_t p : {3ull, 5ull, 7ull, 11ull, 13ull}) {
        std::vector<int> sq(p, -1);
        sq[0] = 0;
        for (std::uint64_t y = 1; y < p; ++y) sq[y * y % p] = 1;
        for (std::int64_t a = -20; a <= 20; ++a) {
            const auto r = static_cast<std::size_t>(((a % std::int64_t(p)) + std::int64_t(p)) % std::int64_t(p));
            CHECK(legendre_euler(a, p) == sq[r]);
        }
    }
}

TEST_CASE("factorize recovers products") {
    const auto f = factorize(BigInt(145));
    REQUIRE(f.primes.size() == 2);
    CHECK(f.primes[0] == 5);
    CHECK(f.primes[1] == 29);
    CHECK(f.complete);

    const BigInt a("1000000007"), b("998244353");
    const auto g = factorize(a * b * 12);
    BigInt prod = 1;
    for (const auto& q : g.primes) {
        CHECK(is_probable_prime(q));
        prod *= q;
    }
    CHECK(prod == a * b * 12);
    CHECK(g.complete);
}

TEST_CASE("euler_phi and gcd") {
    CHECK(euler_phi(1) == 1);
    CHECK(euler_phi(5) == 4);
    CHECK(euler_phi(36) == 12);
    CHECK(gcd_u64(12, 18) == 6);
    for (std::uint64_t n = 1; n <= 200; ++n) {
        std::uint64_t count = 0;
        for (std::uint64_t a = 1; a <= n; ++a) count += gcd_u64(a, n) == 1;
        CHECK(euler_phi(n) == count);
    }
}
