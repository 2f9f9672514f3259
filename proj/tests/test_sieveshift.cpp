#include "galdens/error.hpp"
#include "galdens/sieveshift.hpp"

#include <doctest.h>

using namespace galdens;

namespace {

/// Prime factors with multiplicity by trial division.
std::vector<BigInt> trial_factors(BigInt n) {
    std::vector<BigInt> out;
    for (BigInt d = 2; d * d <= n; ++d)
        while (n % d == 0) {
            out.push_back(d);
            n /= d;
        }
    if (n > 1) out.push_back(n);
    return out;
}

ErrorCode code_of(const auto& f) {
    try {
        f();
    } catch (const Error& e) {
        return e.code();
    }
    FAIL("expected an error");
    return ErrorCode::InvalidArgument;
}

}  // namespace

TEST_CASE("polynomial basics") {
    const QuadPoly f{1, 3, 5};
    CHECK(f(BigInt(2)) == 15);
    CHECK(f.discriminant() == -11);
    CHECK_NOTHROW(validate(f));
    CHECK_THROWS_AS(validate(QuadPoly{0, 1, 1}), Error);
    CHECK_THROWS_AS(validate(QuadPoly{1, 0, 0}), Error);    // x^2
    CHECK_THROWS_AS(validate(QuadPoly{1, 0, -4}), Error);   // (x-2)(x+2)
    CHECK_THROWS_AS(validate(QuadPoly{2, 4, 6}), Error);    // not primitive
}

TEST_CASE("shifts of x^2 + 1") {
    const QuadPoly f{1, 0, 1};
    const auto s = find_shift(f, 5);
    CHECK(s.A == 6);
    CHECK(s.B == 0);
    CHECK(s.F == QuadPoly{36, 0, 1});
    CHECK(find_shift(f, 3).A == 2);
    const auto big = find_shift(f, 50);
    BigInt primorial = 1;
    for (int p : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47}) primorial *= p;
    CHECK(big.A == primorial);
}

TEST_CASE("shifted values avoid every small prime") {
    const QuadPoly f{1, 3, 5};
    const auto s = find_shift(f, 30);
    for (int l : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29}) {
        for (int n = 0; n < 20; ++n) CHECK(s.F(BigInt(n)) % l != 0);
        // least residue: nothing smaller than B mod l works
        const BigInt b = s.B % l;
        for (BigInt r = 0; r < b; ++r) CHECK(f(r) % l == 0);
    }
    CHECK(s.B < s.A);
    CHECK(s.B >= 0);
}

TEST_CASE("shifted polynomial coefficients") {
    const QuadPoly f{1, 3, 5};
    CHECK(shifted_poly(f, 6, 1) == QuadPoly{36, 30, 9});
    for (int n = -5; n <= 5; ++n) CHECK(shifted_poly(f, 6, 1)(BigInt(n)) == f(BigInt(6 * n + 1)));
}

TEST_CASE("no admissible shift when a small prime always divides") {
    CHECK(code_of([] { find_shift(QuadPoly{1, 1, 2}, 3); }) == ErrorCode::NoAdmissibleShift);
    CHECK(code_of([] { find_shift(QuadPoly{1, 0, 1}, kMaxShiftBound + 1); }) == ErrorCode::BoundExceeded);
    CHECK_THROWS_AS(find_shift(QuadPoly{1, 0, 1}, 2), Error);
}

TEST_CASE("almost-prime scan against trial division") {
    const QuadPoly F{36, 0, 1};
    const auto r = almost_prime_scan(F, 300);
    CHECK(r.unresolved.empty());
    std::size_t expected = 0;
    std::size_t idx = 0;
    for (std::uint64_t n = 1; n <= 300; ++n) {
        const auto fac = trial_factors(F(BigInt(n)));
        if (fac.size() > 2) continue;
        ++expected;
        REQUIRE(idx < r.hits.size());
        CHECK(r.hits[idx].n == n);
        CHECK(r.hits[idx].factors == fac);
        ++idx;
    }
    CHECK(r.hits.size() == expected);
    REQUIRE(r.hits.size() >= 2);
    CHECK(r.hits[0].value == 37);
    CHECK(r.hits[1].value == 145);
    CHECK(r.hits[1].factors == std::vector<BigInt>{5, 29});
    CHECK(almost_prime_scan(F, 300, 4).hits.size() == expected);
    CHECK_THROWS_AS(almost_prime_scan(QuadPoly{1, 0, 0}, 10), Error);
    CHECK_THROWS_AS(almost_prime_scan(QuadPoly{-1, 0, -1}, 10), Error);
}

TEST_CASE("pairwise coprimality") {
    const std::vector<BigInt> yes{4, 9, 25, 7};
    const std::vector<BigInt> no{6, 35, 22};
    CHECK(pairwise_coprime(yes));
    CHECK_FALSE(pairwise_coprime(no));
    CHECK(pairwise_coprime(std::vector<BigInt>{1}));
    CHECK_THROWS_AS(pairwise_coprime(std::vector<BigInt>{}), Error);
    CHECK_THROWS_AS(pairwise_coprime(std::vector<BigInt>{3, 0}), Error);
}
