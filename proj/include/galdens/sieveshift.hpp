#pragma once

#include "galdens/primes.hpp"
#include "galdens/rational.hpp"

#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace galdens {

/// f(x) = a x^2 + b x + c.
struct QuadPoly {
    BigInt a, b, c;

    BigInt operator()(const BigInt& x) const { return (a * x + b) * x + c; }
    BigInt discriminant() const { return b * b - 4 * a * c; }
    std::string to_string() const;

    friend bool operator==(const QuadPoly&, const QuadPoly&) = default;
};

/// Throws InvalidArgument unless a != 0, the discriminant is not a square and gcd(a, b, c) = 1.
void validate(const QuadPoly& f);

/// Largest T accepted by find_shift.
inline constexpr std::uint64_t kMaxShiftBound = 100000;

struct ShiftSpec {
    std::uint64_t T;
    BigInt A;  ///< product of the primes below T
    BigInt B;  ///< in [0, A)
    QuadPoly F;
};

/// A = primorial of the primes < T; B combines by CRT the least residue b_l
/// with f(b_l) != 0 mod l for every prime l < T.
ShiftSpec find_shift(const QuadPoly& f, std::uint64_t T);

/// Coefficients of f(A n + B): (a A^2, 2 a A B + b A, a B^2 + b B + c).
QuadPoly shifted_poly(const QuadPoly& f, const BigInt& A, const BigInt& B);

struct AlmostPrimeHit {
    std::uint64_t n;
    BigInt value;
    std::vector<BigInt> factors;  ///< one or two primes, ascending
};

struct ScanResult {
    std::vector<AlmostPrimeHit> hits;
    std::vector<std::uint64_t> unresolved;  ///< n whose value could not be fully factored
};

/// Every n in [1, n_max] with F(n) prime or a product of exactly two primes.
/// Ordered by n for any thread count.
ScanResult almost_prime_scan(const QuadPoly& F, std::uint64_t n_max, unsigned threads = 1);

/// True iff every pair has gcd 1. Entries must be positive.
bool pairwise_coprime(std::span<const BigInt> ns);

}  // namespace galdens
