#pragma once

#include "galdens/rational.hpp"

#include <cstdint>
#include <optional>
#include <vector>

namespace galdens {

/// All primes <= limit, increasing (sieve of Eratosthenes).
std::vector<std::uint32_t> primes_up_to(std::uint32_t limit);

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t m);
std::uint64_t powmod(std::uint64_t base, std::uint64_t exp, std::uint64_t m);

/// Deterministic Miller-Rabin for the full 64-bit range (first 12 prime witnesses).
bool is_prime_u64(std::uint64_t n);

/// Deterministic below 2^64; 40-round Miller-Rabin above.
bool is_probable_prime(const BigInt& n);

/// Least prime strictly greater than n.
std::uint64_t next_prime(std::uint64_t n);

/// Euler's criterion; returns -1, 0 or 1. p must be an odd prime.
int legendre_euler(std::int64_t a, std::uint64_t p);

/// Pollard-Brent rho on a composite 64-bit n with deterministic seed.
/// Returns a nontrivial factor or nullopt after max_iterations.
std::optional<std::uint64_t> pollard_rho(std::uint64_t n, std::uint64_t seed = 1, std::uint64_t max_iterations = 1u << 22);
std::optional<BigInt> pollard_rho(const BigInt& n, unsigned long seed = 1, unsigned long max_iterations = 1ul << 20);

struct Factorization {
    std::vector<BigInt> primes;  ///< with multiplicity, ascending
    bool complete = true;        ///< false when a cofactor could not be split within the bit bound
};

/// Trial division to trial_bound, then Pollard rho. Cofactors larger than
/// rho_bit_bound bits that are composite and resist rho leave complete=false.
Factorization factorize(const BigInt& n, std::uint32_t trial_bound = 1000000, unsigned rho_bit_bound = 128);

std::uint64_t gcd_u64(std::uint64_t a, std::uint64_t b);

/// Euler's totient by trial division.
std::uint64_t euler_phi(std::uint64_t n);

}  // namespace galdens
