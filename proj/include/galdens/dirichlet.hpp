#pragma once

#include "galdens/rational.hpp"

#include <cstdint>
#include <vector>

namespace galdens {

/// Cyclic factor of (Z/N)^*: a generator lifted to Z/N and its order.
struct UnitGenerator {
    std::uint64_t g;
    std::uint64_t order;
};

/// Generators of (Z/N)^* used by the character index convention: -1 and 5 for
/// the 2-part (only -1 when 4 || N, none when 2 || N), then the least primitive
/// root of p^k for each odd prime power in increasing p, each lifted by CRT to
/// be 1 on the other prime powers.
std::vector<UnitGenerator> unit_generators(std::uint64_t N);

/// Largest modulus accepted for a character table.
inline constexpr std::uint64_t kMaxCharacterModulus = 1000000;

/// Dirichlet character mod N; values stored as exponents of exp(2 pi i / order).
class DirichletChar {
public:
    /// Character number `index` mod N. Writing index in mixed radix over the
    /// generator orders, index = e_1 + n_1 (e_2 + n_2 (...)), the character
    /// sends generator g_i to exp(2 pi i e_i / n_i).
    static DirichletChar from_index(std::uint64_t N, std::uint64_t index);
    /// Number of characters mod N, i.e. phi(N).
    static std::uint64_t count(std::uint64_t N);
    /// Raw table: exponent per residue, -1 on non-units. Validates shape only.
    static DirichletChar from_table(std::uint64_t N, std::uint64_t order, std::vector<std::int64_t> exponents);

    std::uint64_t modulus() const noexcept { return N_; }
    std::uint64_t order() const noexcept { return order_; }
    /// Exponent of chi(a) as a power of exp(2 pi i / order), or -1 when gcd(a, N) > 1.
    std::int64_t exponent(std::uint64_t a) const { return exp_[a % N_]; }
    bool is_unit(std::uint64_t a) const { return exp_[a % N_] >= 0; }
    std::uint64_t index() const noexcept { return index_; }

    /// chi composed with reduction Z/M -> Z/N; M must be a multiple of N.
    DirichletChar induce(std::uint64_t M) const;
    /// chi * other^-1 after inducing both to the lcm modulus.
    DirichletChar ratio(const DirichletChar& other) const;
    /// Exhaustive check that chi(ab) = chi(a) chi(b) on units.
    bool is_homomorphism() const;
    /// chi(a) = other(a) as complex numbers (same modulus).
    bool same_value(const DirichletChar& other, std::uint64_t a) const;
    /// |chi(a) - other(a)|^2 = 2 - 2 cos(angle) on units (same modulus).
    double squared_distance(const DirichletChar& other, std::uint64_t a) const;

private:
    std::uint64_t N_ = 1, order_ = 1, index_ = 0;
    std::vector<std::int64_t> exp_;
};

/// |{a in (Z/M)^* : x(a) = y(a)}| / phi(M) with M = lcm of the moduli.
Rational exact_matching_density_dirichlet(const DirichletChar& x, const DirichletChar& y);

/// Membership bit (and optional weight) for each prime up to x_max.
struct PrimeIndicatorSeries {
    std::uint64_t x_max = 0;
    std::vector<std::uint32_t> primes;
    std::vector<char> marked;
    std::vector<double> weights;  ///< empty or one per prime
};

/// Primes q <= x_max with q not dividing the lcm modulus, marked where x(q) = y(q).
PrimeIndicatorSeries matching_series(const DirichletChar& x, const DirichletChar& y, std::uint64_t x_max);
/// Same primes, weighted by |x(q) - y(q)|^2 and marked where the weight is positive.
PrimeIndicatorSeries difference_series(const DirichletChar& x, const DirichletChar& y, std::uint64_t x_max);

struct DensityEstimate {
    double estimate = 0;
    double standard_error = 0;  ///< binomial, sqrt(f (1 - f) / total)
    std::uint64_t marked = 0, total = 0;
};

/// marked / total over the series; needs at least 100 primes.
DensityEstimate natural_density_estimate(const PrimeIndicatorSeries& s);

inline const std::vector<double> kDefaultSchedule{1.5, 1.2, 1.1, 1.05, 1.02};

/// For each s: sum over marked q of q^-s divided by the sum over all q of q^-s,
/// truncated at x_max. s values must lie in (1, 2] and strictly decrease.
std::vector<double> dirichlet_density_estimate(const PrimeIndicatorSeries& s,
                                               const std::vector<double>& s_values = kDefaultSchedule);

struct RsDiagnostic {
    double weighted_sum = 0;  ///< sum w_q q^-s
    double marked_sum = 0;    ///< sum over w_q > 0 of q^-s
    double total_sum = 0;     ///< sum over all q of q^-s
    double bound = 0;         ///< (2n)^2
    double implied_lower_density = 0;  ///< weighted_sum / (bound total_sum)
    bool holds = false;       ///< weighted_sum / bound <= marked_sum
};

/// Truncated form of sum w_q q^-s <= (2n)^2 sum_{q in S} q^-s. Every weight
/// must be at most (2n)^2.
RsDiagnostic rs_diagnostic(const PrimeIndicatorSeries& weights, unsigned n, double s);

}  // namespace galdens
