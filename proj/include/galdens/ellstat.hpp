#pragma once

#include "galdens/gl2fp.hpp"
#include "galdens/rational.hpp"

#include <cstdint>
#include <istream>
#include <optional>
#include <string>
#include <vector>

namespace galdens {

/// y^2 = x^3 + a x + b over Q.
struct Curve {
    std::int64_t a = 0, b = 0;
    std::optional<std::uint64_t> conductor;  ///< declared by the user, not computed
    std::string label;

    /// 4a^3 + 27b^2; the discriminant is -16 times this.
    BigInt disc_core() const;
    BigInt discriminant() const { return -16 * disc_core(); }
    bool good_reduction(std::uint64_t q) const;
};

/// Rejects singular curves, and a declared conductor that is not square-free
/// or has a prime not dividing the discriminant.
void validate(const Curve& c);

/// #E(F_q) for a prime q > 3 of good reduction.
std::uint64_t count_points(const Curve& c, std::uint64_t q);

/// Same count from the double loop over (x, y) in F_q^2; for testing only.
std::uint64_t count_points_naive(const Curve& c, std::uint64_t q);

enum class FrobClass { SplitRegular, NonsplitRegular, Ambiguous, Central, NonSemisimple };

std::string_view to_string(FrobClass f);

/// Class type of x^2 - a_q x + q over F_p from its discriminant. When the
/// discriminant vanishes the result is Ambiguous (scalar or unipotent).
FrobClass frobenius_class(std::int64_t a_q, std::uint64_t q, std::uint64_t p);

/// Separates scalar from non-semisimple Frobenius when the eigenvalue is +1 or -1,
/// using E(F_q) (or its quadratic twist): Frobenius is scalar iff E[p] is rational,
/// tested on `trials` random points. Other eigenvalues stay Ambiguous.
FrobClass resolve_ambiguous(const Curve& c, std::uint64_t q, std::uint64_t p, std::uint64_t seed, unsigned trials = 8);

struct FrobSample {
    std::uint64_t q;
    std::int64_t a_q;
    FrobClass cls;
};

struct HistogramOptions {
    unsigned threads = 1;
    bool resolve_scalars = false;
    std::uint64_t seed = 1;
    bool keep_samples = false;
};

struct ChebotarevHistogram {
    std::uint64_t p = 0;
    std::uint64_t q_max = 0;
    std::uint64_t samples = 0;
    std::uint64_t split = 0, nonsplit = 0, ambiguous = 0, central = 0, non_semisimple = 0;
    Rational expected_split, expected_nonsplit, expected_ambiguous;  ///< ambiguous = central + non-semisimple
    std::vector<FrobSample> sample_list;                              ///< only with keep_samples
    std::vector<std::string> warnings;

    double fraction(std::uint64_t count) const { return samples ? double(count) / double(samples) : 0.0; }
    /// sqrt(f (1 - f) / samples) for the expected fraction f.
    double standard_error(const Rational& expected) const;
    /// (empirical - expected) / standard_error.
    double z_score(std::uint64_t count, const Rational& expected) const;
};

/// Frobenius class frequencies over good primes 5 <= q <= q_max, q != p.
ChebotarevHistogram chebotarev_histogram(const Curve& c, std::uint64_t p, std::uint64_t q_max,
                                         const HistogramOptions& options = {});

/// Lines "a b [N] [label]"; blank lines and lines starting with '#' are skipped.
std::vector<Curve> parse_curve_list(std::istream& in);

}  // namespace galdens
