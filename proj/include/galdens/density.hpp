#pragma once

#include "galdens/primes.hpp"
#include "galdens/rational.hpp"

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace galdens {

/// Consecutive primes p_k, ..., p_{k+m}, all greater than 7.
class PrimeWindow {
public:
    /// The window of count consecutive primes starting at the least prime >= first.
    static PrimeWindow consecutive(std::uint64_t first, std::size_t count);
    /// Explicit primes; must be strictly increasing, prime and > 7.
    static PrimeWindow from_primes(std::vector<std::uint64_t> primes);

    /// 1-based index k of the first prime in the sequence of all primes.
    std::size_t k() const noexcept { return k_; }
    /// Number of additional primes after p_k.
    std::size_t m() const noexcept { return primes_.size() - 1; }
    const std::vector<std::uint64_t>& primes() const noexcept { return primes_; }

private:
    explicit PrimeWindow(std::vector<std::uint64_t> primes);

    std::size_t k_ = 0;
    std::vector<std::uint64_t> primes_;
};

/// prod (p - 1)/p over distinct primes, reduced. Any primes are accepted here;
/// the window overloads enforce the > 7 hypothesis.
Rational w_density(std::span<const std::uint64_t> primes);
Rational w_density(const PrimeWindow& window);
/// 1 - prod (1 - 1/p): the vanishing proportion of the product Steinberg character.
Rational zero_density(std::span<const std::uint64_t> primes);
Rational zero_density(const PrimeWindow& window);

/// w + (1 - w)/d: matching density of a representation whose character
/// vanishes with proportion w and its twist by an order-d character.
Rational twist_density(const Rational& w, std::uint64_t d);

enum class PlanMode { ZeroDensity, MatchingDensity };

/// Which proportion of the window is fed into the twist formula.
enum class BaseConvention {
    NonzeroProportion,  ///< w = prod (p-1)/p, the displayed product formula
    ZeroFraction,       ///< 1 - w, the vanishing proportion of the product character
};

std::string_view to_string(PlanMode m);
std::string_view to_string(BaseConvention c);

struct PlannerConfig {
    /// Largest prime a window may contain.
    std::uint64_t max_prime = 10'000'000;
    std::uint64_t max_twist = 100'000;
    /// Window steps examined when eps = 0.
    std::size_t exact_search_steps = 2000;

    /// Defaults, with max_prime overridden by GALDENS_WORK_BOUND when set.
    static PlannerConfig from_environment();
};

/// Record of the greedy walk that produced a window.
struct GreedyTrace {
    std::size_t steps = 0;            ///< windows examined
    long double max_gap = 0;          ///< largest decrease of w between consecutive windows
    Rational gap_bound;               ///< 1/p_k
    bool gap_bound_held = true;
};

struct ApproxPlan {
    PlanMode mode;
    BaseConvention convention = BaseConvention::NonzeroProportion;
    Rational target;
    Rational epsilon;
    std::optional<PrimeWindow> window;
    std::optional<std::uint64_t> twist_order;
    std::string preset;    ///< non-empty for preset plans, e.g. "tetrahedral-17-32"
    std::string strategy;  ///< how the plan was found
    GreedyTrace trace;

    /// Base density of the window under the plan's convention.
    Rational base_density() const;
    /// Recomputed from the window, twist order or preset on every call.
    Rational predicted_density() const;
    /// |predicted - target| <= epsilon, evaluated exactly.
    bool certified() const;
};

/// Greedy window whose w_density lies within eps of c: start at the least
/// prime above max(7, 1/eps) and append consecutive primes while w > c + eps.
ApproxPlan approximate_zero_density(const Rational& c, const Rational& eps, const PlannerConfig& config = {});

/// Window plus twist order d with |twist_density(base, d) - c| <= eps.
ApproxPlan approximate_matching_density(const Rational& c, const Rational& eps,
                                        BaseConvention convention = BaseConvention::NonzeroProportion,
                                        const PlannerConfig& config = {});

/// Preset plans: "tetrahedral-17-32", "serre-k:<k>", "steinberg:<p>".
ApproxPlan preset_plan(std::string_view name);
/// Density realized by a preset, computed from its group data.
Rational preset_density(std::string_view name);

}  // namespace galdens
