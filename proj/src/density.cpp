#include "galdens/density.hpp"

#include "galdens/error.hpp"
#include "galdens/gl2fp.hpp"
#include "galdens/presets.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <future>
#include <mutex>

namespace galdens {

namespace {

constexpr std::uint64_t kSieveLimit = 200'000'000;

/// Shared table of primes; only grows, so references stay valid for callers
/// that use it within a single thread.
const std::vector<std::uint32_t>& prime_table(std::uint64_t bound) {
    static std::mutex mu;
    static std::uint64_t have = 0;
    static std::vector<std::uint32_t> primes;
    std::lock_guard lock(mu);
    if (have < bound) {
        if (bound > kSieveLimit) throw Error(ErrorCode::BoundExceeded, "prime bound too large");
        primes = primes_up_to(static_cast<std::uint32_t>(bound));
        have = bound;
    }
    return primes;
}

/// The primes <= bound, as a prefix of the shared table.
std::span<const std::uint32_t> bounded_primes(std::uint64_t bound) {
    const auto& table = prime_table(bound);
    const auto end = std::upper_bound(table.begin(), table.end(), bound);
    return {table.data(), static_cast<std::size_t>(end - table.begin())};
}

/// Smallest prime factor for every n <= bound.
const std::vector<std::uint32_t>& spf_table(std::uint64_t bound) {
    static std::vector<std::uint32_t> spf;
    if (spf.size() <= bound) {
        spf.assign(bound + 1, 0);
        for (std::uint64_t i = 2; i <= bound; ++i) {
            if (spf[i]) continue;
            for (std::uint64_t j = i; j <= bound; j += i)
                if (!spf[j]) spf[j] = static_cast<std::uint32_t>(i);
        }
    }
    return spf;
}

BigInt product_tree(std::vector<BigInt> leaves) {
    if (leaves.empty()) return 1;
    while (leaves.size() > 1) {
        std::vector<BigInt> next;
        next.reserve((leaves.size() + 1) / 2);
        for (std::size_t i = 0; i + 1 < leaves.size(); i += 2) next.push_back(leaves[i] * leaves[i + 1]);
        if (leaves.size() % 2) next.push_back(std::move(leaves.back()));
        leaves = std::move(next);
    }
    return leaves.front();
}

void require_distinct_primes(std::span<const std::uint64_t> primes) {
    if (primes.empty()) throw Error(ErrorCode::InvalidArgument, "empty prime window");
    std::vector<std::uint64_t> sorted(primes.begin(), primes.end());
    std::sort(sorted.begin(), sorted.end());
    for (std::size_t i = 0; i < sorted.size(); ++i) {
        if (!is_prime_u64(sorted[i])) throw Error(ErrorCode::InvalidArgument, std::to_string(sorted[i]) + " is not prime");
        if (i && sorted[i] == sorted[i - 1])
            throw Error(ErrorCode::InvalidArgument, "prime " + std::to_string(sorted[i]) + " repeated");
    }
}

/// prod (p-1)/p in lowest terms, cancelling through prime factorizations of p-1
/// so that no gcd of the full products is needed.
Rational compute_w(std::span<const std::uint64_t> primes) {
    if (primes.size() <= 256) {
        Rational w = 1;
        for (auto p : primes) w *= Rational(BigInt(p - 1), BigInt(p));
        return w;
    }
    const std::uint64_t maxp = *std::max_element(primes.begin(), primes.end());
    if (maxp > kSieveLimit) {
        Rational w = 1;
        for (auto p : primes) w *= Rational(BigInt(p - 1), BigInt(p));
        return w;
    }
    static std::mutex mu;
    static std::vector<std::int32_t> net;
    std::lock_guard lock(mu);
    const auto& spf = spf_table(maxp);
    if (net.size() <= maxp) net.assign(maxp + 1, 0);
    std::vector<std::uint32_t> touched;
    auto bump = [&](std::uint32_t q, int by) {
        if (net[q] == 0) touched.push_back(q);
        net[q] += by;
    };
    for (auto p : primes) {
        bump(static_cast<std::uint32_t>(p), -1);
        for (std::uint64_t n = p - 1; n > 1;) {
            const auto q = spf[n];
            bump(q, 1);
            n /= q;
        }
    }
    std::sort(touched.begin(), touched.end());
    touched.erase(std::unique(touched.begin(), touched.end()), touched.end());
    std::vector<BigInt> num, den;
    for (auto q : touched) {
        const auto e = net[q];
        net[q] = 0;
        if (e > 0) {
            BigInt v;
            mpz_ui_pow_ui(v.get_mpz_t(), q, static_cast<unsigned long>(e));
            num.push_back(std::move(v));
        } else if (e < 0) {
            den.emplace_back(q);  // window primes appear once in the denominator
        }
    }
    Rational w;
    auto den_product = std::async(std::launch::async, [&den] { return product_tree(std::move(den)); });
    w.get_num() = product_tree(std::move(num));
    w.get_den() = den_product.get();
    return w;  // already in lowest terms
}

/// compute_w with a small cache keyed by the window's contents; planners and
/// their callers evaluate the same long windows several times.
Rational exact_w(std::span<const std::uint64_t> primes) {
    if (primes.size() <= 4096) return compute_w(primes);
    std::uint64_t h = 1469598103934665603ull;
    for (auto p : primes) h = (h ^ p) * 1099511628211ull;
    struct Entry {
        std::uint64_t hash, front, back;
        std::size_t size;
        Rational w;
    };
    static std::mutex mu;
    static std::vector<Entry> cache;
    {
        std::lock_guard lock(mu);
        for (const auto& e : cache)
            if (e.hash == h && e.size == primes.size() && e.front == primes.front() && e.back == primes.back()) return e.w;
    }
    Rational w = compute_w(primes);
    std::lock_guard lock(mu);
    if (cache.size() >= 4) cache.erase(cache.begin());
    cache.push_back({h, primes.front(), primes.back(), primes.size(), w});
    return w;
}

long double to_long_double(const Rational& r) { return static_cast<long double>(r.get_d()); }

struct GreedyResult {
    std::size_t first_index;  ///< index of p_k in the prime table
    std::size_t count;        ///< window size
    GreedyTrace trace;
};

/// Walks consecutive windows from the least prime > start_above and returns
/// the first whose w is <= threshold, certified exactly.
std::optional<GreedyResult> greedy_first_below(std::uint64_t start_above, const Rational& threshold,
                                               const PlannerConfig& config) {
    const std::uint64_t start = next_prime(start_above);
    if (start > config.max_prime) return std::nullopt;
    const auto primes = bounded_primes(config.max_prime);
    const auto first = static_cast<std::size_t>(std::lower_bound(primes.begin(), primes.end(), start) - primes.begin());
    const long double limit = to_long_double(threshold);
    const long double gap_limit = 1.0L / static_cast<long double>(start);

    GreedyResult out{first, 0, {}};
    out.trace.gap_bound = Rational(1, BigInt(start));
    long double w = 1;
    bool stopped = false;
    for (std::size_t j = first; j < primes.size(); ++j) {
        const long double p = primes[j];
        const long double prev = w;
        w *= (p - 1) / p;
        ++out.trace.steps;
        if (j > first) {
            const long double gap = prev - w;
            out.trace.max_gap = std::max(out.trace.max_gap, gap);
            if (gap > gap_limit) out.trace.gap_bound_held = false;
        }
        if (w <= limit) {
            stopped = true;
            break;
        }
    }
    if (!stopped) return std::nullopt;

    // exact confirmation of the stopping index
    std::size_t count = out.trace.steps;
    std::vector<std::uint64_t> window(primes.begin() + static_cast<long>(first),
                                      primes.begin() + static_cast<long>(first + count));
    Rational wx = exact_w(window);
    while (wx > threshold) {
        if (first + count >= primes.size()) return std::nullopt;
        const auto p = primes[first + count];
        window.push_back(p);
        wx *= Rational(BigInt(p - 1), BigInt(p));
        ++count;
    }
    while (count > 1) {
        const auto p = window.back();
        Rational before = wx * Rational(BigInt(p), BigInt(p - 1));
        if (before > threshold) {
            // the last step removes before/p, which is at most 1/p_k iff before <= p/p_k
            if (before > Rational(BigInt(p), BigInt(start))) out.trace.gap_bound_held = false;
            break;
        }
        window.pop_back();
        wx = before;
        --count;
    }
    out.count = count;
    out.trace.steps = count;
    return out;
}

PrimeWindow window_from_table(std::size_t first, std::size_t count, std::uint64_t max_prime) {
    const auto& primes = prime_table(max_prime);
    std::vector<std::uint64_t> ps(primes.begin() + static_cast<long>(first),
                                  primes.begin() + static_cast<long>(first + count));
    return PrimeWindow::from_primes(std::move(ps));
}

std::uint64_t start_bound(const Rational& inverse_scale) {
    // floor of a positive rational, at least 7
    BigInt f = inverse_scale.get_num() / inverse_scale.get_den();
    if (f < 7) return 7;
    if (!f.fits_ulong_p()) throw Error(ErrorCode::TooSmallEpsilon, "epsilon too small for the prime work bound");
    return f.get_ui();
}

void validate_target(const Rational& c, const Rational& eps) {
    if (c < 0 || c > 1) throw Error(ErrorCode::InvalidArgument, "target must lie in [0, 1], got " + c.get_str());
    if (eps < 0) throw Error(ErrorCode::InvalidArgument, "epsilon must be non-negative");
}

std::uint64_t ceil_div(const Rational& r) {
    BigInt q;
    mpz_cdiv_q(q.get_mpz_t(), r.get_num_mpz_t(), r.get_den_mpz_t());
    if (!q.fits_ulong_p()) return ~0ull;
    return q.get_ui();
}

Rational base_of(const Rational& w, BaseConvention conv) {
    if (conv == BaseConvention::NonzeroProportion) return w;
    Rational z;  // (den - num)/den is already reduced
    z.get_num() = w.get_den() - w.get_num();
    z.get_den() = w.get_den();
    return z;
}

/// Exact search for eps = 0: windows from p = 11 whose base density hits c
/// (zero mode) or for which some twist order lands exactly on c.
ApproxPlan exact_search(ApproxPlan plan, const PlannerConfig& config) {
    const auto primes = bounded_primes(std::max<std::uint64_t>(config.max_prime, 100));
    auto first = static_cast<std::size_t>(std::lower_bound(primes.begin(), primes.end(), 11u) - primes.begin());
    Rational w = 1;
    for (std::size_t j = 0; j < config.exact_search_steps && first + j < primes.size(); ++j) {
        const auto p = primes[first + j];
        w *= Rational(BigInt(p - 1), BigInt(p));
        const Rational b = base_of(w, plan.convention);
        if (plan.mode == PlanMode::ZeroDensity) {
            if (w == plan.target) {
                plan.window = window_from_table(first, j + 1, config.max_prime);
                plan.strategy = "exact-window";
                plan.trace.steps = j + 1;
                return plan;
            }
            if (w < plan.target) break;
        } else if (plan.target != b && plan.target != 1) {
            // b + (1 - b)/d = c  <=>  d = (1 - b)/(c - b)
            Rational d = (1 - b) / (plan.target - b);
            if (d > 1 && mpz_cmp_ui(d.get_den_mpz_t(), 1) == 0 && d.get_num().fits_ulong_p() &&
                d.get_num().get_ui() <= config.max_twist) {
                plan.window = window_from_table(first, j + 1, config.max_prime);
                plan.twist_order = d.get_num().get_ui();
                plan.strategy = "exact-window";
                plan.trace.steps = j + 1;
                return plan;
            }
        }
    }
    throw Error(ErrorCode::TooSmallEpsilon, "target " + plan.target.get_str() +
                                                " is not exactly representable by a preset or a window within the work bound");
}

}  // namespace

PrimeWindow::PrimeWindow(std::vector<std::uint64_t> primes) : primes_(std::move(primes)) {
    if (primes_.empty()) throw Error(ErrorCode::InvalidArgument, "empty prime window");
    for (std::size_t i = 0; i < primes_.size(); ++i) {
        if (primes_[i] <= 7) throw Error(ErrorCode::InvalidArgument, "window primes must exceed 7");
        if (i && primes_[i] <= primes_[i - 1]) throw Error(ErrorCode::InvalidArgument, "window primes must increase");
    }
    if (primes_.back() <= kSieveLimit) {
        const auto& table = prime_table(primes_.back());
        for (auto p : primes_)
            if (!std::binary_search(table.begin(), table.end(), static_cast<std::uint32_t>(p)))
                throw Error(ErrorCode::InvalidArgument, std::to_string(p) + " is not prime");
        k_ = static_cast<std::size_t>(std::lower_bound(table.begin(), table.end(), primes_.front()) - table.begin()) + 1;
    } else {
        for (auto p : primes_)
            if (!is_prime_u64(p)) throw Error(ErrorCode::InvalidArgument, std::to_string(p) + " is not prime");
        if (primes_.front() > kSieveLimit) throw Error(ErrorCode::BoundExceeded, "window starts beyond the prime index bound");
        const auto& table = prime_table(primes_.front());
        k_ = static_cast<std::size_t>(std::lower_bound(table.begin(), table.end(), primes_.front()) - table.begin()) + 1;
    }
}

PrimeWindow PrimeWindow::consecutive(std::uint64_t first, std::size_t count) {
    if (count == 0) throw Error(ErrorCode::InvalidArgument, "empty prime window");
    std::vector<std::uint64_t> ps;
    std::uint64_t p = is_prime_u64(first) ? first : next_prime(first);
    if (count > 64 && p <= kSieveLimit / 4) {
        std::uint64_t bound = std::max<std::uint64_t>(2 * p, 1u << 20);
        for (;;) {
            const auto& table = prime_table(bound);
            auto it = std::lower_bound(table.begin(), table.end(), p);
            if (static_cast<std::size_t>(table.end() - it) >= count) {
                ps.assign(it, it + static_cast<long>(count));
                return PrimeWindow(std::move(ps));
            }
            if (bound >= kSieveLimit) break;
            bound = std::min(2 * bound, kSieveLimit);
        }
    }
    for (std::size_t i = 0; i < count; ++i, p = next_prime(p)) ps.push_back(p);
    return PrimeWindow(std::move(ps));
}

PrimeWindow PrimeWindow::from_primes(std::vector<std::uint64_t> primes) { return PrimeWindow(std::move(primes)); }

Rational w_density(std::span<const std::uint64_t> primes) {
    require_distinct_primes(primes);
    return exact_w(primes);
}

Rational w_density(const PrimeWindow& window) { return exact_w(window.primes()); }

Rational zero_density(std::span<const std::uint64_t> primes) { return 1 - w_density(primes); }

Rational zero_density(const PrimeWindow& window) { return 1 - w_density(window); }

Rational twist_density(const Rational& w, std::uint64_t d) {
    if (d == 0) throw Error(ErrorCode::InvalidArgument, "twist order must be positive");
    if (w < 0 || w > 1) throw Error(ErrorCode::InvalidArgument, "base density must lie in [0, 1]");
    return w + (1 - w) / Rational(BigInt(d));
}

std::string_view to_string(PlanMode m) { return m == PlanMode::ZeroDensity ? "zero" : "matching"; }

std::string_view to_string(BaseConvention c) {
    return c == BaseConvention::NonzeroProportion ? "nonzero-proportion" : "zero-fraction";
}

PlannerConfig PlannerConfig::from_environment() {
    PlannerConfig config;
    if (const char* env = std::getenv("GALDENS_WORK_BOUND")) {
        char* end = nullptr;
        const auto v = std::strtoull(env, &end, 10);
        if (end && *end == '\0' && v >= 100) config.max_prime = v;
    }
    return config;
}

Rational ApproxPlan::base_density() const {
    if (!window) throw Error(ErrorCode::InvalidArgument, "plan has no window");
    return base_of(w_density(*window), convention);
}

Rational ApproxPlan::predicted_density() const {
    if (!preset.empty()) return preset_density(preset);
    if (mode == PlanMode::ZeroDensity) return w_density(*window);
    const Rational b = base_density();
    const std::uint64_t d = twist_order.value_or(1);
    if (d == 1) return b;
    // b + (1 - b)/d = ((d - 1) bn + bd) / (d bd). A prime dividing both sides
    // divides d (d - 1), so cancelling against d (d - 1) alone reduces fully
    // and no gcd with the full denominator is needed.
    BigInt num = (d - 1) * b.get_num() + b.get_den();
    BigInt den = d * b.get_den();
    const std::uint64_t small = d * (d - 1);
    for (;;) {
        std::uint64_t g = mpz_gcd_ui(nullptr, num.get_mpz_t(), small);
        g = gcd_u64(g, mpz_fdiv_ui(den.get_mpz_t(), g));
        if (g <= 1) break;
        mpz_divexact_ui(num.get_mpz_t(), num.get_mpz_t(), g);
        mpz_divexact_ui(den.get_mpz_t(), den.get_mpz_t(), g);
    }
    Rational out;
    out.get_num() = std::move(num);
    out.get_den() = std::move(den);
    return out;
}

bool ApproxPlan::certified() const { return abs_diff(predicted_density(), target) <= epsilon; }

ApproxPlan approximate_zero_density(const Rational& c, const Rational& eps, const PlannerConfig& config) {
    validate_target(c, eps);
    ApproxPlan plan{PlanMode::ZeroDensity, BaseConvention::NonzeroProportion, c, eps, {}, {}, {}, {}, {}};
    if (eps == 0) return exact_search(std::move(plan), config);

    const std::uint64_t above = start_bound(1 / eps);
    auto found = greedy_first_below(above, c + eps, config);
    if (!found)
        throw Error(ErrorCode::BoundExceeded, "w cannot reach " + Rational(c + eps).get_str() + " with primes up to " +
                                                  std::to_string(config.max_prime) + " (raise GALDENS_WORK_BOUND)");
    plan.window = window_from_table(found->first_index, found->count, config.max_prime);
    plan.trace = found->trace;
    plan.strategy = "greedy";
    if (!plan.certified()) throw Error(ErrorCode::InvalidArgument, "internal: greedy window failed certification");
    return plan;
}

ApproxPlan approximate_matching_density(const Rational& c, const Rational& eps, BaseConvention convention,
                                        const PlannerConfig& config) {
    validate_target(c, eps);
    ApproxPlan plan{PlanMode::MatchingDensity, convention, c, eps, {}, {}, {}, {}, {}};
    if (eps == 0) {
        if (c == Rational(17, 32)) return preset_plan("tetrahedral-17-32");
        if (c < 1) {
            // 1 - 1/(2k^2) = c  <=>  k^2 = 1/(2(1 - c))
            Rational k2 = 1 / (2 * (1 - c));
            if (mpz_cmp_ui(k2.get_den_mpz_t(), 1) == 0 && mpz_perfect_square_p(k2.get_num_mpz_t())) {
                BigInt k = sqrt(k2.get_num());
                return preset_plan("serre-k:" + k.get_str());
            }
        }
        return exact_search(std::move(plan), config);
    }

    const Rational half = eps / 2;
    // Window with base in [c - eps/2, c], then the least d >= 2 with (1 - b)/d <= eps/2.
    {
        const Rational quarter = eps / 4;
        const Rational threshold = convention == BaseConvention::NonzeroProportion ? c : Rational(1 - c + half);
        if (threshold >= 0 && threshold <= 1) {
            if (auto found = greedy_first_below(start_bound(1 / quarter), threshold, config)) {
                PrimeWindow window = window_from_table(found->first_index, found->count, config.max_prime);
                const Rational b = base_of(w_density(window), convention);
                if (b >= c - half && b <= c) {
                    const std::uint64_t d = std::max<std::uint64_t>(2, ceil_div((1 - b) / half));
                    if (d <= config.max_twist) {
                        plan.window = std::move(window);
                        plan.twist_order = d;
                        plan.trace = found->trace;
                        plan.strategy = "window-then-twist";
                        if (plan.certified()) return plan;
                    }
                }
            }
        }
    }

    // Otherwise search over twist orders: for each d the predicted density is
    // monotone along the window sequence, so the closest window is found by bisection.
    const std::uint64_t start = next_prime(start_bound(1 / eps));
    if (start > config.max_prime)
        throw Error(ErrorCode::BoundExceeded, "epsilon too small for primes up to " + std::to_string(config.max_prime));
    const auto primes = bounded_primes(config.max_prime);
    const auto first = static_cast<std::size_t>(std::lower_bound(primes.begin(), primes.end(), start) - primes.begin());
    std::vector<long double> base;
    base.reserve(primes.size() - first);
    GreedyTrace trace;
    trace.gap_bound = Rational(1, BigInt(start));
    {
        long double w = 1;
        const long double gap_limit = 1.0L / static_cast<long double>(start);
        for (std::size_t j = first; j < primes.size(); ++j) {
            const long double p = primes[j];
            const long double prev = w;
            w *= (p - 1) / p;
            if (j > first) {
                trace.max_gap = std::max(trace.max_gap, prev - w);
                if (prev - w > gap_limit) trace.gap_bound_held = false;
            }
            base.push_back(convention == BaseConvention::NonzeroProportion ? w : 1 - w);
        }
    }
    const bool increasing = convention == BaseConvention::ZeroFraction;
    const long double cd = to_long_double(c);
    const long double ed = to_long_double(eps);
    // candidates (window length, d) passing the floating-point screen, shortest window first
    std::vector<std::pair<std::size_t, std::uint64_t>> candidates;
    for (std::uint64_t d = 2; d <= config.max_twist; ++d) {
        const long double dd = static_cast<long double>(d);
        const long double target_base = (cd * dd - 1) / (dd - 1);
        auto it = increasing ? std::lower_bound(base.begin(), base.end(), target_base)
                             : std::lower_bound(base.begin(), base.end(), target_base, std::greater<long double>());
        auto j = static_cast<std::size_t>(it - base.begin());
        for (std::size_t cand : {j == 0 ? j : j - 1, j}) {
            if (cand >= base.size()) continue;
            const long double pred = base[cand] + (1 - base[cand]) / dd;
            if (std::fabs(pred - cd) <= ed) {
                candidates.emplace_back(cand + 1, d);
                break;
            }
        }
    }
    std::sort(candidates.begin(), candidates.end());
    for (const auto& [len, d] : candidates) {
        plan.window = window_from_table(first, len, config.max_prime);
        plan.twist_order = d;
        if (plan.certified()) {
            trace.steps = len;
            plan.trace = trace;
            plan.strategy = "twist-search";
            return plan;
        }
    }
    throw Error(ErrorCode::BoundExceeded, "no window with primes up to " + std::to_string(config.max_prime) +
                                              " and twist order up to " + std::to_string(config.max_twist) + " reaches " +
                                              c.get_str() + " within " + eps.get_str());
}

Rational preset_density(std::string_view name) {
    if (name == "tetrahedral-17-32") {
        auto pair = tetrahedral_pair("c3");
        return matching_fraction(pair.chi1, pair.chi2);
    }
    if (name.starts_with("serre-k:")) {
        const auto k = std::stoul(std::string(name.substr(8)));
        if (k == 0) throw Error(ErrorCode::InvalidArgument, "serre-k needs k >= 1");
        const Rational zero = 1 - Rational(1, BigInt(k) * BigInt(k));
        return twist_density(zero, 2);
    }
    if (name.starts_with("steinberg:")) {
        const auto p = std::stoul(std::string(name.substr(10)));
        return zero_fraction(steinberg_character(static_cast<unsigned>(p)));
    }
    throw Error(ErrorCode::InvalidArgument, "unknown preset '" + std::string(name) + "'");
}

ApproxPlan preset_plan(std::string_view name) {
    ApproxPlan plan{PlanMode::MatchingDensity, BaseConvention::ZeroFraction, 0, 0, {}, {}, std::string(name), "preset", {}};
    if (name.starts_with("steinberg:")) plan.mode = PlanMode::ZeroDensity;
    plan.target = preset_density(name);
    return plan;
}

}  // namespace galdens
