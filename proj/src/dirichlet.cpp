#include "galdens/dirichlet.hpp"

#include "galdens/error.hpp"
#include "galdens/primes.hpp"

#include <cmath>
#include <numbers>
#include <numeric>

namespace galdens {

namespace {

void require_modulus(std::uint64_t N) {
    if (N == 0) throw Error(ErrorCode::InvalidArgument, "modulus must be positive");
    if (N > kMaxCharacterModulus)
        throw Error(ErrorCode::BoundExceeded, "modulus " + std::to_string(N) + " exceeds " + std::to_string(kMaxCharacterModulus));
}

std::uint64_t ipow(std::uint64_t b, unsigned e) {
    std::uint64_t r = 1;
    while (e--) r *= b;
    return r;
}

/// x = r mod m, x = 1 mod (N / m), with gcd(m, N / m) = 1.
std::uint64_t crt_lift(std::uint64_t r, std::uint64_t m, std::uint64_t N) {
    const std::uint64_t other = N / m;
    if (other == 1) return r % N;
    // x = 1 + other * t, other * t = r - 1 mod m
    const BigInt inv = [&] {
        BigInt o = other % m, mm = m, out;
        mpz_invert(out.get_mpz_t(), o.get_mpz_t(), mm.get_mpz_t());
        return out;
    }();
    BigInt t = (BigInt(r % m) + m - 1) * inv;
    t %= m;
    return (1 + other * t.get_ui()) % N;
}

std::uint64_t primitive_root_prime_power(std::uint64_t p, unsigned k) {
    const std::uint64_t phi_p = p - 1;
    std::vector<std::uint64_t> fs;
    for (std::uint64_t n = phi_p, d = 2; n > 1; ++d) {
        if (d * d > n) d = n;
        if (n % d == 0) {
            fs.push_back(d);
            while (n % d == 0) n /= d;
        }
    }
    std::uint64_t g = 2;
    for (;; ++g) {
        bool ok = g % p != 0;
        for (auto f : fs) ok = ok && powmod(g, phi_p / f, p) != 1;
        if (ok) break;
    }
    if (k >= 2 && powmod(g, p - 1, p * p) == 1) g += p;
    return g;
}

}  // namespace

std::vector<UnitGenerator> unit_generators(std::uint64_t N) {
    require_modulus(N);
    std::vector<UnitGenerator> gens;
    std::uint64_t n = N;
    unsigned k2 = 0;
    while (n % 2 == 0) n /= 2, ++k2;
    const std::uint64_t two_part = ipow(2, k2);
    if (k2 >= 2) gens.push_back({crt_lift(two_part - 1, two_part, N), 2});
    if (k2 >= 3) gens.push_back({crt_lift(5, two_part, N), two_part / 4});
    for (std::uint64_t p = 3; n > 1; p += 2) {
        if (p * p > n) p = n;
        if (n % p) continue;
        unsigned k = 0;
        while (n % p == 0) n /= p, ++k;
        const std::uint64_t pk = ipow(p, k);
        gens.push_back({crt_lift(primitive_root_prime_power(p, k), pk, N), pk / p * (p - 1)});
    }
    return gens;
}

std::uint64_t DirichletChar::count(std::uint64_t N) {
    require_modulus(N);
    return euler_phi(N);
}

DirichletChar DirichletChar::from_index(std::uint64_t N, std::uint64_t index) {
    const auto gens = unit_generators(N);
    const std::uint64_t total = count(N);
    if (index >= total)
        throw Error(ErrorCode::InvalidArgument,
                    "character index " + std::to_string(index) + " out of range [0, " + std::to_string(total) + ")");
    std::vector<std::uint64_t> e(gens.size());
    std::uint64_t L = 1;
    for (std::size_t i = 0, rest = index; i < gens.size(); ++i) {
        e[i] = rest % gens[i].order;
        rest /= gens[i].order;
        L = std::lcm(L, gens[i].order);
    }
    DirichletChar chi;
    chi.N_ = N;
    chi.index_ = index;
    chi.order_ = 1;
    for (std::size_t i = 0; i < gens.size(); ++i) chi.order_ = std::lcm(chi.order_, gens[i].order / std::gcd(e[i], gens[i].order));
    chi.exp_.assign(N, -1);
    // walk the group as products of generator powers, tracking the exponent mod L
    std::vector<std::uint64_t> t(gens.size(), 0);
    std::uint64_t a = 1 % N, v = 0;
    std::vector<std::uint64_t> step(gens.size());
    for (std::size_t i = 0; i < gens.size(); ++i) step[i] = e[i] * (L / gens[i].order) % L;
    for (;;) {
        chi.exp_[a] = static_cast<std::int64_t>(v / (L / chi.order_));
        std::size_t i = 0;
        for (; i < gens.size(); ++i) {
            if (++t[i] < gens[i].order) {
                a = a * gens[i].g % N;
                v = (v + step[i]) % L;
                break;
            }
            // g_i^{n_i} = 1, so resetting t_i leaves a unchanged in that factor
            t[i] = 0;
            a = a * gens[i].g % N;
            v = (v + step[i]) % L;
        }
        if (i == gens.size()) break;
    }
    if (N == 1) chi.exp_[0] = 0;
    return chi;
}

DirichletChar DirichletChar::from_table(std::uint64_t N, std::uint64_t order, std::vector<std::int64_t> exponents) {
    require_modulus(N);
    if (order == 0 || exponents.size() != N) throw Error(ErrorCode::InvalidArgument, "invalid character table");
    for (std::uint64_t a = 0; a < N; ++a) {
        const bool unit = std::gcd(a, N) == 1;
        const auto x = exponents[a];
        if (unit != (x >= 0) || x >= static_cast<std::int64_t>(order))
            throw Error(ErrorCode::InvalidArgument, "invalid character table entry at " + std::to_string(a));
    }
    DirichletChar chi;
    chi.N_ = N;
    chi.order_ = order;
    chi.index_ = ~0ull;
    chi.exp_ = std::move(exponents);
    return chi;
}

DirichletChar DirichletChar::induce(std::uint64_t M) const {
    if (M % N_) throw Error(ErrorCode::InvalidArgument, "cannot induce mod " + std::to_string(N_) + " to mod " + std::to_string(M));
    require_modulus(M);
    std::vector<std::int64_t> t(M);
    for (std::uint64_t a = 0; a < M; ++a) t[a] = std::gcd(a, M) == 1 ? exp_[a % N_] : -1;
    DirichletChar chi = from_table(M, order_, std::move(t));
    chi.index_ = M == N_ ? index_ : ~0ull;
    return chi;
}

DirichletChar DirichletChar::ratio(const DirichletChar& other) const {
    const std::uint64_t M = std::lcm(N_, other.N_);
    const DirichletChar x = induce(M), y = other.induce(M);
    const std::uint64_t L = std::lcm(order_, other.order_);
    std::vector<std::int64_t> t(M, -1);
    std::uint64_t ord = 1;
    std::vector<std::int64_t> raw(M, -1);
    for (std::uint64_t a = 0; a < M; ++a) {
        if (x.exp_[a] < 0) continue;
        const auto ex = x.exp_[a] * static_cast<std::int64_t>(L / order_);
        const auto ey = y.exp_[a] * static_cast<std::int64_t>(L / other.order_);
        raw[a] = ((ex - ey) % static_cast<std::int64_t>(L) + static_cast<std::int64_t>(L)) % static_cast<std::int64_t>(L);
        ord = std::lcm(ord, L / std::gcd(static_cast<std::uint64_t>(raw[a]), L));
    }
    for (std::uint64_t a = 0; a < M; ++a)
        if (raw[a] >= 0) t[a] = raw[a] / static_cast<std::int64_t>(L / ord);
    return from_table(M, ord, std::move(t));
}

bool DirichletChar::is_homomorphism() const {
    const auto e = static_cast<std::int64_t>(order_);
    for (std::uint64_t a = 0; a < N_; ++a) {
        if (exp_[a] < 0) continue;
        for (std::uint64_t b = 0; b < N_; ++b) {
            if (exp_[b] < 0) continue;
            if (exp_[a * b % N_] != (exp_[a] + exp_[b]) % e) return false;
        }
    }
    return exp_[1 % N_] == 0;
}

bool DirichletChar::same_value(const DirichletChar& other, std::uint64_t a) const {
    if (N_ != other.N_) throw Error(ErrorCode::InvalidArgument, "characters have different moduli");
    const auto x = exponent(a), y = other.exponent(a);
    if (x < 0 || y < 0) return x == y;
    const std::uint64_t L = std::lcm(order_, other.order_);
    return static_cast<std::uint64_t>(x) * (L / order_) == static_cast<std::uint64_t>(y) * (L / other.order_);
}

double DirichletChar::squared_distance(const DirichletChar& other, std::uint64_t a) const {
    if (same_value(other, a)) return 0.0;
    const std::uint64_t L = std::lcm(order_, other.order_);
    const auto x = static_cast<double>(static_cast<std::uint64_t>(exponent(a)) * (L / order_));
    const auto y = static_cast<double>(static_cast<std::uint64_t>(other.exponent(a)) * (L / other.order_));
    return 2.0 - 2.0 * std::cos(2.0 * std::numbers::pi * (x - y) / static_cast<double>(L));
}

Rational exact_matching_density_dirichlet(const DirichletChar& x, const DirichletChar& y) {
    const std::uint64_t M = std::lcm(x.modulus(), y.modulus());
    const DirichletChar a = x.induce(M), b = y.induce(M);
    std::uint64_t units = 0, equal = 0;
    for (std::uint64_t r = 0; r < M; ++r) {
        if (!a.is_unit(r)) continue;
        ++units;
        if (a.same_value(b, r)) ++equal;
    }
    if (units != euler_phi(M)) throw Error(ErrorCode::InvalidArgument, "invalid character table");
    Rational out{BigInt(static_cast<unsigned long>(equal)), BigInt(static_cast<unsigned long>(units))};
    out.canonicalize();
    return out;
}

namespace {

PrimeIndicatorSeries series_over_units(std::uint64_t M, std::uint64_t x_max) {
    if (x_max > 0xffffffffull) throw Error(ErrorCode::BoundExceeded, "x_max too large");
    PrimeIndicatorSeries s;
    s.x_max = x_max;
    for (std::uint32_t q : primes_up_to(static_cast<std::uint32_t>(x_max)))
        if (M % q) s.primes.push_back(q);
    s.marked.assign(s.primes.size(), 0);
    return s;
}

}  // namespace

PrimeIndicatorSeries matching_series(const DirichletChar& x, const DirichletChar& y, std::uint64_t x_max) {
    const std::uint64_t M = std::lcm(x.modulus(), y.modulus());
    const DirichletChar a = x.induce(M), b = y.induce(M);
    auto s = series_over_units(M, x_max);
    for (std::size_t i = 0; i < s.primes.size(); ++i) s.marked[i] = a.same_value(b, s.primes[i]);
    return s;
}

PrimeIndicatorSeries difference_series(const DirichletChar& x, const DirichletChar& y, std::uint64_t x_max) {
    const std::uint64_t M = std::lcm(x.modulus(), y.modulus());
    const DirichletChar a = x.induce(M), b = y.induce(M);
    auto s = series_over_units(M, x_max);
    s.weights.resize(s.primes.size());
    for (std::size_t i = 0; i < s.primes.size(); ++i) {
        s.weights[i] = a.squared_distance(b, s.primes[i]);
        s.marked[i] = s.weights[i] > 0;
    }
    return s;
}

DensityEstimate natural_density_estimate(const PrimeIndicatorSeries& s) {
    if (s.primes.empty()) throw Error(ErrorCode::InvalidArgument, "empty prime range");
    if (s.primes.size() < 100)
        throw Error(ErrorCode::InvalidArgument, "need at least 100 primes, got " + std::to_string(s.primes.size()));
    DensityEstimate d;
    d.total = s.primes.size();
    for (char m : s.marked) d.marked += m ? 1 : 0;
    d.estimate = double(d.marked) / double(d.total);
    d.standard_error = std::sqrt(d.estimate * (1 - d.estimate) / double(d.total));
    return d;
}

std::vector<double> dirichlet_density_estimate(const PrimeIndicatorSeries& s, const std::vector<double>& s_values) {
    if (s.primes.empty()) throw Error(ErrorCode::InvalidArgument, "empty prime range");
    for (std::size_t i = 0; i < s_values.size(); ++i) {
        if (!(s_values[i] > 1.0)) throw Error(ErrorCode::InvalidArgument, "s must exceed 1");
        if (s_values[i] > 2.0) throw Error(ErrorCode::InvalidArgument, "s must be at most 2");
        if (i && !(s_values[i] < s_values[i - 1])) throw Error(ErrorCode::InvalidArgument, "s values must strictly decrease");
    }
    std::vector<double> out;
    for (double sv : s_values) {
        double marked = 0, total = 0;
        for (std::size_t i = 0; i < s.primes.size(); ++i) {
            const double t = std::pow(double(s.primes[i]), -sv);
            total += t;
            if (s.marked[i]) marked += t;
        }
        out.push_back(marked / total);
    }
    return out;
}

RsDiagnostic rs_diagnostic(const PrimeIndicatorSeries& w, unsigned n, double s) {
    if (n == 0) throw Error(ErrorCode::InvalidArgument, "dimension must be positive");
    if (!(s > 1.0 && s < 2.0)) throw Error(ErrorCode::InvalidArgument, "s must lie in (1, 2)");
    if (w.weights.size() != w.primes.size()) throw Error(ErrorCode::InvalidArgument, "series carries no weights");
    RsDiagnostic r;
    r.bound = 4.0 * n * n;
    double normalized = 0;
    for (std::size_t i = 0; i < w.primes.size(); ++i) {
        const double wq = w.weights[i];
        if (wq < 0 || wq > r.bound)
            throw Error(ErrorCode::InvalidArgument, "weight " + std::to_string(wq) + " at q = " + std::to_string(w.primes[i]) +
                                                        " exceeds (2n)^2 = " + std::to_string(r.bound));
        const double t = std::pow(double(w.primes[i]), -s);
        r.total_sum += t;
        if (wq > 0) {
            r.marked_sum += t;
            normalized += (wq / r.bound) * t;
        }
    }
    r.weighted_sum = normalized * r.bound;
    r.implied_lower_density = r.total_sum > 0 ? normalized / r.total_sum : 0.0;
    r.holds = normalized <= r.marked_sum;
    return r;
}

}  // namespace galdens
