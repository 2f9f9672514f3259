#include "galdens/primes.hpp"

#include "galdens/error.hpp"

#include <algorithm>
#include <mutex>
#include <numeric>

namespace galdens {

std::vector<std::uint32_t> primes_up_to(std::uint32_t limit) {
    std::vector<std::uint32_t> out;
    if (limit < 2) return out;
    std::vector<bool> composite(static_cast<std::size_t>(limit) + 1, false);
    for (std::uint64_t i = 2; i <= limit; ++i) {
        if (composite[i]) continue;
        out.push_back(static_cast<std::uint32_t>(i));
        for (std::uint64_t j = i * i; j <= limit; j += i) composite[j] = true;
    }
    return out;
}

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
    return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % m);
}

std::uint64_t powmod(std::uint64_t base, std::uint64_t exp, std::uint64_t m) {
    std::uint64_t result = 1 % m;
    base %= m;
    while (exp) {
        if (exp & 1) result = mulmod(result, base, m);
        base = mulmod(base, base, m);
        exp >>= 1;
    }
    return result;
}

bool is_prime_u64(std::uint64_t n) {
    if (n < 2) return false;
    static constexpr std::uint64_t small[] = {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37};
    for (auto p : small) {
        if (n == p) return true;
        if (n % p == 0) return false;
    }
    std::uint64_t d = n - 1;
    int s = 0;
    while ((d & 1) == 0) {
        d >>= 1;
        ++s;
    }
    for (auto a : small) {
        std::uint64_t x = powmod(a, d, n);
        if (x == 1 || x == n - 1) continue;
        bool composite = true;
        for (int r = 1; r < s; ++r) {
            x = mulmod(x, x, n);
            if (x == n - 1) {
                composite = false;
                break;
            }
        }
        if (composite) return false;
    }
    return true;
}

bool is_probable_prime(const BigInt& n) {
    if (n < 2) return false;
    if (mpz_sizeinbase(n.get_mpz_t(), 2) <= 64) {
        std::uint64_t v = 0;
        mpz_export(&v, nullptr, -1, sizeof v, 0, 0, n.get_mpz_t());
        return is_prime_u64(v);
    }
    return mpz_probab_prime_p(n.get_mpz_t(), 40) != 0;
}

std::uint64_t next_prime(std::uint64_t n) {
    if (n < 2) return 2;
    std::uint64_t c = n + 1;
    while (!is_prime_u64(c)) ++c;
    return c;
}

int legendre_euler(std::int64_t a, std::uint64_t p) {
    auto r = static_cast<std::uint64_t>(((a % static_cast<std::int64_t>(p)) + static_cast<std::int64_t>(p)) %
                                        static_cast<std::int64_t>(p));
    if (r == 0) return 0;
    return powmod(r, (p - 1) / 2, p) == 1 ? 1 : -1;
}

std::uint64_t gcd_u64(std::uint64_t a, std::uint64_t b) { return std::gcd(a, b); }

std::uint64_t euler_phi(std::uint64_t n) {
    std::uint64_t result = n;
    for (std::uint64_t p = 2; p * p <= n; ++p) {
        if (n % p) continue;
        while (n % p == 0) n /= p;
        result -= result / p;
    }
    if (n > 1) result -= result / n;
    return result;
}

std::optional<std::uint64_t> pollard_rho(std::uint64_t n, std::uint64_t seed, std::uint64_t max_iterations) {
    if (n % 2 == 0) return 2;
    // Brent's variant with batched gcds.
    for (std::uint64_t c = seed; c < seed + 20; ++c) {
        auto f = [&](std::uint64_t x) { return (mulmod(x, x, n) + c) % n; };
        std::uint64_t y = 2, x = 2, g = 1, q = 1, ys = 2;
        std::uint64_t r = 1, iterations = 0;
        constexpr std::uint64_t m = 128;
        while (g == 1 && iterations < max_iterations) {
            x = y;
            for (std::uint64_t i = 0; i < r; ++i) y = f(y);
            std::uint64_t k = 0;
            while (k < r && g == 1) {
                ys = y;
                for (std::uint64_t i = 0; i < std::min(m, r - k); ++i) {
                    y = f(y);
                    q = mulmod(q, x > y ? x - y : y - x, n);
                }
                g = std::gcd(q, n);
                k += m;
            }
            iterations += r;
            r <<= 1;
        }
        if (g == n) {
            do {
                ys = f(ys);
                g = std::gcd(x > ys ? x - ys : ys - x, n);
            } while (g == 1);
        }
        if (g != 1 && g != n) return g;
    }
    return std::nullopt;
}

std::optional<BigInt> pollard_rho(const BigInt& n, unsigned long seed, unsigned long max_iterations) {
    if (mpz_even_p(n.get_mpz_t())) return BigInt(2);
    for (unsigned long c = seed; c < seed + 8; ++c) {
        BigInt x = 2, y = 2, g = 1, q = 1, diff;
        unsigned long steps = 0;
        while (g == 1 && steps < max_iterations) {
            for (int batch = 0; batch < 64 && steps < max_iterations; ++batch, ++steps) {
                x = (x * x + c) % n;
                y = (y * y + c) % n;
                y = (y * y + c) % n;
                diff = x - y;
                q = (q * abs(diff)) % n;
            }
            mpz_gcd(g.get_mpz_t(), q.get_mpz_t(), n.get_mpz_t());
        }
        if (g != 1 && g != n) return g;
    }
    return std::nullopt;
}

namespace {

const std::vector<std::uint32_t>& trial_primes(std::uint32_t bound) {
    static std::mutex mu;
    static std::uint32_t cached_bound = 0;
    static std::vector<std::uint32_t> cached;
    std::lock_guard lock(mu);
    if (cached_bound < bound) {
        cached = primes_up_to(bound);
        cached_bound = bound;
    }
    return cached;
}

void split(const BigInt& n, unsigned rho_bit_bound, Factorization& out) {
    if (n == 1) return;
    if (is_probable_prime(n)) {
        out.primes.push_back(n);
        return;
    }
    std::optional<BigInt> factor;
    const auto bits = mpz_sizeinbase(n.get_mpz_t(), 2);
    if (bits <= 64) {
        std::uint64_t v = 0;
        mpz_export(&v, nullptr, -1, sizeof v, 0, 0, n.get_mpz_t());
        if (auto f = pollard_rho(v)) {
            BigInt fz;
            mpz_import(fz.get_mpz_t(), 1, -1, sizeof *f, 0, 0, &*f);
            factor = fz;
        }
    } else if (bits <= rho_bit_bound) {
        factor = pollard_rho(n);
    }
    if (!factor) {
        out.primes.push_back(n);
        out.complete = false;
        return;
    }
    split(*factor, rho_bit_bound, out);
    split(BigInt(n / *factor), rho_bit_bound, out);
}

}  // namespace

Factorization factorize(const BigInt& n, std::uint32_t trial_bound, unsigned rho_bit_bound) {
    if (n < 1) throw Error(ErrorCode::InvalidArgument, "factorize expects a positive integer");
    Factorization out;
    BigInt rest = n;
    for (std::uint32_t p : trial_primes(trial_bound)) {
        if (BigInt(p) * p > rest) break;
        while (mpz_divisible_ui_p(rest.get_mpz_t(), p)) {
            out.primes.emplace_back(p);
            rest /= p;
        }
    }
    if (rest > 1) split(rest, rho_bit_bound, out);
    std::sort(out.primes.begin(), out.primes.end());
    return out;
}

}  // namespace galdens
