#include "galdens/sieveshift.hpp"

#include "galdens/error.hpp"

#include <algorithm>
#include <atomic>
#include <mutex>
#include <optional>
#include <thread>

namespace galdens {

namespace {

constexpr std::uint32_t kTrialBound = 1000000;

const std::vector<std::uint32_t>& scan_primes() {
    static const std::vector<std::uint32_t> primes = primes_up_to(kTrialBound);
    return primes;
}

bool is_square(const BigInt& n) { return n >= 0 && mpz_perfect_square_p(n.get_mpz_t()); }

/// Fills hit.factors when value is a prime or a product of two primes.
/// Returns nullopt when the question could not be settled.
std::optional<bool> classify_value(const BigInt& value, AlmostPrimeHit& hit) {
    if (value < 2) return false;
    if (is_probable_prime(value)) {
        hit.factors = {value};
        return true;
    }
    std::vector<BigInt> small;
    BigInt rest = value;
    for (std::uint32_t p : scan_primes()) {
        if (BigInt(p) * p > rest) break;
        while (mpz_divisible_ui_p(rest.get_mpz_t(), p)) {
            small.emplace_back(p);
            rest /= p;
            if (small.size() > 2 || (small.size() == 2 && rest > 1)) return false;
        }
    }
    if (rest == 1) {
        if (small.size() != 2) return false;
        hit.factors = small;
        return true;
    }
    if (small.size() == 1) {
        if (!is_probable_prime(rest)) return false;
        hit.factors = {small[0], rest};
        return true;
    }
    // small is empty and value is composite with every prime factor above the trial bound
    std::optional<BigInt> f;
    if (mpz_sizeinbase(rest.get_mpz_t(), 2) <= 128) f = pollard_rho(rest);
    if (!f) return std::nullopt;
    BigInt g = rest / *f;
    if (!is_probable_prime(*f) || !is_probable_prime(g)) return false;
    hit.factors = {std::min(*f, g), std::max(*f, g)};
    return true;
}

}  // namespace

std::string QuadPoly::to_string() const { return a.get_str() + "x^2 + " + b.get_str() + "x + " + c.get_str(); }

void validate(const QuadPoly& f) {
    if (f.a == 0) throw Error(ErrorCode::InvalidArgument, "leading coefficient must be nonzero");
    if (is_square(f.discriminant()))
        throw Error(ErrorCode::InvalidArgument, f.to_string() + " is reducible over Q (square discriminant)");
    BigInt g;
    mpz_gcd(g.get_mpz_t(), f.a.get_mpz_t(), f.b.get_mpz_t());
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), f.c.get_mpz_t());
    if (g != 1) throw Error(ErrorCode::InvalidArgument, f.to_string() + " is not primitive");
}

QuadPoly shifted_poly(const QuadPoly& f, const BigInt& A, const BigInt& B) {
    return QuadPoly{f.a * A * A, 2 * f.a * A * B + f.b * A, f(B)};
}

ShiftSpec find_shift(const QuadPoly& f, std::uint64_t T) {
    validate(f);
    if (T < 3) throw Error(ErrorCode::InvalidArgument, "T must be at least 3");
    if (T > kMaxShiftBound)
        throw Error(ErrorCode::BoundExceeded, "T = " + std::to_string(T) + " exceeds " + std::to_string(kMaxShiftBound));
    BigInt A = 1, B = 0;
    for (std::uint32_t l : primes_up_to(static_cast<std::uint32_t>(T - 1))) {
        std::optional<std::uint32_t> residue;
        for (std::uint32_t x = 0; x < l && !residue; ++x)
            if (!mpz_divisible_ui_p(BigInt(f(BigInt(x))).get_mpz_t(), l)) residue = x;
        if (!residue)
            throw Error(ErrorCode::NoAdmissibleShift,
                        f.to_string() + " vanishes mod " + std::to_string(l) + " at every residue");
        // B' = B + A t with B + A t = residue (mod l)
        BigInt inv, t;
        BigInt lz(l);
        mpz_invert(inv.get_mpz_t(), A.get_mpz_t(), lz.get_mpz_t());
        t = (BigInt(*residue) - B) * inv;
        mpz_fdiv_r(t.get_mpz_t(), t.get_mpz_t(), lz.get_mpz_t());
        B += A * t;
        A *= l;
    }
    const BigInt fb = f(B);
    for (std::uint32_t l : primes_up_to(static_cast<std::uint32_t>(T - 1)))
        if (mpz_divisible_ui_p(fb.get_mpz_t(), l))
            throw Error(ErrorCode::NoAdmissibleShift, "internal: f(B) divisible by " + std::to_string(l));
    return ShiftSpec{T, A, B, shifted_poly(f, A, B)};
}

ScanResult almost_prime_scan(const QuadPoly& F, std::uint64_t n_max, unsigned threads) {
    if (F.a <= 0) throw Error(ErrorCode::InvalidArgument, "leading coefficient must be positive");
    if (is_square(F.discriminant()))
        throw Error(ErrorCode::InvalidArgument, F.to_string() + " is reducible over Q (square discriminant)");
    threads = std::max(1u, threads);
    scan_primes();

    std::vector<std::optional<AlmostPrimeHit>> found(n_max);
    std::vector<char> unresolved(n_max, 0);
    std::atomic<std::uint64_t> next{1};
    auto worker = [&] {
        for (std::uint64_t n; (n = next.fetch_add(1)) <= n_max;) {
            AlmostPrimeHit hit{n, F(BigInt(n)), {}};
            auto verdict = classify_value(hit.value, hit);
            if (!verdict)
                unresolved[n - 1] = 1;
            else if (*verdict)
                found[n - 1] = std::move(hit);
        }
    };
    std::vector<std::jthread> pool;
    for (unsigned t = 1; t < threads; ++t) pool.emplace_back(worker);
    worker();
    pool.clear();

    ScanResult out;
    for (std::uint64_t i = 0; i < n_max; ++i) {
        if (found[i]) out.hits.push_back(std::move(*found[i]));
        if (unresolved[i]) out.unresolved.push_back(i + 1);
    }
    return out;
}

bool pairwise_coprime(std::span<const BigInt> ns) {
    if (ns.empty()) throw Error(ErrorCode::InvalidArgument, "empty sequence");
    for (const auto& n : ns)
        if (n <= 0) throw Error(ErrorCode::InvalidArgument, "entries must be positive");
    for (std::size_t i = 0; i < ns.size(); ++i)
        for (std::size_t j = i + 1; j < ns.size(); ++j) {
            BigInt g;
            mpz_gcd(g.get_mpz_t(), ns[i].get_mpz_t(), ns[j].get_mpz_t());
            if (g != 1) return false;
        }
    return true;
}

}  // namespace galdens
