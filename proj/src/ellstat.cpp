#include "galdens/ellstat.hpp"

#include "galdens/error.hpp"
#include "galdens/primes.hpp"

#include <atomic>
#include <cmath>
#include <random>
#include <sstream>
#include <thread>

namespace galdens {

namespace {

std::uint64_t reduce(std::int64_t v, std::uint64_t q) {
    const auto m = static_cast<std::int64_t>(q);
    return static_cast<std::uint64_t>(((v % m) + m) % m);
}

void require_count_prime(const Curve& c, std::uint64_t q) {
    if (q <= 3) throw Error(ErrorCode::InvalidArgument, "q must exceed 3");
    if (q > 0xffffffffull) throw Error(ErrorCode::BoundExceeded, "q too large for point counting");
    if (!is_prime_u64(q)) throw Error(ErrorCode::InvalidArgument, std::to_string(q) + " is not prime");
    if (!c.good_reduction(q)) throw Error(ErrorCode::BadReduction, "bad reduction at " + std::to_string(q));
}

/// Affine point or infinity on y^2 = x^3 + a x + b over F_q.
struct Pt {
    std::uint64_t x = 0, y = 0;
    bool inf = true;
};

struct Field {
    std::uint64_t q, a;

    std::uint64_t add(std::uint64_t u, std::uint64_t v) const { return (u + v) % q; }
    std::uint64_t sub(std::uint64_t u, std::uint64_t v) const { return (u + q - v) % q; }
    std::uint64_t mul(std::uint64_t u, std::uint64_t v) const { return u * v % q; }
    std::uint64_t inv(std::uint64_t u) const { return powmod(u, q - 2, q); }

    Pt plus(const Pt& P, const Pt& Q) const {
        if (P.inf) return Q;
        if (Q.inf) return P;
        std::uint64_t lambda;
        if (P.x == Q.x) {
            if (add(P.y, Q.y) == 0) return {};
            lambda = mul(add(mul(3, mul(P.x, P.x)), a), inv(mul(2, P.y)));
        } else {
            lambda = mul(sub(Q.y, P.y), inv(sub(Q.x, P.x)));
        }
        const std::uint64_t x = sub(sub(mul(lambda, lambda), P.x), Q.x);
        return {x, sub(mul(lambda, sub(P.x, x)), P.y), false};
    }

    Pt times(std::uint64_t k, Pt P) const {
        Pt R;
        for (; k; k >>= 1) {
            if (k & 1) R = plus(R, P);
            P = plus(P, P);
        }
        return R;
    }

    /// Square root of a nonzero square mod q (Tonelli-Shanks).
    std::uint64_t sqrt(std::uint64_t n) const {
        if (q % 4 == 3) return powmod(n, (q + 1) / 4, q);
        std::uint64_t s = 0, d = q - 1;
        while (d % 2 == 0) d /= 2, ++s;
        std::uint64_t z = 2;
        while (powmod(z, (q - 1) / 2, q) != q - 1) ++z;
        std::uint64_t m = s, c = powmod(z, d, q), t = powmod(n, d, q), r = powmod(n, (d + 1) / 2, q);
        while (t != 1) {
            std::uint64_t i = 0, t2 = t;
            while (t2 != 1) t2 = mul(t2, t2), ++i;
            std::uint64_t b = c;
            for (std::uint64_t j = 0; j + i + 1 < m; ++j) b = mul(b, b);
            m = i;
            c = mul(b, b);
            t = mul(t, c);
            r = mul(r, b);
        }
        return r;
    }
};

/// Whether E[p] is contained in E(F_q) for y^2 = x^3 + a x + b mod q, tested on random points.
bool full_torsion_rational(std::uint64_t a, std::uint64_t b, std::uint64_t q, std::uint64_t p, std::uint64_t order,
                           std::mt19937_64& rng, unsigned trials) {
    if (order % (p * p) != 0 || (q - 1) % p != 0) return false;
    const Field F{q, a};
    std::uniform_int_distribution<std::uint64_t> pick(0, q - 1);
    for (unsigned t = 0; t < trials;) {
        const std::uint64_t x = pick(rng);
        const std::uint64_t rhs = F.add(F.mul(F.add(F.mul(x, x), a), x), b);
        Pt P;
        if (rhs == 0) {
            P = {x, 0, false};
        } else {
            if (powmod(rhs, (q - 1) / 2, q) != 1) continue;
            P = {x, F.sqrt(rhs), false};
        }
        if (!F.times(order / p, P).inf) return false;
        ++t;
    }
    return true;
}

}  // namespace

BigInt Curve::disc_core() const {
    const BigInt A = a, B = b;
    return 4 * A * A * A + 27 * B * B;
}

bool Curve::good_reduction(std::uint64_t q) const {
    return !mpz_divisible_ui_p(disc_core().get_mpz_t(), static_cast<unsigned long>(q));
}

void validate(const Curve& c) {
    const BigInt disc = c.discriminant();
    if (disc == 0)
        throw Error(ErrorCode::InvalidArgument,
                    "singular curve y^2 = x^3 + " + std::to_string(c.a) + "x + " + std::to_string(c.b));
    if (!c.conductor) return;
    const std::uint64_t N = *c.conductor;
    if (N == 0) throw Error(ErrorCode::InvalidArgument, "conductor must be positive");
    const auto fac = factorize(BigInt(static_cast<unsigned long>(N)));
    for (std::size_t i = 0; i < fac.primes.size(); ++i) {
        if (i && fac.primes[i] == fac.primes[i - 1])
            throw Error(ErrorCode::InvalidArgument,
                        "declared conductor " + std::to_string(N) + " is not square-free (curve not semistable)");
        if (!mpz_divisible_p(disc.get_mpz_t(), fac.primes[i].get_mpz_t()))
            throw Error(ErrorCode::InvalidArgument, "declared conductor prime " + fac.primes[i].get_str() +
                                                        " does not divide the discriminant");
    }
}

std::uint64_t count_points(const Curve& c, std::uint64_t q) {
    require_count_prime(c, q);
    std::vector<char> square(q, 0);
    for (std::uint64_t y = 1, y2 = 1; y <= q / 2; ++y) {
        square[y2] = 1;
        y2 += 2 * y + 1;  // (y+1)^2
        if (y2 >= q) y2 %= q;
    }
    // forward differences of f(x) = x^3 + a x + b: D1 = 3x^2 + 3x + 1 + a, D2 = 6x + 6, D3 = 6
    const std::uint64_t A = reduce(c.a, q);
    std::uint64_t f = reduce(c.b, q);
    std::uint64_t d1 = (1 + A) % q, d2 = 6 % q;
    const std::uint64_t d3 = 6 % q;
    std::uint64_t count = 1;
    for (std::uint64_t x = 0; x < q; ++x) {
        count += f == 0 ? 1 : (square[f] ? 2 : 0);
        f += d1;
        if (f >= q) f -= q;
        d1 += d2;
        if (d1 >= q) d1 -= q;
        d2 += d3;
        if (d2 >= q) d2 -= q;
    }
    const auto a_q = static_cast<std::int64_t>(q + 1) - static_cast<std::int64_t>(count);
    if (static_cast<double>(a_q) * static_cast<double>(a_q) > 4.0 * static_cast<double>(q))
        throw Error(ErrorCode::InvalidArgument, "Hasse bound violated at q = " + std::to_string(q));
    return count;
}

std::uint64_t count_points_naive(const Curve& c, std::uint64_t q) {
    require_count_prime(c, q);
    const std::uint64_t A = reduce(c.a, q), B = reduce(c.b, q);
    std::uint64_t count = 1;
    for (std::uint64_t x = 0; x < q; ++x) {
        const std::uint64_t rhs = (x * x % q * x + A * x + B) % q;
        for (std::uint64_t y = 0; y < q; ++y)
            if (y * y % q == rhs) ++count;
    }
    return count;
}

std::string_view to_string(FrobClass f) {
    switch (f) {
        case FrobClass::SplitRegular: return "split";
        case FrobClass::NonsplitRegular: return "nonsplit";
        case FrobClass::Ambiguous: return "ambiguous";
        case FrobClass::Central: return "central";
        case FrobClass::NonSemisimple: return "non-semisimple";
    }
    return "?";
}

FrobClass frobenius_class(std::int64_t a_q, std::uint64_t q, std::uint64_t p) {
    if (q == p) throw Error(ErrorCode::InvalidArgument, "q must differ from p");
    if (p < 3 || !is_prime_u64(p)) throw Error(ErrorCode::InvalidArgument, "p must be an odd prime");
    const std::uint64_t a = reduce(a_q, p);
    const std::uint64_t disc = (a * a + 4 * p * p - 4 * (q % p)) % p;
    if (disc == 0) return FrobClass::Ambiguous;
    return legendre_euler(static_cast<std::int64_t>(disc), p) == 1 ? FrobClass::SplitRegular : FrobClass::NonsplitRegular;
}

FrobClass resolve_ambiguous(const Curve& c, std::uint64_t q, std::uint64_t p, std::uint64_t seed, unsigned trials) {
    const std::uint64_t count = count_points(c, q);
    const std::int64_t a_q = static_cast<std::int64_t>(q + 1) - static_cast<std::int64_t>(count);
    if (frobenius_class(a_q, q, p) != FrobClass::Ambiguous) throw Error(ErrorCode::InvalidArgument, "class is not ambiguous");
    // double eigenvalue lambda = a_q / 2 mod p
    const std::uint64_t lambda = reduce(a_q, p) * ((p + 1) / 2) % p;
    std::mt19937_64 rng(seed ^ (q * 0x9e3779b97f4a7c15ull));
    const std::uint64_t A = reduce(c.a, q), B = reduce(c.b, q);
    if (lambda == 1) return full_torsion_rational(A, B, q, p, count, rng, trials) ? FrobClass::Central : FrobClass::NonSemisimple;
    if (lambda == p - 1) {
        // the quadratic twist by a nonsquare d has Frobenius -Frob and q + 1 + a_q points
        std::uint64_t d = 2;
        while (powmod(d, (q - 1) / 2, q) == 1) ++d;
        const std::uint64_t d2 = d * d % q;
        const std::uint64_t twisted = static_cast<std::uint64_t>(static_cast<std::int64_t>(q + 1) + a_q);
        return full_torsion_rational(A * d2 % q, B * d2 % q * d % q, q, p, twisted, rng, trials) ? FrobClass::Central
                                                                                             : FrobClass::NonSemisimple;
    }
    return FrobClass::Ambiguous;
}

double ChebotarevHistogram::standard_error(const Rational& expected) const {
    const double f = to_double(expected);
    return samples ? std::sqrt(f * (1 - f) / double(samples)) : 0.0;
}

double ChebotarevHistogram::z_score(std::uint64_t count, const Rational& expected) const {
    const double se = standard_error(expected);
    return se > 0 ? (fraction(count) - to_double(expected)) / se : 0.0;
}

ChebotarevHistogram chebotarev_histogram(const Curve& c, std::uint64_t p, std::uint64_t q_max,
                                         const HistogramOptions& options) {
    validate(c);
    if (p < 3 || !is_prime_u64(p)) throw Error(ErrorCode::InvalidArgument, "p must be an odd prime");
    if (q_max > 0xffffffffull) throw Error(ErrorCode::BoundExceeded, "q_max too large");
    ChebotarevHistogram h;
    h.p = p;
    h.q_max = q_max;
    if (p <= 7) h.warnings.push_back("p <= 7: surjectivity of the mod-p image is not guaranteed");

    std::vector<std::uint64_t> qs;
    for (std::uint32_t q : primes_up_to(static_cast<std::uint32_t>(q_max)))
        if (q > 3 && q != p && c.good_reduction(q)) qs.push_back(q);
    if (qs.empty()) throw Error(ErrorCode::NoGoodPrimes, "no good primes q in [5, " + std::to_string(q_max) + "]");

    std::vector<FrobSample> samples(qs.size());
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (std::size_t i; (i = next.fetch_add(1)) < qs.size();) {
            const std::uint64_t q = qs[i];
            const auto a_q = static_cast<std::int64_t>(q + 1) - static_cast<std::int64_t>(count_points(c, q));
            FrobClass cls = frobenius_class(a_q, q, p);
            if (cls == FrobClass::Ambiguous && options.resolve_scalars) cls = resolve_ambiguous(c, q, p, options.seed);
            samples[i] = {q, a_q, cls};
        }
    };
    {
        std::vector<std::jthread> pool;
        for (unsigned t = 1; t < std::max(1u, options.threads); ++t) pool.emplace_back(worker);
        worker();
    }

    h.samples = samples.size();
    for (const auto& s : samples) {
        switch (s.cls) {
            case FrobClass::SplitRegular: ++h.split; break;
            case FrobClass::NonsplitRegular: ++h.nonsplit; break;
            case FrobClass::Ambiguous: ++h.ambiguous; break;
            case FrobClass::Central: ++h.central; break;
            case FrobClass::NonSemisimple: ++h.non_semisimple; break;
        }
    }
    const auto expected = class_type_fractions(static_cast<unsigned>(p));
    h.expected_split = expected.split_regular;
    h.expected_nonsplit = expected.nonsplit_regular;
    h.expected_ambiguous = expected.central + expected.non_semisimple;
    if (options.keep_samples) h.sample_list = std::move(samples);
    return h;
}

std::vector<Curve> parse_curve_list(std::istream& in) {
    std::vector<Curve> out;
    std::string line;
    for (std::size_t lineno = 1; std::getline(in, line); ++lineno) {
        const auto start = line.find_first_not_of(" \t\r");
        if (start == std::string::npos || line[start] == '#') continue;
        std::istringstream fields(line);
        Curve c;
        if (!(fields >> c.a >> c.b))
            throw Error(ErrorCode::InvalidArgument, "curve list line " + std::to_string(lineno) + ": expected 'a b [N] [label]'");
        std::string tok;
        if (fields >> tok) {
            if (tok.find_first_not_of("0123456789") == std::string::npos) {
                c.conductor = std::stoull(tok);
                fields >> c.label;
            } else {
                c.label = tok;
            }
        }
        validate(c);
        out.push_back(std::move(c));
    }
    return out;
}

}  // namespace galdens
