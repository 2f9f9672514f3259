#include "galdens/character_table.hpp"

#include "galdens/error.hpp"
#include "galdens/primes.hpp"

#include <algorithm>
#include <cmath>

namespace galdens {

namespace {

/// Arithmetic in F_l for l < 2^32.
struct Fl {
    std::uint64_t l;

    std::uint64_t add(std::uint64_t a, std::uint64_t b) const { return (a + b) % l; }
    std::uint64_t sub(std::uint64_t a, std::uint64_t b) const { return (a + l - b) % l; }
    std::uint64_t mul(std::uint64_t a, std::uint64_t b) const { return a * b % l; }
    std::uint64_t inv(std::uint64_t a) const { return powmod(a, l - 2, l); }
    std::uint64_t neg(std::uint64_t a) const { return a == 0 ? 0 : l - a; }
};

using Vec = std::vector<std::uint64_t>;
using Mat = std::vector<Vec>;

/// Row-reduces in place; returns pivot columns.
std::vector<std::size_t> rref(Mat& m, const Fl& f) {
    std::vector<std::size_t> pivots;
    std::size_t row = 0;
    const std::size_t cols = m.empty() ? 0 : m[0].size();
    for (std::size_t c = 0; c < cols && row < m.size(); ++c) {
        std::size_t p = row;
        while (p < m.size() && m[p][c] == 0) ++p;
        if (p == m.size()) continue;
        std::swap(m[p], m[row]);
        const auto inv = f.inv(m[row][c]);
        for (auto& v : m[row]) v = f.mul(v, inv);
        for (std::size_t r = 0; r < m.size(); ++r) {
            if (r == row || m[r][c] == 0) continue;
            const auto factor = m[r][c];
            for (std::size_t k = 0; k < cols; ++k) m[r][k] = f.sub(m[r][k], f.mul(factor, m[row][k]));
        }
        pivots.push_back(c);
        ++row;
    }
    m.resize(row);
    return pivots;
}

/// Basis of {x : a x = 0}.
Mat nullspace(Mat a, const Fl& f) {
    const std::size_t n = a.empty() ? 0 : a[0].size();
    auto pivots = rref(a, f);
    std::vector<bool> is_pivot(n, false);
    for (auto p : pivots) is_pivot[p] = true;
    Mat basis;
    for (std::size_t free = 0; free < n; ++free) {
        if (is_pivot[free]) continue;
        Vec v(n, 0);
        v[free] = 1;
        for (std::size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = f.neg(a[r][free]);
        basis.push_back(std::move(v));
    }
    return basis;
}

/// Characteristic polynomial (low degree first) via Hessenberg reduction.
Vec charpoly(Mat h, const Fl& f) {
    const std::size_t n = h.size();
    for (std::size_t m = 1; m + 1 < n; ++m) {
        std::size_t i = m;
        while (i < n && h[i][m - 1] == 0) ++i;
        if (i == n) continue;
        if (i != m) {
            std::swap(h[i], h[m]);
            for (auto& row : h) std::swap(row[i], row[m]);
        }
        const auto inv = f.inv(h[m][m - 1]);
        for (std::size_t k = m + 1; k < n; ++k) {
            if (h[k][m - 1] == 0) continue;
            const auto u = f.mul(h[k][m - 1], inv);
            for (std::size_t c = 0; c < n; ++c) h[k][c] = f.sub(h[k][c], f.mul(u, h[m][c]));
            for (std::size_t r = 0; r < n; ++r) h[r][m] = f.add(h[r][m], f.mul(u, h[r][k]));
        }
    }
    std::vector<Vec> p(n + 1);
    p[0] = {1};
    for (std::size_t m = 1; m <= n; ++m) {
        // p_m = (x - h_mm) p_{m-1} - sum_i h_{i,m} (prod h_{j+1,j}) p_{i-1}   (1-indexed)
        Vec next(m + 1, 0);
        const auto& prev = p[m - 1];
        for (std::size_t k = 0; k < prev.size(); ++k) {
            next[k + 1] = f.add(next[k + 1], prev[k]);
            next[k] = f.sub(next[k], f.mul(h[m - 1][m - 1], prev[k]));
        }
        std::uint64_t t = 1;
        for (std::size_t i = m - 1; i >= 1; --i) {
            t = f.mul(t, h[i][i - 1]);
            const auto coef = f.mul(t, h[i - 1][m - 1]);
            for (std::size_t k = 0; k < p[i - 1].size(); ++k) next[k] = f.sub(next[k], f.mul(coef, p[i - 1][k]));
        }
        p[m] = std::move(next);
    }
    return p[n];
}

std::uint64_t eval_poly(const Vec& poly, std::uint64_t x, const Fl& f) {
    std::uint64_t acc = 0;
    for (std::size_t k = poly.size(); k-- > 0;) acc = f.add(f.mul(acc, x), poly[k]);
    return acc;
}

std::uint64_t primitive_root(std::uint64_t l) {
    std::vector<std::uint64_t> factors;
    std::uint64_t m = l - 1;
    for (std::uint64_t p = 2; p * p <= m; ++p) {
        if (m % p) continue;
        factors.push_back(p);
        while (m % p == 0) m /= p;
    }
    if (m > 1) factors.push_back(m);
    for (std::uint64_t g = 2; g < l; ++g) {
        bool ok = true;
        for (auto q : factors) ok = ok && powmod(g, (l - 1) / q, l) != 1;
        if (ok) return g;
    }
    throw Error(ErrorCode::NoSuitablePrime, "no primitive root modulo " + std::to_string(l));
}

}  // namespace

std::uint64_t character_table_prime(std::uint64_t order, std::uint64_t exponent, std::uint64_t max_prime) {
    auto root = static_cast<std::uint64_t>(std::ceil(std::sqrt(static_cast<double>(order))));
    while (root * root < order) ++root;
    while (root > 0 && (root - 1) * (root - 1) >= order) --root;
    const std::uint64_t floor_bound = 2 * root;
    for (std::uint64_t l = exponent + 1; l <= max_prime; l += exponent)
        if (l > floor_bound && is_prime_u64(l)) return l;
    throw Error(ErrorCode::NoSuitablePrime, "no prime = 1 mod " + std::to_string(exponent) + " below " + std::to_string(max_prime));
}

std::vector<ClassFunction> character_table_small(const FiniteGroup& g, const CharacterTableLimits& limits) {
    const auto n = g.order();
    if (n > limits.max_order)
        throw Error(ErrorCode::BoundExceeded, "character table limited to order " + std::to_string(limits.max_order));
    const auto& cls = g.classes();
    const std::size_t r = cls.size();
    if (r > limits.max_classes)
        throw Error(ErrorCode::BoundExceeded, "character table limited to " + std::to_string(limits.max_classes) + " classes");

    const std::uint64_t e = g.exponent();
    const Fl f{character_table_prime(n, e, limits.max_prime)};
    const std::size_t id_class = cls.class_of[g.identity()];

    std::vector<std::size_t> inverse_class(r);
    for (std::size_t k = 0; k < r; ++k) inverse_class[k] = cls.class_of[g.inverse(cls.representatives[k])];

    // M[j][i][k] = #{x in C_j : x^-1 g_k in C_i}
    std::vector<Mat> structure(r, Mat(r, Vec(r, 0)));
    for (std::size_t k = 0; k < r; ++k) {
        const Elem gk = cls.representatives[k];
        for (Elem x = 0; x < n; ++x) {
            const auto j = cls.class_of[x];
            const auto i = cls.class_of[g.mul(g.inverse(x), gk)];
            ++structure[j][i][k];
        }
    }
    for (auto& m : structure)
        for (auto& row : m)
            for (auto& v : row) v %= f.l;

    // Split F_l^r into common eigenspaces of all M_j.
    std::vector<Mat> spaces;
    {
        Mat full(r, Vec(r, 0));
        for (std::size_t i = 0; i < r; ++i) full[i][i] = 1;
        spaces.push_back(std::move(full));
    }
    for (std::size_t j = 0; j < r; ++j) {
        std::vector<Mat> next;
        for (auto& basis : spaces) {
            const std::size_t w = basis.size();
            if (w == 1) {
                next.push_back(std::move(basis));
                continue;
            }
            auto pivots = rref(basis, f);
            Mat restricted(w, Vec(w, 0));
            for (std::size_t s = 0; s < w; ++s) {
                Vec image(r, 0);
                for (std::size_t i = 0; i < r; ++i) {
                    std::uint64_t acc = 0;
                    for (std::size_t k = 0; k < r; ++k) acc = f.add(acc, f.mul(structure[j][i][k], basis[s][k]));
                    image[i] = acc;
                }
                for (std::size_t t = 0; t < w; ++t) restricted[t][s] = image[pivots[t]];
            }
            const auto poly = charpoly(restricted, f);
            std::size_t found = 0;
            for (std::uint64_t lambda = 0; lambda < f.l && found < w; ++lambda) {
                if (eval_poly(poly, lambda, f) != 0) continue;
                Mat shifted = restricted;
                for (std::size_t t = 0; t < w; ++t) shifted[t][t] = f.sub(shifted[t][t], lambda);
                Mat kernel = nullspace(shifted, f);
                Mat sub;
                for (const auto& coords : kernel) {
                    Vec v(r, 0);
                    for (std::size_t t = 0; t < w; ++t)
                        for (std::size_t k = 0; k < r; ++k) v[k] = f.add(v[k], f.mul(coords[t], basis[t][k]));
                    sub.push_back(std::move(v));
                }
                found += sub.size();
                next.push_back(std::move(sub));
            }
            if (found != w)
                throw Error(ErrorCode::NoSuitablePrime,
                            "class algebra does not split modulo " + std::to_string(f.l) + " for " + g.name());
        }
        spaces = std::move(next);
    }
    if (spaces.size() != r)
        throw Error(ErrorCode::InvalidGroup, "found " + std::to_string(spaces.size()) + " central characters for " +
                                                 std::to_string(r) + " classes of " + g.name());

    const std::uint64_t z = powmod(primitive_root(f.l), (f.l - 1) / e, f.l);
    const std::uint64_t z_inv = f.inv(z);
    const std::uint64_t e_inv = f.inv(e % f.l);

    // power maps: class of g_k^t
    std::vector<std::vector<std::size_t>> power_class(r, std::vector<std::size_t>(e));
    for (std::size_t k = 0; k < r; ++k) {
        Elem y = g.identity();
        for (std::uint64_t t = 0; t < e; ++t) {
            power_class[k][t] = cls.class_of[y];
            y = g.mul(y, cls.representatives[k]);
        }
    }

    std::vector<ClassFunction> table;
    for (auto& space : spaces) {
        Vec omega = space.front();
        const auto scale = f.inv(omega[id_class]);
        for (auto& v : omega) v = f.mul(v, scale);

        std::uint64_t s = 0;
        for (std::size_t k = 0; k < r; ++k)
            s = f.add(s, f.mul(f.mul(omega[k], omega[inverse_class[k]]), f.inv(cls.class_size(k) % f.l)));
        const std::uint64_t d2 = f.mul(n % f.l, f.inv(s));
        std::uint64_t degree = 0;
        for (std::uint64_t d = 1; d * d <= n; ++d)
            if (d * d % f.l == d2) degree = d;
        if (degree == 0) throw Error(ErrorCode::NoSuitablePrime, "degree recovery failed modulo " + std::to_string(f.l));

        Vec chi(r);
        for (std::size_t k = 0; k < r; ++k)
            chi[k] = f.mul(f.mul(omega[k], degree % f.l), f.inv(cls.class_size(k) % f.l));

        std::vector<CycValue> values;
        values.reserve(r);
        for (std::size_t k = 0; k < r; ++k) {
            std::vector<Rational> coeffs(e, Rational(0));
            std::uint64_t total = 0;
            for (std::uint64_t m = 0; m < e; ++m) {
                // multiplicity of eigenvalue zeta^m in rho(g_k)
                std::uint64_t acc = 0;
                const std::uint64_t step = powmod(z_inv, m, f.l);
                std::uint64_t w = 1;
                for (std::uint64_t t = 0; t < e; ++t) {
                    acc = f.add(acc, f.mul(chi[power_class[k][t]], w));
                    w = f.mul(w, step);
                }
                const std::uint64_t mult = f.mul(acc, e_inv);
                if (mult > degree)
                    throw Error(ErrorCode::NoSuitablePrime, "eigenvalue multiplicity lift failed modulo " + std::to_string(f.l));
                coeffs[m] = Rational(BigInt(mult));
                total += mult;
            }
            if (total != degree) throw Error(ErrorCode::NoSuitablePrime, "eigenvalue multiplicities do not sum to the degree");
            values.emplace_back(static_cast<unsigned>(e), std::move(coeffs));
        }
        table.emplace_back(g, std::move(values));
    }

    std::sort(table.begin(), table.end(), [](const ClassFunction& a, const ClassFunction& b) {
        const auto da = a.degree().to_rational();
        const auto db = b.degree().to_rational();
        if (da != db) return da < db;
        for (std::size_t k = 0; k < a.values().size(); ++k) {
            auto c = lex_compare(a.values()[k], b.values()[k]);
            if (c != 0) return c < 0;
        }
        return false;
    });

    Rational sum_sq = 0;
    for (std::size_t a = 0; a < table.size(); ++a) {
        const auto d = table[a].degree().to_rational();
        sum_sq += d * d;
        for (std::size_t b = a; b < table.size(); ++b) {
            const auto ip = inner_product(table[a], table[b]);
            if (ip != CycValue::integer(a == b ? 1 : 0))
                throw Error(ErrorCode::InvalidGroup, "character table of " + g.name() + " fails orthogonality");
        }
    }
    if (sum_sq != Rational(BigInt(n)))
        throw Error(ErrorCode::InvalidGroup, "squared degrees of " + g.name() + " do not sum to the order");
    return table;
}

}  // namespace galdens
