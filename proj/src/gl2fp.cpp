#include "galdens/gl2fp.hpp"

#include "galdens/error.hpp"
#include "galdens/primes.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <set>

namespace galdens {

namespace {

void require_odd_prime(unsigned p) {
    if (p < 3 || !is_prime_u64(p)) throw Error(ErrorCode::InvalidArgument, "expected an odd prime, got " + std::to_string(p));
}

bool is_square_mod(unsigned x, unsigned p) { return legendre_euler(x, p) == 1; }

class Gl2Impl final : public detail::GroupImpl {
public:
    explicit Gl2Impl(unsigned p) : p_(p) {
        const std::uint64_t codes = static_cast<std::uint64_t>(p) * p * p * p;
        index_.assign(codes, kNone);
        for (std::uint32_t code = 0; code < codes; ++code) {
            auto m = unpack(code);
            if ((m[0] * m[3] + p * p - m[1] * m[2]) % p == 0) continue;
            index_[code] = static_cast<Elem>(codes_.size());
            codes_.push_back(code);
        }
        name = "gl2fp:" + std::to_string(p);
        const unsigned g = primitive_root_mod(p);
        generators = {index_[pack({g, 0, 0, 1})], index_[pack({1, 1, 0, 1})], index_[pack({0, 1, 1, 0})]};
    }

    std::uint64_t order() const override { return codes_.size(); }
    Elem mul(Elem a, Elem b) const override {
        auto x = unpack(codes_[a]);
        auto y = unpack(codes_[b]);
        return index_[pack({(x[0] * y[0] + x[1] * y[2]) % p_, (x[0] * y[1] + x[1] * y[3]) % p_,
                            (x[2] * y[0] + x[3] * y[2]) % p_, (x[2] * y[1] + x[3] * y[3]) % p_})];
    }
    Elem inverse(Elem a) const override {
        auto x = unpack(codes_[a]);
        const unsigned det = (x[0] * x[3] + p_ * p_ - x[1] * x[2]) % p_;
        const auto di = static_cast<unsigned>(powmod(det, p_ - 2, p_));
        return index_[pack({x[3] * di % p_, (p_ - x[1]) % p_ * di % p_, (p_ - x[2]) % p_ * di % p_, x[0] * di % p_})];
    }
    Elem identity() const override { return index_[pack({1, 0, 0, 1})]; }
    std::string describe(Elem a) const override { return element(a).to_string(); }

    GL2Element element(Elem a) const { return GL2Element{p_, unpack(codes_[a])}; }
    unsigned prime() const { return p_; }

private:
    static constexpr Elem kNone = 0xffffffffu;

    std::array<unsigned, 4> unpack(std::uint32_t code) const {
        std::array<unsigned, 4> m{};
        for (int i = 3; i >= 0; --i) {
            m[static_cast<std::size_t>(i)] = code % p_;
            code /= p_;
        }
        return m;
    }
    std::uint32_t pack(const std::array<unsigned, 4>& m) const { return ((m[0] * p_ + m[1]) * p_ + m[2]) * p_ + m[3]; }

    static unsigned primitive_root_mod(unsigned p) {
        for (unsigned g = 2; g < p; ++g) {
            bool ok = true;
            for (unsigned q = 2; q < p; ++q)
                if ((p - 1) % q == 0 && is_prime_u64(q) && powmod(g, (p - 1) / q, p) == 1) ok = false;
            if (ok) return g;
        }
        return 1;  // p = 2
    }

    unsigned p_;
    std::vector<std::uint32_t> codes_;
    std::vector<Elem> index_;
};

}  // namespace

GL2Element GL2Element::make(unsigned p, long a, long b, long c, long d) {
    require_odd_prime(p);
    auto red = [p](long v) {
        long r = v % static_cast<long>(p);
        return static_cast<unsigned>(r < 0 ? r + static_cast<long>(p) : r);
    };
    GL2Element g{p, {red(a), red(b), red(c), red(d)}};
    if (g.det() == 0) throw Error(ErrorCode::InvalidArgument, "singular matrix " + g.to_string());
    return g;
}

unsigned GL2Element::det() const { return (m[0] * m[3] + p * p - m[1] * m[2]) % p; }

std::string GL2Element::to_string() const {
    return "[[" + std::to_string(m[0]) + "," + std::to_string(m[1]) + "],[" + std::to_string(m[2]) + "," +
           std::to_string(m[3]) + "]]";
}

std::string_view to_string(ClassKind k) {
    switch (k) {
        case ClassKind::Central: return "Central";
        case ClassKind::NonSemisimple: return "NonSemisimple";
        case ClassKind::SplitRegular: return "SplitRegular";
        case ClassKind::NonsplitRegular: return "NonsplitRegular";
    }
    return "?";
}

ClassType classify(const GL2Element& g) {
    const unsigned p = g.p;
    if (g.det() == 0) throw Error(ErrorCode::InvalidArgument, "singular matrix " + g.to_string());
    const unsigned tr = g.trace();
    const unsigned det = g.det();
    const auto half = static_cast<unsigned>(powmod(2, p - 2, p));
    if (g.m[1] == 0 && g.m[2] == 0 && g.m[0] == g.m[3]) return {ClassKind::Central, {g.m[0]}};
    const unsigned disc = (tr * tr + 4 * p * p - 4 * det % p) % p;
    if (disc == 0) return {ClassKind::NonSemisimple, {tr * half % p}};
    if (is_square_mod(disc, p)) {
        unsigned root = 1;
        while (root * root % p != disc) ++root;
        unsigned l1 = (tr + root) * half % p;
        unsigned l2 = (tr + p - root) * half % p;
        if (l1 > l2) std::swap(l1, l2);
        return {ClassKind::SplitRegular, {l1, l2}};
    }
    return {ClassKind::NonsplitRegular, {tr, det}};
}

FiniteGroup gl2_group(unsigned p) {
    require_odd_prime(p);
    if (p > kMaxEnumeratedPrime)
        throw Error(ErrorCode::BoundExceeded, "GL2 enumeration limited to p <= " + std::to_string(kMaxEnumeratedPrime));
    static std::mutex mu;
    static std::map<unsigned, FiniteGroup> cache;
    std::lock_guard lock(mu);
    if (auto it = cache.find(p); it != cache.end()) return it->second;
    FiniteGroup g(std::make_shared<Gl2Impl>(p));
    cache.emplace(p, g);
    return g;
}

GL2Element gl2_element(const FiniteGroup& g, Elem x) {
    const auto* impl = dynamic_cast<const Gl2Impl*>(&g.impl());
    if (!impl) throw Error(ErrorCode::InvalidArgument, g.name() + " is not a GL2 group");
    return impl->element(x);
}

unsigned gl2_prime(const FiniteGroup& g) {
    const auto* impl = dynamic_cast<const Gl2Impl*>(&g.impl());
    if (!impl) throw Error(ErrorCode::InvalidArgument, g.name() + " is not a GL2 group");
    return impl->prime();
}

int steinberg_value(ClassKind kind, unsigned p) {
    switch (kind) {
        case ClassKind::Central: return static_cast<int>(p);
        case ClassKind::NonSemisimple: return 0;
        case ClassKind::SplitRegular: return 1;
        case ClassKind::NonsplitRegular: return -1;
    }
    return 0;
}

ClassFunction steinberg_character(unsigned p) {
    const FiniteGroup g = gl2_group(p);
    return ClassFunction::from_elements(g, [&](Elem x) {
        return CycValue::integer(steinberg_value(classify(gl2_element(g, x)).kind, p));
    });
}

const Rational& ClassTypeFractions::operator[](ClassKind k) const {
    switch (k) {
        case ClassKind::Central: return central;
        case ClassKind::NonSemisimple: return non_semisimple;
        case ClassKind::SplitRegular: return split_regular;
        case ClassKind::NonsplitRegular: return nonsplit_regular;
    }
    return central;
}

ClassTypeFractions class_type_fractions(unsigned p) {
    require_odd_prime(p);
    const BigInt q = p;
    ClassTypeFractions f{Rational(1, q * (q * q - 1)), Rational(1, q), Rational(q - 2, 2 * (q - 1)),
                         Rational(q, 2 * (q + 1))};
    f.central.canonicalize();
    f.non_semisimple.canonicalize();
    f.split_regular.canonicalize();
    f.nonsplit_regular.canonicalize();
    return f;
}

ClassTypeCounts class_type_counts_by_enumeration(unsigned p) {
    require_odd_prime(p);
    ClassTypeCounts counts;
    for (unsigned a = 0; a < p; ++a)
        for (unsigned b = 0; b < p; ++b)
            for (unsigned c = 0; c < p; ++c)
                for (unsigned d = 0; d < p; ++d) {
                    GL2Element g{p, {a, b, c, d}};
                    if (g.det() == 0) continue;
                    switch (classify(g).kind) {
                        case ClassKind::Central: ++counts.central; break;
                        case ClassKind::NonSemisimple: ++counts.non_semisimple; break;
                        case ClassKind::SplitRegular: ++counts.split_regular; break;
                        case ClassKind::NonsplitRegular: ++counts.nonsplit_regular; break;
                    }
                }
    return counts;
}

namespace {

void require_distinct_primes(std::span<const Gl2Character> factors) {
    if (factors.empty()) throw Error(ErrorCode::InvalidArgument, "product of no characters");
    std::set<unsigned> seen;
    for (const auto& f : factors)
        if (!seen.insert(f.p).second)
            throw Error(ErrorCode::InvalidArgument,
                        "prime " + std::to_string(f.p) + " repeated; factors must come from linearly disjoint extensions");
}

}  // namespace

ClassFunction product_character(std::span<const Gl2Character> factors) {
    require_distinct_primes(factors);
    ClassFunction acc = factors.front().chi;
    for (std::size_t i = 1; i < factors.size(); ++i) acc = outer_product(acc, factors[i].chi);
    return acc;
}

Rational product_zero_fraction(std::span<const Gl2Character> factors) {
    require_distinct_primes(factors);
    Rational nonzero = 1;
    for (const auto& f : factors) nonzero *= 1 - zero_fraction(f.chi);
    return 1 - nonzero;
}

}  // namespace galdens
