#include "galdens/named_groups.hpp"

#include "galdens/error.hpp"
#include "galdens/gl2fp.hpp"
#include "galdens/primes.hpp"

#include <map>
#include <memory>
#include <string>

namespace galdens {

namespace {

class LabelledTable final : public detail::GroupImpl {
public:
    LabelledTable(FiniteGroup table, std::vector<std::string> labels)
        : table_(std::move(table)), labels_(std::move(labels)) {
        name = table_.name();
        generators.assign(table_.generators().begin(), table_.generators().end());
    }
    std::uint64_t order() const override { return table_.order(); }
    Elem mul(Elem a, Elem b) const override { return table_.mul(a, b); }
    Elem inverse(Elem a) const override { return table_.inverse(a); }
    Elem identity() const override { return table_.identity(); }
    std::string describe(Elem a) const override { return labels_[a]; }

private:
    FiniteGroup table_;
    std::vector<std::string> labels_;
};

std::string join_ints(const ConcreteElem& v) {
    std::string s = "[";
    for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
    return s + "]";
}

int mod(long a, int p) {
    long r = a % p;
    return static_cast<int>(r < 0 ? r + p : r);
}

ConcreteElem mat_mul_mod(const ConcreteElem& x, const ConcreteElem& y, int p) {
    return {mod(static_cast<long>(x[0]) * y[0] + static_cast<long>(x[1]) * y[2], p),
            mod(static_cast<long>(x[0]) * y[1] + static_cast<long>(x[1]) * y[3], p),
            mod(static_cast<long>(x[2]) * y[0] + static_cast<long>(x[3]) * y[2], p),
            mod(static_cast<long>(x[2]) * y[1] + static_cast<long>(x[3]) * y[3], p)};
}

std::string mat_label(const ConcreteElem& m) {
    return "[[" + std::to_string(m[0]) + "," + std::to_string(m[1]) + "],[" + std::to_string(m[2]) + "," +
           std::to_string(m[3]) + "]]";
}

ConcreteElem compose(const ConcreteElem& a, const ConcreteElem& b) {
    // (a*b)(i) = a(b(i)): apply b first
    ConcreteElem out(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[static_cast<std::size_t>(b[i])];
    return out;
}

unsigned parse_param(std::string_view spec, std::string_view prefix) {
    auto tail = spec.substr(prefix.size());
    if (tail.empty()) throw Error(ErrorCode::InvalidArgument, "missing parameter in group name '" + std::string(spec) + "'");
    unsigned long v = 0;
    for (char c : tail) {
        if (c < '0' || c > '9') throw Error(ErrorCode::InvalidArgument, "bad parameter in group name '" + std::string(spec) + "'");
        v = v * 10 + static_cast<unsigned long>(c - '0');
        if (v > 1'000'000) throw Error(ErrorCode::BoundExceeded, "parameter too large in '" + std::string(spec) + "'");
    }
    return static_cast<unsigned>(v);
}

}  // namespace

FiniteGroup closure_group(std::string name, const ConcreteElem& identity, const std::vector<ConcreteElem>& generators,
                          const std::function<ConcreteElem(const ConcreteElem&, const ConcreteElem&)>& mul,
                          const std::function<std::string(const ConcreteElem&)>& describe) {
    std::map<ConcreteElem, Elem> index{{identity, 0}};
    std::vector<ConcreteElem> elems{identity};
    for (std::size_t i = 0; i < elems.size(); ++i) {
        for (const auto& s : generators) {
            auto y = mul(elems[i], s);
            if (index.emplace(y, static_cast<Elem>(elems.size())).second) {
                elems.push_back(std::move(y));
                if (elems.size() > kMaxTableOrder)
                    throw Error(ErrorCode::BoundExceeded, "closure of " + name + " exceeds table bound");
            }
        }
    }
    const auto n = elems.size();
    std::vector<Elem> table(n * n);
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b) {
            auto it = index.find(mul(elems[a], elems[b]));
            if (it == index.end()) throw Error(ErrorCode::InvalidGroup, "generators of " + name + " are not closed");
            table[a * n + b] = it->second;
        }
    std::vector<std::string> labels;
    labels.reserve(n);
    for (const auto& e : elems) labels.push_back(describe ? describe(e) : join_ints(e));
    auto impl = std::make_shared<LabelledTable>(table_group(std::move(name), n, std::move(table)), std::move(labels));
    return FiniteGroup(impl);
}

FiniteGroup trivial_group() {
    return closure_group("trivial", {0}, {}, [](const ConcreteElem& a, const ConcreteElem&) { return a; });
}

FiniteGroup cyclic_group(unsigned n) {
    if (n == 0) throw Error(ErrorCode::InvalidArgument, "cyclic group of order 0");
    const int m = static_cast<int>(n);
    return closure_group(
        "cyclic:" + std::to_string(n), {0}, {{1 % m}},
        [m](const ConcreteElem& a, const ConcreteElem& b) { return ConcreteElem{(a[0] + b[0]) % m}; },
        [](const ConcreteElem& a) { return std::to_string(a[0]); });
}

FiniteGroup quaternion_group() {
    auto mul = [](const ConcreteElem& a, const ConcreteElem& b) { return mat_mul_mod(a, b, 3); };
    return closure_group("q8", {1, 0, 0, 1}, {{0, 2, 1, 0}, {1, 1, 1, 2}}, mul, mat_label);
}

FiniteGroup symmetric_group_s3() {
    return closure_group("s3", {0, 1, 2}, {{1, 0, 2}, {1, 2, 0}}, compose, join_ints);
}

FiniteGroup dihedral_group_d4() {
    return closure_group("d4", {0, 1, 2, 3}, {{1, 2, 3, 0}, {0, 3, 2, 1}}, compose, join_ints);
}

FiniteGroup sl2_f3() {
    auto mul = [](const ConcreteElem& a, const ConcreteElem& b) { return mat_mul_mod(a, b, 3); };
    return closure_group("sl2f3", {1, 0, 0, 1}, {{1, 1, 0, 1}, {1, 0, 1, 1}}, mul, mat_label);
}

FiniteGroup heisenberg_group(unsigned p) {
    if (!is_prime_u64(p)) throw Error(ErrorCode::InvalidArgument, "heisenberg group needs a prime, got " + std::to_string(p));
    const int q = static_cast<int>(p);
    // (a, b, c) <-> [[1,a,c],[0,1,b],[0,0,1]]
    auto mul = [q](const ConcreteElem& x, const ConcreteElem& y) {
        return ConcreteElem{(x[0] + y[0]) % q, (x[1] + y[1]) % q, mod(x[2] + y[2] + static_cast<long>(x[0]) * y[1], q)};
    };
    return closure_group("heisenberg:" + std::to_string(p), {0, 0, 0}, {{1, 0, 0}, {0, 1, 0}}, mul, join_ints);
}

FiniteGroup named_group(std::string_view spec) {
    if (spec == "trivial") return trivial_group();
    if (spec == "q8") return quaternion_group();
    if (spec == "s3") return symmetric_group_s3();
    if (spec == "d4") return dihedral_group_d4();
    if (spec == "sl2f3") return sl2_f3();
    if (spec.starts_with("cyclic:")) return cyclic_group(parse_param(spec, "cyclic:"));
    if (spec.starts_with("heisenberg:")) return heisenberg_group(parse_param(spec, "heisenberg:"));
    if (spec.starts_with("gl2fp:")) return gl2_group(parse_param(spec, "gl2fp:"));
    throw Error(ErrorCode::InvalidArgument, "unknown group '" + std::string(spec) + "'");
}

}  // namespace galdens
