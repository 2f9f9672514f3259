#include "galdens/group.hpp"

#include "galdens/error.hpp"

#include <algorithm>
#include <deque>
#include <limits>
#include <numeric>
#include <optional>

namespace galdens {

namespace {

constexpr std::uint32_t kUnassigned = std::numeric_limits<std::uint32_t>::max();

class TableImpl final : public detail::GroupImpl {
public:
    TableImpl(std::uint64_t n, std::vector<Elem> table, Elem identity, std::vector<Elem> inverses)
        : n_(n), table_(std::move(table)), identity_(identity), inverses_(std::move(inverses)) {}

    std::uint64_t order() const override { return n_; }
    Elem mul(Elem a, Elem b) const override { return table_[static_cast<std::size_t>(a) * n_ + b]; }
    Elem inverse(Elem a) const override { return inverses_[a]; }
    Elem identity() const override { return identity_; }

private:
    std::uint64_t n_;
    std::vector<Elem> table_;
    Elem identity_;
    std::vector<Elem> inverses_;
};

class ProductImpl final : public detail::GroupImpl {
public:
    ProductImpl(FiniteGroup g, FiniteGroup h) : g_(std::move(g)), h_(std::move(h)), hn_(h_.order()) {}

    std::uint64_t order() const override { return g_.order() * hn_; }
    Elem mul(Elem a, Elem b) const override {
        return pack(g_.mul(first(a), first(b)), h_.mul(second(a), second(b)));
    }
    Elem inverse(Elem a) const override { return pack(g_.inverse(first(a)), h_.inverse(second(a))); }
    Elem identity() const override { return pack(g_.identity(), h_.identity()); }
    std::string describe(Elem a) const override {
        return "(" + g_.describe(first(a)) + ", " + h_.describe(second(a)) + ")";
    }

    ConjClassPartition build_classes(const FiniteGroup& /*self*/) const override {
        // Classes of a direct product are exactly the products of classes; the
        // lexicographic order on (class of g, class of h) is the order by minimal element.
        const auto& cg = g_.classes();
        const auto& ch = h_.classes();
        ConjClassPartition out;
        out.class_of.assign(order(), 0);
        for (std::size_t i = 0; i < cg.size(); ++i) {
            for (std::size_t j = 0; j < ch.size(); ++j) {
                std::vector<Elem> cls;
                cls.reserve(cg.classes[i].size() * ch.classes[j].size());
                for (Elem a : cg.classes[i])
                    for (Elem b : ch.classes[j]) cls.push_back(pack(a, b));
                const auto idx = static_cast<std::uint32_t>(out.classes.size());
                for (Elem x : cls) out.class_of[x] = idx;
                out.representatives.push_back(cls.front());
                out.classes.push_back(std::move(cls));
            }
        }
        return out;
    }

    Elem pack(Elem a, Elem b) const { return static_cast<Elem>(a * hn_ + b); }
    Elem first(Elem x) const { return static_cast<Elem>(x / hn_); }
    Elem second(Elem x) const { return static_cast<Elem>(x % hn_); }

    const FiniteGroup& left() const { return g_; }
    const FiniteGroup& right() const { return h_; }

private:
    FiniteGroup g_, h_;
    std::uint64_t hn_;
};

/// Subgroup given by an explicit sorted element list of a parent group.
class SubgroupImpl final : public detail::GroupImpl {
public:
    SubgroupImpl(FiniteGroup parent, std::vector<Elem> elements)
        : parent_(std::move(parent)), elements_(std::move(elements)), index_(parent_.order(), kUnassigned) {
        for (std::size_t i = 0; i < elements_.size(); ++i) index_[elements_[i]] = static_cast<Elem>(i);
    }

    std::uint64_t order() const override { return elements_.size(); }
    Elem mul(Elem a, Elem b) const override { return index_[parent_.mul(elements_[a], elements_[b])]; }
    Elem inverse(Elem a) const override { return index_[parent_.inverse(elements_[a])]; }
    Elem identity() const override { return index_[parent_.identity()]; }
    std::string describe(Elem a) const override { return parent_.describe(elements_[a]); }

    Elem to_parent(Elem a) const { return elements_[a]; }
    const FiniteGroup& parent() const { return parent_; }
    bool contains_parent(Elem x) const { return index_[x] != kUnassigned; }

private:
    FiniteGroup parent_;
    std::vector<Elem> elements_;
    std::vector<Elem> index_;
};

std::vector<Elem> closure_of(std::uint64_t order, Elem identity, std::span<const Elem> gens,
                             const std::function<Elem(Elem, Elem)>& mul) {
    std::vector<bool> seen(order, false);
    std::vector<Elem> out{identity};
    seen[identity] = true;
    for (std::size_t i = 0; i < out.size(); ++i) {
        for (Elem s : gens) {
            Elem y = mul(out[i], s);
            if (!seen[y]) {
                seen[y] = true;
                out.push_back(y);
            }
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace

ConjClassPartition detail::GroupImpl::build_classes(const FiniteGroup& self) const { return conjugacy_classes(self); }

FiniteGroup::FiniteGroup(std::shared_ptr<const detail::GroupImpl> impl) : impl_(std::move(impl)) {
    if (!impl_) throw Error(ErrorCode::InvalidGroup, "null group");
}

Elem FiniteGroup::power(Elem x, std::uint64_t k) const {
    Elem result = identity();
    Elem base = x;
    while (k) {
        if (k & 1) result = mul(result, base);
        base = mul(base, base);
        k >>= 1;
    }
    return result;
}

std::uint64_t FiniteGroup::element_order(Elem x) const {
    std::uint64_t k = 1;
    Elem y = x;
    const Elem e = identity();
    while (y != e) {
        y = mul(y, x);
        ++k;
    }
    return k;
}

std::uint64_t FiniteGroup::exponent() const {
    std::uint64_t e = 1;
    // element orders are constant on conjugacy classes
    for (Elem r : classes().representatives) e = std::lcm(e, element_order(r));
    return e;
}

const ConjClassPartition& FiniteGroup::classes() const {
    std::call_once(impl_->classes_once_, [this] {
        impl_->classes_ = std::make_unique<ConjClassPartition>(impl_->build_classes(*this));
    });
    return *impl_->classes_;
}

std::vector<Elem> greedy_generators(std::uint64_t order, Elem identity, const std::function<Elem(Elem, Elem)>& mul) {
    std::vector<Elem> gens;
    std::vector<bool> in_span(order, false);
    in_span[identity] = true;
    std::uint64_t covered = 1;
    for (Elem x = 0; x < order && covered < order; ++x) {
        if (in_span[x]) continue;
        gens.push_back(x);
        auto span = closure_of(order, identity, gens, mul);
        std::fill(in_span.begin(), in_span.end(), false);
        for (Elem y : span) in_span[y] = true;
        covered = span.size();
    }
    return gens;
}

FiniteGroup table_group(std::string name, std::uint64_t n, std::vector<Elem> table) {
    if (n == 0) throw Error(ErrorCode::InvalidGroup, "empty group");
    if (n > kMaxTableOrder) throw Error(ErrorCode::BoundExceeded, "table groups are limited to order " + std::to_string(kMaxTableOrder));
    if (table.size() != n * n) throw Error(ErrorCode::InvalidGroup, "Cayley table has wrong size");
    for (Elem v : table)
        if (v >= n) throw Error(ErrorCode::InvalidGroup, "Cayley table entry out of range");
    auto at = [&](Elem a, Elem b) { return table[static_cast<std::size_t>(a) * n + b]; };

    std::optional<Elem> identity;
    for (Elem e = 0; e < n && !identity; ++e) {
        bool ok = true;
        for (Elem x = 0; x < n && ok; ++x) ok = at(e, x) == x && at(x, e) == x;
        if (ok) identity = e;
    }
    if (!identity) throw Error(ErrorCode::InvalidGroup, "no two-sided identity");

    std::vector<Elem> inverses(n, kUnassigned);
    for (Elem a = 0; a < n; ++a) {
        for (Elem b = 0; b < n; ++b) {
            if (at(a, b) == *identity && at(b, a) == *identity) {
                inverses[a] = b;
                break;
            }
        }
        if (inverses[a] == kUnassigned) throw Error(ErrorCode::InvalidGroup, "element " + std::to_string(a) + " has no inverse");
    }

    auto impl = std::make_shared<TableImpl>(n, std::move(table), *identity, std::move(inverses));
    impl->name = std::move(name);
    impl->generators = greedy_generators(n, *identity, [&impl](Elem a, Elem b) { return impl->mul(a, b); });
    FiniteGroup g(impl);
    check_group_axioms(g);
    return g;
}

void check_group_axioms(const FiniteGroup& g) {
    const auto n = g.order();
    const Elem e = g.identity();
    for (Elem x = 0; x < n; ++x) {
        if (g.mul(e, x) != x || g.mul(x, e) != x) throw Error(ErrorCode::InvalidGroup, "identity is not neutral");
        const Elem xi = g.inverse(x);
        if (g.mul(x, xi) != e || g.mul(xi, x) != e)
            throw Error(ErrorCode::InvalidGroup, "inverse law fails at " + g.describe(x));
    }
    auto gens = g.generators();
    if (closure_of(n, e, gens, [&g](Elem a, Elem b) { return g.mul(a, b); }).size() != n)
        throw Error(ErrorCode::InvalidGroup, "generators do not generate the group");
    // Light's associativity test: (xy)s == x(ys) for all x, y and generators s.
    for (Elem s : gens)
        for (Elem x = 0; x < n; ++x)
            for (Elem y = 0; y < n; ++y)
                if (g.mul(g.mul(x, y), s) != g.mul(x, g.mul(y, s)))
                    throw Error(ErrorCode::InvalidGroup, "multiplication is not associative");
}

ConjClassPartition conjugacy_classes(const FiniteGroup& g) {
    const auto n = g.order();
    if (n > kMaxGroupOrder) throw Error(ErrorCode::BoundExceeded, "group order exceeds " + std::to_string(kMaxGroupOrder));
    std::vector<Elem> gens(g.generators().begin(), g.generators().end());
    std::vector<Elem> gens_inv;
    for (Elem s : gens) gens_inv.push_back(g.inverse(s));

    ConjClassPartition out;
    out.class_of.assign(n, kUnassigned);
    std::vector<Elem> queue;
    for (Elem x = 0; x < n; ++x) {
        if (out.class_of[x] != kUnassigned) continue;
        const auto idx = static_cast<std::uint32_t>(out.classes.size());
        std::vector<Elem> cls{x};
        out.class_of[x] = idx;
        for (std::size_t i = 0; i < cls.size(); ++i) {
            for (std::size_t k = 0; k < gens.size(); ++k) {
                Elem y = g.mul(g.mul(gens[k], cls[i]), gens_inv[k]);
                if (out.class_of[y] == kUnassigned) {
                    out.class_of[y] = idx;
                    cls.push_back(y);
                } else if (out.class_of[y] != idx) {
                    throw Error(ErrorCode::InvalidGroup, "conjugation orbits overlap");
                }
            }
        }
        std::sort(cls.begin(), cls.end());
        out.representatives.push_back(cls.front());
        out.classes.push_back(std::move(cls));
    }
    return out;
}

FiniteGroup direct_product(const FiniteGroup& g, const FiniteGroup& h) {
    const auto n = g.order() * h.order();
    if (n > kMaxGroupOrder)
        throw Error(ErrorCode::BoundExceeded, "direct product of order " + std::to_string(n) + " exceeds " +
                                                  std::to_string(kMaxGroupOrder));
    auto impl = std::make_shared<ProductImpl>(g, h);
    impl->name = g.name() + " x " + h.name();
    for (Elem s : g.generators()) impl->generators.push_back(impl->pack(s, h.identity()));
    for (Elem s : h.generators()) impl->generators.push_back(impl->pack(g.identity(), s));
    if (impl->generators.empty()) impl->generators.push_back(impl->identity());
    return FiniteGroup(impl);
}

std::pair<Elem, Elem> split_product_element(const FiniteGroup& product, Elem x) {
    const auto* p = dynamic_cast<const ProductImpl*>(&product.impl());
    if (!p) throw Error(ErrorCode::InvalidArgument, product.name() + " is not a direct product");
    return {p->first(x), p->second(x)};
}

void check_surjective_homomorphism(const QuotientMap& q) {
    const auto& s = q.source;
    const auto& t = q.target;
    if (q.image.size() != s.order()) throw Error(ErrorCode::InvalidArgument, "quotient map is not total");
    for (Elem v : q.image)
        if (v >= t.order()) throw Error(ErrorCode::InvalidArgument, "quotient map value out of range");
    for (Elem x = 0; x < s.order(); ++x)
        for (Elem y : s.generators())
            if (q(s.mul(x, y)) != t.mul(q(x), q(y)))
                throw Error(ErrorCode::InvalidArgument, "map is not a homomorphism");
    std::vector<bool> hit(t.order(), false);
    for (Elem v : q.image) hit[v] = true;
    if (std::find(hit.begin(), hit.end(), false) != hit.end())
        throw Error(ErrorCode::NotSurjective, "map onto " + t.name() + " is not surjective");
}

std::vector<Elem> subgroup_closure(const FiniteGroup& g, std::span<const Elem> gens) {
    return closure_of(g.order(), g.identity(), gens, [&g](Elem a, Elem b) { return g.mul(a, b); });
}

std::vector<Elem> center(const FiniteGroup& g) {
    std::vector<Elem> out;
    for (Elem x = 0; x < g.order(); ++x) {
        bool central = true;
        for (Elem s : g.generators()) central = central && g.mul(x, s) == g.mul(s, x);
        if (central) out.push_back(x);
    }
    return out;
}

std::vector<Elem> derived_subgroup(const FiniteGroup& g) {
    std::vector<Elem> comms;
    std::vector<bool> seen(g.order(), false);
    for (Elem x = 0; x < g.order(); ++x) {
        for (Elem y = 0; y < g.order(); ++y) {
            Elem c = g.mul(g.mul(g.inverse(x), g.inverse(y)), g.mul(x, y));
            if (!seen[c]) {
                seen[c] = true;
                comms.push_back(c);
            }
        }
    }
    return subgroup_closure(g, comms);
}

bool is_normal(const FiniteGroup& g, std::span<const Elem> subgroup) {
    std::vector<bool> member(g.order(), false);
    for (Elem x : subgroup) member[x] = true;
    for (Elem x : subgroup)
        for (Elem s : g.generators())
            if (!member[g.conjugate(x, s)]) return false;
    return true;
}

QuotientMap quotient_map(const FiniteGroup& g, std::span<const Elem> normal_subgroup, std::string target_name) {
    if (!is_normal(g, normal_subgroup)) throw Error(ErrorCode::InvalidArgument, "subgroup is not normal");
    const auto n = g.order();
    std::vector<Elem> coset_of(n, kUnassigned);
    std::vector<Elem> reps;
    for (Elem x = 0; x < n; ++x) {
        if (coset_of[x] != kUnassigned) continue;
        const auto idx = static_cast<Elem>(reps.size());
        reps.push_back(x);
        for (Elem k : normal_subgroup) coset_of[g.mul(x, k)] = idx;
    }
    const auto m = reps.size();
    std::vector<Elem> table(m * m);
    for (std::size_t a = 0; a < m; ++a)
        for (std::size_t b = 0; b < m; ++b) table[a * m + b] = coset_of[g.mul(reps[a], reps[b])];
    if (target_name.empty()) target_name = g.name() + "/N" + std::to_string(normal_subgroup.size());
    QuotientMap q{g, table_group(std::move(target_name), m, std::move(table)), std::move(coset_of)};
    return q;
}

namespace {

bool same_target(const FiniteGroup& a, const FiniteGroup& b) {
    if (a.same_as(b)) return true;
    if (a.order() != b.order() || a.order() > kMaxTableOrder) return false;
    for (Elem x = 0; x < a.order(); ++x)
        for (Elem y = 0; y < a.order(); ++y)
            if (a.mul(x, y) != b.mul(x, y)) return false;
    return true;
}

}  // namespace

FiniteGroup fiber_product(const QuotientMap& qg, const QuotientMap& qh) {
    if (!same_target(qg.target, qh.target))
        throw Error(ErrorCode::MismatchedTargets, qg.target.name() + " vs " + qh.target.name());
    check_surjective_homomorphism(qg);
    check_surjective_homomorphism(qh);
    FiniteGroup ambient = direct_product(qg.source, qh.source);
    const auto* prod = dynamic_cast<const ProductImpl*>(&ambient.impl());

    std::vector<std::vector<Elem>> fibre(qh.target.order());
    for (Elem y = 0; y < qh.source.order(); ++y) fibre[qh(y)].push_back(y);
    std::vector<Elem> elements;
    for (Elem x = 0; x < qg.source.order(); ++x)
        for (Elem y : fibre[qg(x)]) elements.push_back(prod->pack(x, y));

    auto impl = std::make_shared<SubgroupImpl>(ambient, std::move(elements));
    impl->name = qg.source.name() + " x_{" + qg.target.name() + "} " + qh.source.name();
    impl->generators = greedy_generators(impl->order(), impl->identity(), [&impl](Elem a, Elem b) { return impl->mul(a, b); });
    return FiniteGroup(impl);
}

Elem fiber_product_embedding(const FiniteGroup& fiber, Elem x) {
    const auto* sub = dynamic_cast<const SubgroupImpl*>(&fiber.impl());
    if (!sub) throw Error(ErrorCode::InvalidArgument, fiber.name() + " is not a fiber product");
    return sub->to_parent(x);
}

std::pair<Elem, Elem> fiber_components(const FiniteGroup& fiber, Elem x) {
    const auto* sub = dynamic_cast<const SubgroupImpl*>(&fiber.impl());
    if (!sub) throw Error(ErrorCode::InvalidArgument, fiber.name() + " is not a fiber product");
    return split_product_element(sub->parent(), sub->to_parent(x));
}

std::optional<std::pair<FiniteGroup, FiniteGroup>> product_factors(const FiniteGroup& g) {
    const auto* p = dynamic_cast<const ProductImpl*>(&g.impl());
    if (!p) return std::nullopt;
    return std::make_pair(p->left(), p->right());
}

bool is_abelian(const FiniteGroup& g) {
    auto gens = g.generators();
    for (Elem a : gens)
        for (Elem b : gens)
            if (g.mul(a, b) != g.mul(b, a)) return false;
    return true;
}

bool is_nilpotent(const FiniteGroup& g) {
    const auto n = g.order();
    std::vector<bool> in_z(n, false);
    in_z[g.identity()] = true;
    std::uint64_t size = 1;
    while (size < n) {
        // next term: x with [x, s] in the current term for every generator s
        std::vector<bool> next(n, false);
        std::uint64_t next_size = 0;
        for (Elem x = 0; x < n; ++x) {
            bool ok = true;
            for (Elem s : g.generators()) {
                Elem c = g.mul(g.mul(g.inverse(x), g.inverse(s)), g.mul(x, s));
                if (!in_z[c]) {
                    ok = false;
                    break;
                }
            }
            if (ok) {
                next[x] = true;
                ++next_size;
            }
        }
        if (next_size == size) return false;
        in_z = std::move(next);
        size = next_size;
    }
    return true;
}

}  // namespace galdens
