#pragma once

#include <cstdint>
#include <functional>
#include <memory>
#include <mutex>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace galdens {

using Elem = std::uint32_t;

/// Largest group order any constructor will accept.
inline constexpr std::uint64_t kMaxGroupOrder = 1'000'000;
/// Groups up to this order are stored as dense Cayley tables.
inline constexpr std::uint64_t kMaxTableOrder = 4096;

/// Partition of a group into conjugacy classes, ordered by minimal element index.
struct ConjClassPartition {
    std::vector<std::vector<Elem>> classes;  ///< each sorted ascending
    std::vector<Elem> representatives;       ///< minimal element of each class
    std::vector<std::uint32_t> class_of;     ///< element -> class index

    std::size_t size() const noexcept { return classes.size(); }
    std::uint64_t class_size(std::size_t i) const noexcept { return classes[i].size(); }
};

class FiniteGroup;

namespace detail {

class GroupImpl {
public:
    virtual ~GroupImpl() = default;
    virtual std::uint64_t order() const = 0;
    virtual Elem mul(Elem a, Elem b) const = 0;
    virtual Elem inverse(Elem a) const = 0;
    virtual Elem identity() const = 0;
    virtual std::string describe(Elem a) const { return "#" + std::to_string(a); }
    /// Override when the class structure is known without orbit enumeration.
    virtual ConjClassPartition build_classes(const FiniteGroup& self) const;

    std::string name;
    std::vector<Elem> generators;

private:
    friend class galdens::FiniteGroup;
    mutable std::once_flag classes_once_;
    mutable std::unique_ptr<ConjClassPartition> classes_;
};

}  // namespace detail

/// Immutable finite group with elements indexed 0..order()-1.
///
/// Cheap to copy; copies share the same underlying structure. Conjugacy
/// classes are computed on first use and cached (thread-safe).
class FiniteGroup {
public:
    explicit FiniteGroup(std::shared_ptr<const detail::GroupImpl> impl);

    std::uint64_t order() const { return impl_->order(); }
    Elem mul(Elem a, Elem b) const { return impl_->mul(a, b); }
    Elem inverse(Elem a) const { return impl_->inverse(a); }
    Elem identity() const { return impl_->identity(); }
    Elem conjugate(Elem x, Elem by) const { return mul(mul(by, x), inverse(by)); }
    Elem power(Elem x, std::uint64_t k) const;
    std::uint64_t element_order(Elem x) const;
    /// lcm of element orders.
    std::uint64_t exponent() const;

    std::span<const Elem> generators() const { return impl_->generators; }
    const std::string& name() const { return impl_->name; }
    std::string describe(Elem a) const { return impl_->describe(a); }

    const ConjClassPartition& classes() const;

    bool same_as(const FiniteGroup& other) const { return impl_ == other.impl_; }
    const detail::GroupImpl& impl() const { return *impl_; }

private:
    std::shared_ptr<const detail::GroupImpl> impl_;
};

/// Builds a group from a Cayley table (row-major, table[a*n+b] = a*b).
/// Validates closure, identity, inverses and associativity (Light's test over
/// a generating set); failures raise ErrorCode::InvalidGroup.
FiniteGroup table_group(std::string name, std::uint64_t order, std::vector<Elem> table);

/// Conjugacy classes by orbit enumeration under conjugation by the generators.
ConjClassPartition conjugacy_classes(const FiniteGroup& g);

/// Exhaustive axiom check; throws ErrorCode::InvalidGroup on failure.
void check_group_axioms(const FiniteGroup& g);

/// Greedy generating set: walk elements in index order, keep those outside the current span.
std::vector<Elem> greedy_generators(std::uint64_t order, Elem identity,
                                    const std::function<Elem(Elem, Elem)>& mul);

FiniteGroup direct_product(const FiniteGroup& g, const FiniteGroup& h);

/// For a direct product built by direct_product: component projections.
std::pair<Elem, Elem> split_product_element(const FiniteGroup& product, Elem x);
/// The two factors of a group built by direct_product, if it is one.
std::optional<std::pair<FiniteGroup, FiniteGroup>> product_factors(const FiniteGroup& g);

/// Homomorphism given by its values on every source element.
struct QuotientMap {
    FiniteGroup source;
    FiniteGroup target;
    std::vector<Elem> image;  ///< source element -> target element

    Elem operator()(Elem x) const { return image[x]; }
};

/// Checks the homomorphism law and surjectivity exhaustively.
void check_surjective_homomorphism(const QuotientMap& q);

/// Subgroup generated by the given elements, as a sorted element list.
std::vector<Elem> subgroup_closure(const FiniteGroup& g, std::span<const Elem> gens);
std::vector<Elem> center(const FiniteGroup& g);
std::vector<Elem> derived_subgroup(const FiniteGroup& g);
bool is_normal(const FiniteGroup& g, std::span<const Elem> subgroup);

/// G -> G/N for a normal subgroup N; the target is a table group of cosets
/// ordered by minimal coset element.
QuotientMap quotient_map(const FiniteGroup& g, std::span<const Elem> normal_subgroup, std::string target_name = "");

/// {(x, y) : qg(x) == qh(y)} inside g x h.
FiniteGroup fiber_product(const QuotientMap& qg, const QuotientMap& qh);
/// Injection of the fiber product into the ambient direct product.
Elem fiber_product_embedding(const FiniteGroup& fiber, Elem x);
/// Components (x, y) of a fiber-product element.
std::pair<Elem, Elem> fiber_components(const FiniteGroup& fiber, Elem x);

bool is_abelian(const FiniteGroup& g);
/// True iff the upper central series reaches the whole group.
bool is_nilpotent(const FiniteGroup& g);

}  // namespace galdens
