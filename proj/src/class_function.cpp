#include "galdens/class_function.hpp"

#include "galdens/error.hpp"

namespace galdens {

ClassFunction::ClassFunction(FiniteGroup group, std::vector<CycValue> values)
    : group_(std::move(group)), values_(std::move(values)) {
    if (values_.size() != group_.classes().size())
        throw Error(ErrorCode::InvalidArgument, "class function needs one value per conjugacy class of " + group_.name());
}

ClassFunction ClassFunction::from_elements(const FiniteGroup& group, const std::function<CycValue(Elem)>& f) {
    std::vector<CycValue> values;
    values.reserve(group.classes().size());
    for (Elem r : group.classes().representatives) values.push_back(f(r));
    return ClassFunction(group, std::move(values));
}

ClassFunction ClassFunction::constant(const FiniteGroup& group, const CycValue& v) {
    return ClassFunction(group, std::vector<CycValue>(group.classes().size(), v));
}

bool operator==(const ClassFunction& a, const ClassFunction& b) {
    return a.group_.same_as(b.group_) && a.values_ == b.values_;
}

namespace {

void require_same_group(const ClassFunction& x, const ClassFunction& y) {
    if (!x.group().same_as(y.group()))
        throw Error(ErrorCode::GroupMismatch, x.group().name() + " vs " + y.group().name());
}

}  // namespace

Rational matching_fraction(const ClassFunction& x, const ClassFunction& y) {
    require_same_group(x, y);
    const auto& cls = x.group().classes();
    BigInt count = 0;
    for (std::size_t c = 0; c < cls.size(); ++c)
        if (x.on_class(c) == y.on_class(c)) count += cls.class_size(c);
    Rational r(count, BigInt(x.group().order()));
    r.canonicalize();
    return r;
}

Rational matching_fraction_elementwise(const ClassFunction& x, const ClassFunction& y) {
    require_same_group(x, y);
    const auto n = x.group().order();
    std::uint64_t count = 0;
    for (Elem g = 0; g < n; ++g)
        if (x.at(g) == y.at(g)) ++count;
    Rational r{BigInt(count), BigInt(n)};
    r.canonicalize();
    return r;
}

Rational zero_fraction(const ClassFunction& x) {
    const auto& cls = x.group().classes();
    BigInt count = 0;
    for (std::size_t c = 0; c < cls.size(); ++c)
        if (x.on_class(c).is_zero()) count += cls.class_size(c);
    Rational r(count, BigInt(x.group().order()));
    r.canonicalize();
    return r;
}

CycValue inner_product(const ClassFunction& x, const ClassFunction& y) {
    require_same_group(x, y);
    const auto& cls = x.group().classes();
    CycValue sum(1);
    for (std::size_t c = 0; c < cls.size(); ++c)
        sum += (x.on_class(c) * y.on_class(c).conj()).scaled(Rational(BigInt(cls.class_size(c))));
    return sum.scaled(Rational(1, BigInt(x.group().order())));
}

ClassFunction outer_product(const ClassFunction& x, const ClassFunction& y) {
    FiniteGroup product = direct_product(x.group(), y.group());
    const std::size_t ny = y.group().classes().size();
    std::vector<CycValue> values;
    values.reserve(x.values().size() * ny);
    // product classes come in lexicographic (class of x, class of y) order
    for (const auto& a : x.values())
        for (const auto& b : y.values()) values.push_back(a * b);
    return ClassFunction(product, std::move(values));
}

ClassFunction pullback_to_fiber(const FiniteGroup& fiber, const ClassFunction& x, int factor) {
    if (factor != 0 && factor != 1) throw Error(ErrorCode::InvalidArgument, "factor must be 0 or 1");
    return ClassFunction::from_elements(fiber, [&](Elem e) {
        auto [a, b] = fiber_components(fiber, e);
        return x.at(factor == 0 ? a : b);
    });
}

}  // namespace galdens
