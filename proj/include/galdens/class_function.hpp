#pragma once

#include "galdens/cyclotomic.hpp"
#include "galdens/group.hpp"
#include "galdens/rational.hpp"

#include <functional>
#include <vector>

namespace galdens {

/// Exact function on a group that is constant on conjugacy classes; values
/// are indexed like group.classes().
class ClassFunction {
public:
    ClassFunction(FiniteGroup group, std::vector<CycValue> values);

    /// Evaluates f on every class representative.
    static ClassFunction from_elements(const FiniteGroup& group, const std::function<CycValue(Elem)>& f);
    static ClassFunction constant(const FiniteGroup& group, const CycValue& v);

    const FiniteGroup& group() const noexcept { return group_; }
    const std::vector<CycValue>& values() const noexcept { return values_; }
    const CycValue& on_class(std::size_t c) const { return values_[c]; }
    const CycValue& at(Elem x) const { return values_[group_.classes().class_of[x]]; }

    /// Value at the identity; the degree for a character.
    const CycValue& degree() const { return at(group_.identity()); }

    friend bool operator==(const ClassFunction& a, const ClassFunction& b);

private:
    FiniteGroup group_;
    std::vector<CycValue> values_;
};

/// Fraction of elements g with x(g) == y(g), computed class by class.
Rational matching_fraction(const ClassFunction& x, const ClassFunction& y);
/// Same quantity by walking every element; the test oracle for matching_fraction.
Rational matching_fraction_elementwise(const ClassFunction& x, const ClassFunction& y);

/// Fraction of elements where x vanishes.
Rational zero_fraction(const ClassFunction& x);

/// <x, y> = (1/|G|) sum_g x(g) conj(y(g)).
CycValue inner_product(const ClassFunction& x, const ClassFunction& y);

/// x (x) y on direct_product(x.group(), y.group()).
ClassFunction outer_product(const ClassFunction& x, const ClassFunction& y);

/// Pulls a class function of one factor back to a fiber product
/// (factor 0 = left source, 1 = right source).
ClassFunction pullback_to_fiber(const FiniteGroup& fiber, const ClassFunction& x, int factor);

}  // namespace galdens
