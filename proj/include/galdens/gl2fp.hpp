#pragma once

#include "galdens/class_function.hpp"
#include "galdens/group.hpp"
#include "galdens/rational.hpp"

#include <array>
#include <span>
#include <string>
#include <vector>

namespace galdens {

/// Largest prime for which GL2(F_p) is enumerated element by element.
inline constexpr unsigned kMaxEnumeratedPrime = 31;

/// Invertible 2x2 matrix [[a, b], [c, d]] over F_p, entries reduced to [0, p).
struct GL2Element {
    unsigned p;
    std::array<unsigned, 4> m;  ///< a, b, c, d

    static GL2Element make(unsigned p, long a, long b, long c, long d);
    unsigned trace() const { return (m[0] + m[3]) % p; }
    unsigned det() const;
    std::string to_string() const;
};

enum class ClassKind { Central, NonSemisimple, SplitRegular, NonsplitRegular };

std::string_view to_string(ClassKind k);

/// Conjugacy-class type with its parameters: the eigenvalue for Central and
/// NonSemisimple, the sorted eigenvalue pair for SplitRegular, and
/// (trace, det) for NonsplitRegular.
struct ClassType {
    ClassKind kind;
    std::vector<unsigned> params;

    friend bool operator==(const ClassType&, const ClassType&) = default;
};

/// Classification by scalar test and the discriminant tr^2 - 4 det (p odd).
ClassType classify(const GL2Element& g);

/// GL2(F_p) for an odd prime p <= kMaxEnumeratedPrime; cached per p.
FiniteGroup gl2_group(unsigned p);
/// Matrix of an element of a group returned by gl2_group.
GL2Element gl2_element(const FiniteGroup& g, Elem x);
/// The prime of a group returned by gl2_group.
unsigned gl2_prime(const FiniteGroup& g);

/// Value of the p-dimensional Steinberg character: p, 0, 1, -1 on the four class kinds.
int steinberg_value(ClassKind kind, unsigned p);

/// Steinberg character of GL2(F_p) as a class function on gl2_group(p).
ClassFunction steinberg_character(unsigned p);

struct ClassTypeFractions {
    Rational central, non_semisimple, split_regular, nonsplit_regular;

    Rational sum() const { return central + non_semisimple + split_regular + nonsplit_regular; }
    const Rational& operator[](ClassKind k) const;
};

/// Closed-form proportions of the four class kinds (any odd prime).
ClassTypeFractions class_type_fractions(unsigned p);

struct ClassTypeCounts {
    std::uint64_t central = 0, non_semisimple = 0, split_regular = 0, nonsplit_regular = 0;
    std::uint64_t total() const { return central + non_semisimple + split_regular + nonsplit_regular; }
};

/// Counts by walking all p^4 matrices; independent of the closed forms.
ClassTypeCounts class_type_counts_by_enumeration(unsigned p);

struct Gl2Character {
    unsigned p;
    ClassFunction chi;
};

/// Class function on the direct product of the factors' groups whose value on
/// a tuple is the product of componentwise values. Primes must be pairwise distinct.
ClassFunction product_character(std::span<const Gl2Character> factors);

/// 1 - prod_j (1 - zero_fraction(x_j)); valid for any number of factors.
Rational product_zero_fraction(std::span<const Gl2Character> factors);

}  // namespace galdens
