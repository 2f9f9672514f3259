#pragma once

#include "galdens/class_function.hpp"
#include "galdens/group.hpp"

#include <cstdint>
#include <vector>

namespace galdens {

struct CharacterTableLimits {
    std::size_t max_classes = 30;
    std::uint64_t max_order = 2000;
    std::uint64_t max_prime = 100'000'000;
};

/// Irreducible characters of a small group with exact cyclotomic values.
///
/// Class-sum structure constants are reduced modulo the least prime
/// l = 1 (mod exponent) with l > 2*ceil(sqrt(|G|)); common eigenvectors of the
/// class-multiplication matrices over F_l give the central characters, the
/// degrees follow from the first orthogonality relation, and each value is
/// lifted to a sum of exponent-th roots of unity through its eigenvalue
/// multiplicities. The result is checked for exact orthogonality before it is
/// returned. Characters are ordered by degree, then lexicographically by values.
std::vector<ClassFunction> character_table_small(const FiniteGroup& g, const CharacterTableLimits& limits = {});

/// The prime used by character_table_small for a group of the given order and exponent.
std::uint64_t character_table_prime(std::uint64_t order, std::uint64_t exponent, std::uint64_t max_prime = 100'000'000);

}  // namespace galdens
