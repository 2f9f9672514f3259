#pragma once

#include "galdens/class_function.hpp"
#include "galdens/group.hpp"

#include <string>
#include <vector>

namespace galdens {

/// Irreducible 2-dimensional characters whose values are all rational integers.
std::vector<ClassFunction> integer_trace_degree2_characters(const FiniteGroup& g);

/// Two copies of the integer-trace 2-dimensional character of SL2(F3), pulled
/// back to the fiber product over a common quotient.
struct TetrahedralPair {
    FiniteGroup base;       ///< SL2(F3)
    ClassFunction chi;      ///< the integer-trace character on the base
    QuotientMap to_common;  ///< SL2(F3) -> common quotient
    FiniteGroup fiber;
    ClassFunction chi1, chi2;
    std::size_t integer_trace_count;  ///< how many integer-trace 2-dim characters were found
};

/// over = "c3" (quotient by the derived subgroup Q8) or "a4" (quotient by the center).
TetrahedralPair tetrahedral_pair(std::string_view over = "c3");

/// A nilpotent group with a degree-k irreducible character vanishing off the
/// center, times C2; the pair (chi (x) 1, chi (x) sign) realizes the twist
/// density 1 - 1/(2k^2). Available for k = 2 (Q8) and k = 3 (Heisenberg mod 3).
struct SerrePair {
    FiniteGroup group;
    ClassFunction rho, twisted;
};
SerrePair serre_pair(unsigned k);

}  // namespace galdens
