#pragma once

#include "galdens/group.hpp"

#include <functional>
#include <string>
#include <string_view>
#include <vector>

namespace galdens {

/// Closure of concrete generators under a multiplication, returned as a
/// Cayley-table group. Elements are numbered in breadth-first order from the
/// identity, so the identity is element 0.
using ConcreteElem = std::vector<int>;
FiniteGroup closure_group(std::string name, const ConcreteElem& identity, const std::vector<ConcreteElem>& generators,
                          const std::function<ConcreteElem(const ConcreteElem&, const ConcreteElem&)>& mul,
                          const std::function<std::string(const ConcreteElem&)>& describe = {});

FiniteGroup trivial_group();
FiniteGroup cyclic_group(unsigned n);
FiniteGroup quaternion_group();
FiniteGroup symmetric_group_s3();
FiniteGroup dihedral_group_d4();
/// Binary tetrahedral group, realized as SL2(F3).
FiniteGroup sl2_f3();
/// Upper unitriangular 3x3 matrices over F_p.
FiniteGroup heisenberg_group(unsigned p);

/// Resolves "trivial", "cyclic:n", "q8", "s3", "d4", "sl2f3", "gl2fp:p", "heisenberg:p".
FiniteGroup named_group(std::string_view spec);

}  // namespace galdens
