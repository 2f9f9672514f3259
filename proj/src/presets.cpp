#include "galdens/presets.hpp"

#include "galdens/character_table.hpp"
#include "galdens/error.hpp"
#include "galdens/named_groups.hpp"

#include <optional>

namespace galdens {

std::vector<ClassFunction> integer_trace_degree2_characters(const FiniteGroup& g) {
    std::vector<ClassFunction> out;
    for (auto& chi : character_table_small(g)) {
        if (chi.degree() != CycValue::integer(2)) continue;
        bool integral = true;
        for (const auto& v : chi.values())
            integral = integral && v.is_rational() && mpz_cmp_ui(v.to_rational().get_den_mpz_t(), 1) == 0;
        if (integral) out.push_back(std::move(chi));
    }
    return out;
}

TetrahedralPair tetrahedral_pair(std::string_view over) {
    FiniteGroup base = sl2_f3();
    auto chars = integer_trace_degree2_characters(base);
    if (chars.empty()) throw Error(ErrorCode::InvalidGroup, "SL2(F3) has no integer-trace 2-dimensional character");
    std::vector<Elem> kernel;
    std::string target;
    if (over == "c3") {
        kernel = derived_subgroup(base);
        target = "c3";
    } else if (over == "a4") {
        kernel = center(base);
        target = "a4";
    } else {
        throw Error(ErrorCode::InvalidArgument, "unknown common quotient '" + std::string(over) + "' (use c3 or a4)");
    }
    QuotientMap q = quotient_map(base, kernel, target);
    FiniteGroup fiber = fiber_product(q, q);
    ClassFunction chi = chars.front();
    ClassFunction chi1 = pullback_to_fiber(fiber, chi, 0);
    ClassFunction chi2 = pullback_to_fiber(fiber, chi, 1);
    return TetrahedralPair{base, chi, q, fiber, chi1, chi2, chars.size()};
}

SerrePair serre_pair(unsigned k) {
    FiniteGroup g = [&] {
        if (k == 2) return quaternion_group();
        if (k == 3) return heisenberg_group(3);
        throw Error(ErrorCode::InvalidArgument, "group realization available for k = 2, 3 only");
    }();
    std::optional<ClassFunction> rho;
    for (auto& chi : character_table_small(g))
        if (chi.degree() == CycValue::integer(k)) {
            rho = chi;
            break;
        }
    if (!rho) throw Error(ErrorCode::InvalidGroup, "no degree-" + std::to_string(k) + " character in " + g.name());
    FiniteGroup c2 = cyclic_group(2);
    ClassFunction trivial = ClassFunction::constant(c2, CycValue::integer(1));
    ClassFunction sign = ClassFunction::from_elements(
        c2, [&](Elem x) { return CycValue::integer(x == c2.identity() ? 1 : -1); });
    ClassFunction a = outer_product(*rho, trivial);
    ClassFunction b = outer_product(*rho, sign);
    // both live on distinct direct_product objects; rebuild b on a's group
    ClassFunction b_on_a(a.group(), b.values());
    return SerrePair{a.group(), a, b_on_a};
}

}  // namespace galdens
