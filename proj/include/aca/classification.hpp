#pragma once

#include <array>
#include <stdexcept>
#include <string>

#include "aca/enumeration.hpp"
#include "aca/state_set.hpp"

namespace aca {

enum class RuleCategory { trivial_dynamics, invertible, exceptional };

/// Shape of a periodic-state set: a distinguished small set, the whole space,
/// or an avoided-word set with an optional extra uniform state.
enum class PeriodicForm {
    zeros_only,       // { all-zeros }
    uniform_pair,     // { all-zeros, all-ones }
    full_space,
    named,            // N_X
    named_plus_ones,  // N_X plus the all-ones state
    named_plus_zeros, // N_X plus the all-zeros state
};

enum class GroupKind {
    trivial,
    elementary_abelian_2n,
    psl2_order,
    rule150_family,
    rule105_family,
    sym,
    alt,
    lucas_group,
    subdirect_composite,
    unidentified,
};

inline std::string group_kind_str(GroupKind k) {
    switch (k) {
        case GroupKind::trivial: return "trivial";
        case GroupKind::elementary_abelian_2n: return "elementary-abelian-2^n";
        case GroupKind::psl2_order: return "PSL_n(2)-order";
        case GroupKind::rule150_family: return "rule150-family";
        case GroupKind::rule105_family: return "rule105-family";
        case GroupKind::sym: return "Sym";
        case GroupKind::alt: return "Alt";
        case GroupKind::lucas_group: return "LucasGroup";
        case GroupKind::subdirect_composite: return "subdirect-composite";
        case GroupKind::unidentified: return "unidentified";
    }
    throw std::logic_error("unreachable");
}

/// Classification row for one representative rule: which periodic set it has,
/// its adjacent-pair order, and which group family its dynamics group belongs
/// to. Cells are recomputed by the verification suites; this table is the
/// expected shape, not a cache.
struct Classification {
    int rule;
    RuleCategory category;
    PeriodicForm form;
    AvoidName named;      // meaningful for the named forms only
    int coxeter_label;    // 1 when the group is trivial
    GroupKind group_kind;
};

inline const std::array<Classification, 41>& classification_table() {
    using F = PeriodicForm;
    using N = AvoidName;
    using G = GroupKind;
    using C = RuleCategory;
    static const std::array<Classification, 41> table = {{
        {0, C::trivial_dynamics, F::zeros_only, N::NA, 1, G::trivial},
        {8, C::trivial_dynamics, F::zeros_only, N::NA, 1, G::trivial},
        {32, C::trivial_dynamics, F::zeros_only, N::NA, 1, G::trivial},
        {40, C::trivial_dynamics, F::zeros_only, N::NA, 1, G::trivial},
        {128, C::trivial_dynamics, F::uniform_pair, N::NA, 1, G::trivial},
        {136, C::trivial_dynamics, F::uniform_pair, N::NA, 1, G::trivial},
        {160, C::trivial_dynamics, F::uniform_pair, N::NA, 1, G::trivial},
        {168, C::trivial_dynamics, F::uniform_pair, N::NA, 1, G::trivial},
        {152, C::trivial_dynamics, F::uniform_pair, N::NA, 1, G::trivial},
        {184, C::trivial_dynamics, F::uniform_pair, N::NA, 1, G::trivial},
        {4, C::trivial_dynamics, F::named, N::NA, 1, G::trivial},
        {12, C::trivial_dynamics, F::named, N::NA, 1, G::trivial},
        {132, C::trivial_dynamics, F::named_plus_ones, N::NA, 1, G::trivial},
        {140, C::trivial_dynamics, F::named_plus_ones, N::NA, 1, G::trivial},
        {5, C::trivial_dynamics, F::named, N::NAB, 1, G::trivial},
        {13, C::trivial_dynamics, F::named, N::NAB, 1, G::trivial},
        {133, C::trivial_dynamics, F::named_plus_ones, N::NAB, 1, G::trivial},
        {141, C::trivial_dynamics, F::named_plus_ones, N::NAB, 1, G::trivial},
        {164, C::trivial_dynamics, F::named_plus_ones, N::NAE, 1, G::trivial},
        {172, C::trivial_dynamics, F::named_plus_ones, N::NAE, 1, G::trivial},
        {77, C::trivial_dynamics, F::named, N::NBC, 1, G::trivial},
        {76, C::trivial_dynamics, F::named, N::NC, 1, G::trivial},
        {72, C::trivial_dynamics, F::named, N::NCD, 1, G::trivial},
        {200, C::trivial_dynamics, F::named, N::ND, 1, G::trivial},
        {232, C::trivial_dynamics, F::named, N::NDE, 1, G::trivial},
        {204, C::trivial_dynamics, F::full_space, N::NA, 1, G::trivial},
        {51, C::invertible, F::full_space, N::NA, 2, G::elementary_abelian_2n},
        {60, C::invertible, F::full_space, N::NA, 4, G::psl2_order},
        {150, C::invertible, F::full_space, N::NA, 3, G::rule150_family},
        {105, C::invertible, F::full_space, N::NA, 3, G::rule105_family},
        {156, C::invertible, F::full_space, N::NA, 6, G::subdirect_composite},
        {201, C::invertible, F::full_space, N::NA, 6, G::subdirect_composite},
        {57, C::invertible, F::full_space, N::NA, 12, G::alt},
        {54, C::invertible, F::full_space, N::NA, 12, G::alt},
        {28, C::exceptional, F::named_plus_zeros, N::NBCF, 2, G::elementary_abelian_2n},
        {29, C::exceptional, F::named, N::NBCF, 2, G::elementary_abelian_2n},
        {1, C::exceptional, F::named, N::NA, 6, G::lucas_group},
        {9, C::exceptional, F::named, N::NA, 6, G::lucas_group},
        {129, C::exceptional, F::named_plus_ones, N::NA, 6, G::lucas_group},
        {137, C::exceptional, F::named_plus_ones, N::NA, 6, G::lucas_group},
        {73, C::exceptional, F::named, N::NC, 6, G::subdirect_composite},
    }};
    return table;
}

inline const Classification& classification_of(int rule) {
    for (const Classification& c : classification_table())
        if (c.rule == rule) return c;
    throw std::invalid_argument("rule is not one of the 41 representatives");
}

inline StateSet periodic_set_of(const Classification& c, int n) {
    switch (c.form) {
        case PeriodicForm::zeros_only: {
            StateSet s(n);
            s.insert(all_zeros(n).bits);
            return s;
        }
        case PeriodicForm::uniform_pair: {
            StateSet s(n);
            s.insert(all_zeros(n).bits);
            s.insert(all_ones(n).bits);
            return s;
        }
        case PeriodicForm::full_space:
            return StateSet::all(n);
        case PeriodicForm::named:
            return avoid_set(n, avoid_letters(c.named));
        case PeriodicForm::named_plus_ones: {
            StateSet s = avoid_set(n, avoid_letters(c.named));
            s.insert(all_ones(n).bits);
            return s;
        }
        case PeriodicForm::named_plus_zeros: {
            StateSet s = avoid_set(n, avoid_letters(c.named));
            s.insert(all_zeros(n).bits);
            return s;
        }
    }
    throw std::logic_error("unreachable");
}

inline std::string periodic_form_str(const Classification& c) {
    switch (c.form) {
        case PeriodicForm::zeros_only: return "{zeros}";
        case PeriodicForm::uniform_pair: return "{zeros,ones}";
        case PeriodicForm::full_space: return "F_2^n";
        case PeriodicForm::named: return avoid_name_str(c.named);
        case PeriodicForm::named_plus_ones: return avoid_name_str(c.named) + "+{ones}";
        case PeriodicForm::named_plus_zeros: return avoid_name_str(c.named) + "+{zeros}";
    }
    throw std::logic_error("unreachable");
}

/// Closed-form orbit count rendered the way the summary tables print it.
inline std::string orbit_count_formula_str(const Classification& c) {
    switch (c.rule) {
        case 0: case 8: case 32: case 40: return "1";
        case 128: case 136: case 160: case 168: case 152: case 184: return "2";
        case 4: case 12: return "|N_A|";
        case 132: case 140: return "|N_A|+1";
        case 5: case 13: return "|N_AB|";
        case 133: case 141: return "|N_AB|+1";
        case 164: case 172: return "|N_AE|+1";
        case 77: return "|N_BC|";
        case 76: return "|N_C|";
        case 72: return "|N_CD|";
        case 200: return "|N_D|";
        case 232: return "|N_DE|";
        case 204: return "2^n";
        case 51: case 57: return "1";
        case 60: case 54: return "2";
        case 150: return "floor(n/2)+2";
        case 105: return "o_105(n)";
        case 156: return "Luc_n+1";
        case 201: return "|N_D|";
        case 28: return "|N_AB|+1";
        case 29: return "|N_AB|";
        case 1: case 9: return "1";
        case 129: case 137: return "2";
        case 73: return "|N_CD|";
        default: throw std::invalid_argument("not a representative rule");
    }
}

inline std::string group_formula_str(const Classification& c) {
    switch (c.group_kind) {
        case GroupKind::trivial: return "1";
        case GroupKind::elementary_abelian_2n: return c.rule == 28 || c.rule == 29 ? "Z_2^n (trivial at n=4)" : "Z_2^n";
        case GroupKind::psl2_order: return "PSL_n(Z_2)";
        case GroupKind::rule150_family: return "order 2^(n-1)n! (odd n) / 2^(n-2)n! (even n)";
        case GroupKind::rule105_family: return "order 2^(n-1)n! (4 not| n) / 2^(n-2)n! (4|n)";
        case GroupKind::alt: return c.rule == 57 ? "Alt(2^n), conjectured" : "Alt(2^n-1), conjectured";
        case GroupKind::lucas_group: return "LG_n";
        case GroupKind::subdirect_composite:
            return c.rule == 156 ? "subdirect product of Sym factors" : "subdirect product of LG_n and FG_m";
        default: return group_kind_str(c.group_kind);
    }
}

}  // namespace aca
