#pragma once

#include <array>
#include <map>
#include <mutex>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "aca/bigint.hpp"
#include "aca/rules.hpp"
#include "aca/state_set.hpp"

namespace aca {

/// Fib_1 = Fib_2 = 1, Fib_n = Fib_{n-1} + Fib_{n-2}.
inline BigInt fibonacci(int n) {
    if (n < 1) throw std::invalid_argument("fibonacci is defined for n >= 1");
    BigInt a = 1, b = 1;
    for (int i = 3; i <= n; ++i) {
        BigInt c = a + b;
        a = std::move(b);
        b = std::move(c);
    }
    return n == 1 ? a : b;
}

/// Luc_1 = 1, Luc_2 = 3, Luc_n = Luc_{n-1} + Luc_{n-2}.
inline BigInt lucas(int n) {
    if (n < 1) throw std::invalid_argument("lucas is defined for n >= 1");
    BigInt a = 1, b = 3;
    for (int i = 3; i <= n; ++i) {
        BigInt c = a + b;
        a = std::move(b);
        b = std::move(c);
    }
    return n == 1 ? a : b;
}

enum class AvoidName { NA, NAB, NAE, NBCF, NBC, NC, NCD, ND, NDE };

inline constexpr std::array<AvoidName, 9> all_avoid_names = {
    AvoidName::NA, AvoidName::NAB, AvoidName::NAE, AvoidName::NBCF, AvoidName::NBC,
    AvoidName::NC, AvoidName::NCD, AvoidName::ND,  AvoidName::NDE};

inline std::string_view avoid_letters(AvoidName name) {
    switch (name) {
        case AvoidName::NA: return "A";
        case AvoidName::NAB: return "AB";
        case AvoidName::NAE: return "AE";
        case AvoidName::NBCF: return "BCF";
        case AvoidName::NBC: return "BC";
        case AvoidName::NC: return "C";
        case AvoidName::NCD: return "CD";
        case AvoidName::ND: return "D";
        case AvoidName::NDE: return "DE";
    }
    throw std::logic_error("unreachable");
}

inline std::string avoid_name_str(AvoidName name) { return "N_" + std::string(avoid_letters(name)); }

inline AvoidName parse_avoid_name(std::string_view s) {
    std::string_view letters = s;
    if (letters.starts_with("N_")) letters.remove_prefix(2);
    for (AvoidName name : all_avoid_names)
        if (avoid_letters(name) == letters) return name;
    throw std::invalid_argument("unknown avoided-word set name: " + std::string(s));
}

/// Constant-coefficient linear recurrence for the size of an avoided-word set,
/// together with the OEIS id recorded as metadata.
struct RecurrenceSpec {
    AvoidName name;
    std::vector<std::pair<int, long>> terms;  // (lag, coefficient)
    std::string_view oeis;

    int depth() const {
        int d = 0;
        for (auto [lag, c] : terms) d = std::max(d, lag);
        return d;
    }
};

inline const std::array<RecurrenceSpec, 9>& recurrence_table() {
    static const std::array<RecurrenceSpec, 9> table = {{
        {AvoidName::NA, {{1, 1}, {2, 1}}, "A000032"},
        {AvoidName::NAB, {{2, 1}, {3, 1}}, "A001608"},
        {AvoidName::NAE, {{1, 1}, {3, 1}}, "A001609"},
        {AvoidName::NBCF, {{2, 1}, {3, 2}}, "A072328"},
        {AvoidName::NBC, {{2, 1}, {3, 2}, {4, 1}}, "A007040"},
        {AvoidName::NC, {{1, 1}, {2, 1}, {3, 1}}, "A001644"},
        {AvoidName::NCD, {{1, 1}, {3, 1}}, "A001609"},
        {AvoidName::ND, {{1, 2}, {2, -1}, {3, 1}}, "A109377"},
        {AvoidName::NDE, {{1, 2}, {2, -1}, {4, 1}}, "A007039"},
    }};
    return table;
}

inline const RecurrenceSpec& recurrence_for(AvoidName name) {
    for (const RecurrenceSpec& spec : recurrence_table())
        if (spec.name == name) return spec;
    throw std::logic_error("unreachable");
}

/// Size of the avoided-word set, by recurrence. Initial terms are derived by
/// direct enumeration at n = 4 .. 3+depth, so the sequence cannot drift from
/// the sets it counts; beyond the seeds the recurrence extends to large n.
inline BigInt count_by_recurrence(AvoidName name, int n) {
    if (n < min_vertices) throw std::invalid_argument("counts are defined for n >= 4");
    static std::mutex mutex;
    static std::map<AvoidName, std::vector<BigInt>> cache;  // values from index 4
    std::lock_guard<std::mutex> lock(mutex);
    const RecurrenceSpec& spec = recurrence_for(name);
    std::vector<BigInt>& seq = cache[name];
    if (seq.empty())
        for (int m = 0; m < spec.depth(); ++m)
            seq.push_back(BigInt(avoid_set(min_vertices + m, avoid_letters(name)).size()));
    while (static_cast<int>(seq.size()) <= n - min_vertices) {
        const int next = min_vertices + static_cast<int>(seq.size());
        BigInt v = 0;
        for (auto [lag, c] : spec.terms) v += c * seq[static_cast<std::size_t>(next - lag - min_vertices)];
        seq.push_back(std::move(v));
    }
    return seq[static_cast<std::size_t>(n - min_vertices)];
}

/// Closed-form orbit count for a representative rule.
inline BigInt orbit_count_formula(Rule rule, int n) {
    if (n < min_vertices) throw std::invalid_argument("orbit counts are defined for n >= 4");
    auto named = [&](AvoidName name) { return count_by_recurrence(name, n); };
    switch (rule.code()) {
        case 0: case 8: case 32: case 40:
            return 1;
        case 128: case 136: case 160: case 168: case 152: case 184:
            return 2;
        case 4: case 12:
            return named(AvoidName::NA);
        case 132: case 140:
            return named(AvoidName::NA) + 1;
        case 5: case 13:
            return named(AvoidName::NAB);
        case 133: case 141:
            return named(AvoidName::NAB) + 1;
        case 164: case 172:
            return named(AvoidName::NAE) + 1;
        case 77:
            return named(AvoidName::NBC);
        case 76:
            return named(AvoidName::NC);
        case 72:
            return named(AvoidName::NCD);
        case 200:
            return named(AvoidName::ND);
        case 232:
            return named(AvoidName::NDE);
        case 204:
            return big_pow2(static_cast<unsigned>(n));
        case 51: case 57:
            return 1;
        case 60: case 54:
            return 2;
        case 150:
            return n / 2 + 2;
        case 105:
            // odd n: 2; n twice odd: 2*floor(n/4)+4; n divisible by 4: 2*floor(n/4)+2
            if (n % 2 == 1) return 2;
            return (n % 4 == 0) ? BigInt(2 * (n / 4) + 2) : BigInt(2 * (n / 4) + 4);
        case 156:
            return lucas(n) + 1;
        case 201:
            return named(AvoidName::ND);
        case 28:
            return named(AvoidName::NAB) + 1;
        case 29:
            return named(AvoidName::NAB);
        case 1: case 9:
            return 1;
        case 129: case 137:
            return 2;
        case 73:
            return named(AvoidName::NCD);
        default:
            throw std::invalid_argument("orbit_count_formula: rule is not a representative");
    }
}

}  // namespace aca
